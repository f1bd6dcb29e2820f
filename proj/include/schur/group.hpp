#pragma once

// Finite groups with full element enumeration.
//
// Two representations share one uniform element type (index vectors):
// permutation groups store images of 0..deg-1, polycyclic groups store
// normal-form exponent vectors.  Everything downstream works with element
// indices into the sorted element list; subgroups are sorted index vectors.
// The scale of interest is desk-size (orders in the thousands), so the
// algorithms favour exhaustive scans over clever data structures.

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <variant>
#include <vector>

#include "schur/common.hpp"
#include "schur/numtheory.hpp"
#include "schur/pc.hpp"
#include "schur/perm.hpp"

namespace schur {

struct PermRep {
  u64 degree;
};

struct GroupEmbedding;   // subgroup with its inclusion map
struct GroupQuotient;    // quotient with its projection map
struct PcConversion;     // polycyclic copy with both isomorphism directions

// Conjugacy classes in a fixed canonical order: ascending element order,
// then class size, then smallest member index.
struct Classes {
  std::vector<std::uint32_t> rep;                  // representative element index
  std::vector<std::vector<std::uint32_t>> members; // sorted element indices
  std::vector<std::uint32_t> of_elt;               // element index -> class index
  std::vector<u64> elt_order;                      // order of class elements
  std::vector<std::uint32_t> inv_class;            // class of inverses

  std::size_t count() const { return rep.size(); }
  u64 size(std::size_t c) const { return members[c].size(); }
};

class Group {
 public:
  static constexpr u64 kDefaultMaxOrder = 1000000;

  static Group permutation(u64 degree, std::vector<Elt> gens,
                           u64 max_order = kDefaultMaxOrder) {
    for (auto& g : gens)
      if (g.size() != degree) throw_domain("generator degree mismatch");
    return Group(PermRep{degree}, std::move(gens), max_order);
  }

  static Group polycyclic(PcRep rep, u64 max_order = kDefaultMaxOrder) {
    rep.validate();
    std::vector<Elt> gens;
    for (std::size_t i = 0; i < rep.ngens(); ++i) {
      Elt g(rep.ngens(), 0);
      g[i] = 1;
      gens.push_back(std::move(g));
    }
    return Group(std::move(rep), std::move(gens), max_order);
  }

  bool is_permutation() const {
    return std::holds_alternative<PermRep>(impl_->rep);
  }
  bool is_polycyclic() const { return !is_permutation(); }
  u64 degree() const { return std::get<PermRep>(impl_->rep).degree; }
  const PcRep& pc_presentation() const { return std::get<PcRep>(impl_->rep); }
  const std::vector<Elt>& generators() const { return impl_->gens; }

  // --- element-level operations (no enumeration required) ---

  Elt identity_elt() const {
    if (is_permutation()) return perm_identity(degree());
    return PcOps(pc_presentation()).identity();
  }
  Elt mul_elt(const Elt& a, const Elt& b) const {
    if (is_permutation()) return perm_mul(a, b);
    return PcOps(pc_presentation()).mul(a, b);
  }

  // --- enumerated access ---

  u64 order() const { return enumdata().elements.size(); }
  u64 exponent() const { return enumdata().exponent; }
  const std::vector<Elt>& elements() const { return enumdata().elements; }

  std::uint32_t index_of(const Elt& e) const {
    const EnumData& d = enumdata();
    if (is_polycyclic()) {
      u64 idx = PcOps(pc_presentation()).index_of(e);
      SCHUR_CHECK(idx < d.elements.size(), "element index out of range");
      return static_cast<std::uint32_t>(idx);
    }
    auto it = d.index.find(e);
    if (it == d.index.end()) throw_domain("element not in group");
    return it->second;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const EnumData& d = enumdata();
    return index_of(mul_elt(d.elements[a], d.elements[b]));
  }
  std::uint32_t inv(std::uint32_t a) const { return enumdata().inv[a]; }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
    return mul(mul(inv(g), x), g);
  }
  std::uint32_t power(std::uint32_t x, i64 k) const {
    u64 n = element_order(x);
    i64 r = k % static_cast<i64>(n);
    if (r < 0) r += static_cast<i64>(n);
    std::uint32_t acc = 0, base = x;
    u64 e = static_cast<u64>(r);
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
  u64 element_order(std::uint32_t x) const { return enumdata().ord[x]; }
  const std::vector<std::uint32_t>& generator_indices() const {
    return enumdata().gen_idx;
  }

  // --- conjugacy classes ---

  const Classes& classes() const {
    std::call_once(impl_->classes_once, [&] { build_classes(); });
    return *impl_->classes;
  }
  std::uint32_t class_of(std::uint32_t elt) const {
    return classes().of_elt[elt];
  }
  std::uint32_t class_of_power(std::uint32_t c, i64 k) const {
    return class_of(power(classes().rep[c], k));
  }
  // The permutation of class indices induced by g -> g^k.
  std::vector<std::uint32_t> class_power_map(i64 k) const {
    const Classes& cl = classes();
    std::vector<std::uint32_t> m(cl.count());
    for (std::size_t c = 0; c < cl.count(); ++c)
      m[c] = class_of_power(static_cast<std::uint32_t>(c), k);
    return m;
  }

  // --- subgroups as sorted element-index vectors ---

  std::vector<std::uint32_t> whole() const {
    std::vector<std::uint32_t> all(order());
    for (std::size_t i = 0; i < all.size(); ++i)
      all[i] = static_cast<std::uint32_t>(i);
    return all;
  }

  std::vector<std::uint32_t> closure(std::vector<std::uint32_t> seed) const {
    std::vector<bool> in(order(), false);
    std::vector<std::uint32_t> out{0}, queue{0};
    in[0] = true;
    for (auto s : seed)
      if (!in[s]) {
        in[s] = true;
        out.push_back(s);
        queue.push_back(s);
      }
    // right-multiplying by the seeds reaches every word in them
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (auto s : seed) {
        std::uint32_t y = mul(queue[qi], s);
        if (!in[y]) {
          in[y] = true;
          out.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::uint32_t> cyclic_subgroup(std::uint32_t x) const {
    return closure({x});
  }

  std::vector<std::uint32_t> small_generating_set(
      const std::vector<std::uint32_t>& subgroup) const {
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> have{0};
    for (auto x : subgroup) {
      if (std::binary_search(have.begin(), have.end(), x)) continue;
      gens.push_back(x);
      have = closure(gens);
      if (have.size() == subgroup.size()) break;
    }
    return gens;
  }

  bool is_subgroup(const std::vector<std::uint32_t>& elems) const {
    if (elems.empty() || elems[0] != 0) return false;
    return closure(small_generating_set(elems)) == elems;
  }

  std::vector<std::uint32_t> centralizer_of_set(
      const std::vector<std::uint32_t>& elems) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t g = 0; g < order(); ++g) {
      bool ok = true;
      for (auto x : elems)
        if (mul(g, x) != mul(x, g)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(g);
    }
    return out;
  }
  std::vector<std::uint32_t> centralizer_of_element(std::uint32_t x) const {
    return centralizer_of_set({x});
  }
  std::vector<std::uint32_t> center() const {
    return centralizer_of_set(enumdata().gen_idx);
  }

  std::vector<std::uint32_t> normalizer(
      const std::vector<std::uint32_t>& subgroup) const {
    auto gens = small_generating_set(subgroup);
    std::vector<std::uint32_t> out;
    for (std::uint32_t g = 0; g < order(); ++g) {
      bool ok = true;
      for (auto s : gens)
        if (!std::binary_search(subgroup.begin(), subgroup.end(),
                                conj(s, g))) {
          ok = false;
          break;
        }
      if (ok) out.push_back(g);
    }
    return out;
  }

  bool is_normal(const std::vector<std::uint32_t>& subgroup) const {
    for (auto s : small_generating_set(subgroup))
      for (auto g : enumdata().gen_idx)
        if (!std::binary_search(subgroup.begin(), subgroup.end(), conj(s, g)))
          return false;
    return true;
  }

  // Sylow p-subgroup of a subgroup, by normalizer growth: while P is not
  // yet full, its normalizer inside the subgroup contains a p-element
  // outside P, and adjoining one multiplies |P| by at least p.
  std::vector<std::uint32_t> sylow_within(
      const std::vector<std::uint32_t>& subgroup, u64 p) const {
    u64 target = p_part(subgroup.size(), p);
    std::vector<std::uint32_t> pgens;
    std::vector<std::uint32_t> P{0};
    while (P.size() < target) {
      bool grew = false;
      for (auto x : subgroup) {
        if (std::binary_search(P.begin(), P.end(), x)) continue;
        // keep only normalizing elements
        bool normalizes = true;
        for (auto s : pgens)
          if (!std::binary_search(P.begin(), P.end(), conj(s, x))) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
        u64 m = element_order(x);
        u64 pm = p_part(m, p);
        if (pm == 1) continue;
        std::uint32_t y = power(x, static_cast<i64>(m / pm));
        if (std::binary_search(P.begin(), P.end(), y)) continue;
        pgens.push_back(y);
        P = closure(pgens);
        SCHUR_CHECK(p_part(P.size(), p) == P.size(), "Sylow growth left p");
        grew = true;
        break;
      }
      SCHUR_CHECK(grew, "Sylow subgroup construction stalled");
    }
    return P;
  }
  std::vector<std::uint32_t> sylow(u64 p) const {
    return sylow_within(whole(), p);
  }

  std::vector<std::uint32_t> normal_closure_within(
      const std::vector<std::uint32_t>& ambient_gens,
      std::vector<std::uint32_t> seed) const {
    while (true) {
      std::vector<std::uint32_t> D = closure(seed);
      bool added = false;
      for (auto d : small_generating_set(D))
        for (auto g : ambient_gens) {
          std::uint32_t c = conj(d, g);
          if (!std::binary_search(D.begin(), D.end(), c)) {
            seed.push_back(c);
            added = true;
          }
        }
      if (!added) return D;
    }
  }

  std::vector<std::uint32_t> derived_within(
      const std::vector<std::uint32_t>& subgroup) const {
    auto gens = small_generating_set(subgroup);
    std::vector<std::uint32_t> seed;
    for (auto a : gens)
      for (auto b : gens) {
        std::uint32_t c = mul(mul(inv(a), inv(b)), mul(a, b));
        if (c != 0) seed.push_back(c);
      }
    return normal_closure_within(gens, std::move(seed));
  }
  std::vector<std::uint32_t> derived_subgroup() const {
    return derived_within(whole());
  }

  std::vector<std::uint32_t> kernel_of_classes(
      const std::vector<bool>& class_in_kernel) const {
    const Classes& cl = classes();
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < cl.count(); ++c)
      if (class_in_kernel[c])
        out.insert(out.end(), cl.members[c].begin(), cl.members[c].end());
    std::sort(out.begin(), out.end());
    SCHUR_CHECK(is_subgroup(out), "class union is not a subgroup");
    return out;
  }

  // --- structure predicates ---

  bool generators_commute(const std::vector<std::uint32_t>& gens) const {
    for (auto a : gens)
      for (auto b : gens)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  bool is_abelian_set(const std::vector<std::uint32_t>& elems) const {
    return generators_commute(small_generating_set(elems));
  }
  bool is_abelian() const { return generators_commute(enumdata().gen_idx); }
  bool is_cyclic_set(const std::vector<std::uint32_t>& elems) const {
    for (auto x : elems)
      if (element_order(x) == elems.size()) return true;
    return false;
  }
  bool is_p_group_set(const std::vector<std::uint32_t>& elems, u64 p) const {
    return p_part(elems.size(), p) == elems.size();
  }
  bool is_elementary_abelian_set(
      const std::vector<std::uint32_t>& elems) const {
    if (elems.size() == 1) return true;
    if (!is_abelian_set(elems)) return false;
    u64 p = element_order(elems[1]);
    if (!is_prime(p)) return false;
    for (auto x : elems)
      if (x != 0 && element_order(x) != p) return false;
    return true;
  }

  // Quaternion recognition: among the order-8 groups, having a unique
  // involution and exponent 4 pins down Q8.
  bool is_q8_set(const std::vector<std::uint32_t>& elems) const {
    if (elems.size() != 8) return false;
    std::size_t involutions = 0;
    u64 exp = 1;
    for (auto x : elems) {
      u64 o = element_order(x);
      if (o == 2) ++involutions;
      exp = lcm_u64(exp, o);
    }
    return involutions == 1 && exp == 4;
  }
  bool is_isomorphic_to_q8() const { return is_q8_set(whole()); }

  // Elements of order coprime to q; for groups quasi-elementary at q this
  // set is the cyclic normal q-complement.
  std::vector<std::uint32_t> coprime_order_elements(u64 q) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < order(); ++x)
      if (element_order(x) % q != 0) out.push_back(x);
    return out;
  }

  bool is_quasi_elementary_at(u64 q) const {
    u64 target = pprime_part(order(), q);
    auto elems = coprime_order_elements(q);
    if (elems.size() != target) return false;
    for (auto x : elems)
      if (element_order(x) == target) return true;
    return false;
  }

  // --- derived groups: subgroups, quotients, polycyclic form ---

  GroupEmbedding subgroup_group(const std::vector<std::uint32_t>& elems) const;
  GroupQuotient quotient(const std::vector<std::uint32_t>& nsub) const;
  PcConversion to_polycyclic() const;

  // --- cyclic subgroups up to conjugacy ---

  struct CyclicRec {
    std::uint32_t generator_class;        // canonical generating class
    std::vector<std::uint32_t> elems;
  };

  // One representative per conjugacy class of cyclic subgroups; when
  // coprime_to != 0, only subgroups of order coprime to it (built from the
  // coprime parts of class representatives).
  std::vector<CyclicRec> cyclic_subgroups_up_to_conjugacy(
      u64 coprime_to = 0) const {
    const Classes& cl = classes();
    std::vector<CyclicRec> out;
    std::vector<bool> seen(cl.count(), false);
    for (std::uint32_t c = 0; c < cl.count(); ++c) {
      std::uint32_t cc = c;
      if (coprime_to != 0) {
        u64 m = cl.elt_order[c];
        cc = class_of_power(c, static_cast<i64>(p_part(m, coprime_to)));
      }
      if (seen[cc]) continue;
      // canonical key: smallest class containing a generator of <rep>
      u64 m = cl.elt_order[cc];
      std::uint32_t key = cc;
      for (u64 k = 1; k < m; ++k)
        if (std::gcd(k, m) == 1)
          key = std::min(key, class_of_power(cc, static_cast<i64>(k)));
      if (seen[key]) {
        seen[cc] = true;
        continue;
      }
      for (u64 k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1)
          seen[class_of_power(key, static_cast<i64>(k))] = true;
      out.push_back({key, cyclic_subgroup(cl.rep[key])});
    }
    return out;
  }

  std::vector<std::vector<std::uint32_t>> maximal_subgroups_quasielementary2()
      const;

  std::vector<std::vector<std::uint32_t>> all_subgroups(
      std::size_t limit = 100000) const {
    std::vector<std::vector<std::uint32_t>> out;
    std::unordered_map<std::vector<std::uint32_t>, bool, VecHash> seen;
    std::vector<std::uint32_t> trivial{0};
    out.push_back(trivial);
    seen[trivial] = true;
    for (std::size_t qi = 0; qi < out.size(); ++qi) {
      std::vector<std::uint32_t> H = out[qi];
      if (H.size() == order()) continue;
      auto gens = small_generating_set(H);
      for (std::uint32_t x = 1; x < order(); ++x) {
        if (std::binary_search(H.begin(), H.end(), x)) continue;
        gens.push_back(x);
        auto K = closure(gens);
        gens.pop_back();
        if (!seen[K]) {
          seen[K] = true;
          out.push_back(std::move(K));
          if (out.size() > limit)
            throw_resource("subgroup lattice exceeds configured bound");
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    return out;
  }

 private:
  struct EnumData {
    std::vector<Elt> elements;
    std::unordered_map<Elt, std::uint32_t, VecHash> index;  // perm kind only
    std::vector<std::uint32_t> gen_idx;
    std::vector<std::uint32_t> inv;
    std::vector<u64> ord;
    u64 exponent = 1;
  };

  struct Impl {
    std::variant<PermRep, PcRep> rep;
    std::vector<Elt> gens;
    u64 max_order;

    mutable std::once_flag enum_once;
    mutable std::unique_ptr<const EnumData> enum_data;
    mutable std::once_flag classes_once;
    mutable std::unique_ptr<const Classes> classes;
  };

  std::shared_ptr<Impl> impl_;

  Group(std::variant<PermRep, PcRep> rep, std::vector<Elt> gens, u64 max_order)
      : impl_(std::make_shared<Impl>()) {
    impl_->rep = std::move(rep);
    impl_->gens = std::move(gens);
    impl_->max_order = max_order;
  }

  const EnumData& enumdata() const {
    std::call_once(impl_->enum_once, [&] { impl_->enum_data = enumerate(); });
    return *impl_->enum_data;
  }

  std::unique_ptr<const EnumData> enumerate() const;
  void build_classes() const;
  void validate_pc_consistency(const EnumData& d) const;
};

struct GroupEmbedding {
  Group group;
  std::vector<std::uint32_t> to_parent;  // child element index -> parent
};

struct GroupQuotient {
  Group group;
  std::vector<std::uint32_t> proj;  // parent element index -> quotient index
};

struct PcConversion {
  Group group;
  std::vector<std::uint32_t> to_pc;
  std::vector<std::uint32_t> from_pc;
};

inline GroupEmbedding Group::subgroup_group(
    const std::vector<std::uint32_t>& elems) const {
  auto gens = small_generating_set(elems);
  if (is_permutation()) {
    std::vector<Elt> child_gens;
    for (auto g : gens) child_gens.push_back(elements()[g]);
    Group child =
        Group::permutation(degree(), std::move(child_gens), order());
    SCHUR_CHECK(child.order() == elems.size(), "subgroup closure mismatch");
    std::vector<std::uint32_t> to_parent(child.order());
    for (std::uint32_t i = 0; i < child.order(); ++i)
      to_parent[i] = index_of(child.elements()[i]);
    return {std::move(child), std::move(to_parent)};
  }
  // regular action of the subgroup on itself
  auto pos = [&](std::uint32_t parent_idx) {
    auto it = std::lower_bound(elems.begin(), elems.end(), parent_idx);
    SCHUR_CHECK(it != elems.end() && *it == parent_idx, "subgroup not closed");
    return static_cast<std::uint32_t>(it - elems.begin());
  };
  std::vector<Elt> child_gens;
  for (auto g : gens) {
    Elt p(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      p[i] = pos(mul(elems[i], g));
    child_gens.push_back(std::move(p));
  }
  Group child =
      Group::permutation(elems.size(), std::move(child_gens), order());
  SCHUR_CHECK(child.order() == elems.size(), "regular action size mismatch");
  std::vector<std::uint32_t> to_parent(child.order());
  for (std::uint32_t i = 0; i < child.order(); ++i) {
    // the image of the identity position recovers the acting element
    to_parent[i] = elems[child.elements()[i][0]];
  }
  return {std::move(child), std::move(to_parent)};
}

inline GroupQuotient Group::quotient(
    const std::vector<std::uint32_t>& nsub) const {
  if (!is_subgroup(nsub)) throw_domain("quotient: not a subgroup");
  if (!is_normal(nsub)) throw_domain("quotient: subgroup is not normal");
  u64 n = order();
  std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (coset_of[i] != UINT32_MAX) continue;
    auto cid = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    for (auto x : nsub) {
      std::uint32_t j = mul(i, x);
      SCHUR_CHECK(coset_of[j] == UINT32_MAX, "coset partition clash");
      coset_of[j] = cid;
    }
  }
  u64 q = reps.size();
  SCHUR_CHECK(q * nsub.size() == n, "coset count mismatch");
  std::vector<Elt> qgens;
  for (auto g : enumdata().gen_idx) {
    Elt p(q);
    for (std::size_t c = 0; c < q; ++c) p[c] = coset_of[mul(reps[c], g)];
    qgens.push_back(std::move(p));
  }
  Group qg = Group::permutation(q, std::move(qgens), order());
  SCHUR_CHECK(qg.order() == q, "quotient action is not regular on cosets");
  // identify the quotient element induced by each coset representative
  std::vector<std::uint32_t> coset_to_q(q);
  for (std::size_t c = 0; c < q; ++c) {
    Elt p(q);
    for (std::size_t c2 = 0; c2 < q; ++c2)
      p[c2] = coset_of[mul(reps[c2], reps[c])];
    coset_to_q[c] = qg.index_of(p);
  }
  std::vector<std::uint32_t> proj(n);
  for (std::uint32_t i = 0; i < n; ++i) proj[i] = coset_to_q[coset_of[i]];
  for (auto a : enumdata().gen_idx)
    for (auto b : enumdata().gen_idx)
      SCHUR_CHECK(proj[mul(a, b)] == qg.mul(proj[a], proj[b]),
                  "projection is not a homomorphism");
  if (is_polycyclic()) {
    // keep quotients of polycyclic groups polycyclic
    PcConversion conv = qg.to_polycyclic();
    for (auto& x : proj) x = conv.to_pc[x];
    return {std::move(conv.group), std::move(proj)};
  }
  return {std::move(qg), std::move(proj)};
}

inline std::unique_ptr<const Group::EnumData> Group::enumerate() const {
  auto d = std::make_unique<EnumData>();
  if (is_permutation()) {
    std::unordered_map<Elt, std::uint32_t, VecHash> found;
    std::vector<Elt> queue{perm_identity(degree())};
    found.emplace(queue[0], 0);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (auto& g : impl_->gens) {
        Elt y = perm_mul(queue[qi], g);
        if (found.emplace(y, static_cast<std::uint32_t>(queue.size()))
                .second) {
          queue.push_back(std::move(y));
          if (queue.size() > impl_->max_order)
            throw_resource("group order exceeds configured bound");
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    d->elements = std::move(queue);
    d->index.reserve(d->elements.size() * 2);
    for (std::uint32_t i = 0; i < d->elements.size(); ++i)
      d->index.emplace(d->elements[i], i);
  } else {
    const PcRep& rep = pc_presentation();
    PcOps ops(rep);
    u64 size = rep.presented_order();
    if (size > impl_->max_order)
      throw_resource("group order exceeds configured bound");
    d->elements.reserve(size);
    for (u64 i = 0; i < size; ++i) d->elements.push_back(ops.element_at(i));
  }
  SCHUR_CHECK(!d->elements.empty() &&
                  d->elements[0] == identity_elt(),
              "identity must sort first");

  auto lookup = [&](const Elt& e) -> std::uint32_t {
    if (is_polycyclic())
      return static_cast<std::uint32_t>(
          PcOps(pc_presentation()).index_of(e));
    return d->index.at(e);
  };

  d->gen_idx.clear();
  for (auto& g : impl_->gens) d->gen_idx.push_back(lookup(g));

  u64 n = d->elements.size();
  d->ord.assign(n, 0);
  d->inv.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    u64 o = 1;
    Elt prev = d->elements[i];
    Elt x = d->elements[i];
    while (x != d->elements[0]) {
      prev = x;
      x = mul_elt(x, d->elements[i]);
      ++o;
      SCHUR_CHECK(o <= n, "element order exceeds group order");
    }
    d->ord[i] = o;
    d->inv[i] = lookup(o == 1 ? d->elements[0] : prev);
    d->exponent = lcm_u64(d->exponent, o);
  }

  if (is_polycyclic()) validate_pc_consistency(*d);
  return d;
}

// A polycyclic presentation is accepted only if right multiplication by
// each generator permutes the normal forms, the defining relations hold as
// permutation identities, and the identity's orbit covers every normal
// form.  Together these force the collected product to be the group law of
// a group of exactly the presented order.
inline void Group::validate_pc_consistency(const EnumData& d) const {
  const PcRep& rep = pc_presentation();
  PcOps ops(rep);
  u64 n = d.elements.size();
  std::size_t k = rep.ngens();
  std::vector<std::vector<std::uint32_t>> tab(k);
  for (std::size_t j = 0; j < k; ++j) {
    tab[j].resize(n);
    std::vector<bool> hit(n, false);
    for (u64 i = 0; i < n; ++i) {
      u64 y = ops.index_of(ops.mul(d.elements[i], impl_->gens[j]));
      tab[j][i] = static_cast<std::uint32_t>(y);
      if (hit[y])
        throw_domain("inconsistent presentation: generator map not bijective");
      hit[y] = true;
    }
  }
  auto apply_word = [&](const Elt& w, std::uint32_t x) {
    if (w.empty()) return x;
    for (std::size_t j = 0; j < k; ++j)
      for (std::uint32_t t = 0; t < w[j]; ++t) x = tab[j][x];
    return x;
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (u64 x = 0; x < n; ++x) {
      std::uint32_t lhs = static_cast<std::uint32_t>(x);
      for (std::uint32_t t = 0; t < rep.relord[i]; ++t) lhs = tab[i][lhs];
      if (lhs != apply_word(rep.power_tail[i], static_cast<std::uint32_t>(x)))
        throw_domain("inconsistent presentation: power relation fails");
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      for (u64 x = 0; x < n; ++x) {
        std::uint32_t lhs = tab[i][tab[j][x]];          // x * g_j * g_i
        std::uint32_t rhs = tab[i][static_cast<std::uint32_t>(x)];
        const Elt& w = rep.conj[i][j];
        rhs = w.empty() ? tab[j][rhs] : apply_word(w, rhs);
        if (lhs != rhs)
          throw_domain("inconsistent presentation: conjugate relation fails");
      }
    }
  }
  // reachability of every normal form from the identity
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint32_t y = tab[j][queue[qi]];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  if (queue.size() != n)
    throw_domain("inconsistent presentation: unreachable normal forms");
}

inline void Group::build_classes() const {
  const EnumData& d = enumdata();
  u64 n = d.elements.size();
  auto cl = std::make_unique<Classes>();
  cl->of_elt.assign(n, UINT32_MAX);
  std::vector<std::uint32_t> ginv;
  for (auto g : d.gen_idx) ginv.push_back(d.inv[g]);
  std::vector<std::uint32_t> order_ids;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cl->of_elt[i] != UINT32_MAX) continue;
    auto cid = static_cast<std::uint32_t>(cl->rep.size());
    std::vector<std::uint32_t> orbit{i};
    cl->of_elt[i] = cid;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (std::size_t t = 0; t < d.gen_idx.size(); ++t) {
        std::uint32_t y = mul(mul(ginv[t], orbit[qi]), d.gen_idx[t]);
        if (cl->of_elt[y] == UINT32_MAX) {
          cl->of_elt[y] = cid;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cl->rep.push_back(i);
    cl->members.push_back(std::move(orbit));
    cl->elt_order.push_back(d.ord[i]);
  }
  // canonical order: element order, then class size, then representative
  std::vector<std::uint32_t> perm(cl->rep.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (cl->elt_order[a] != cl->elt_order[b])
      return cl->elt_order[a] < cl->elt_order[b];
    if (cl->members[a].size() != cl->members[b].size())
      return cl->members[a].size() < cl->members[b].size();
    return cl->rep[a] < cl->rep[b];
  });
  auto reordered = std::make_unique<Classes>();
  std::vector<std::uint32_t> newpos(perm.size());
  for (std::uint32_t newc = 0; newc < perm.size(); ++newc) {
    std::uint32_t oldc = perm[newc];
    newpos[oldc] = newc;
    reordered->rep.push_back(cl->rep[oldc]);
    reordered->members.push_back(std::move(cl->members[oldc]));
    reordered->elt_order.push_back(cl->elt_order[oldc]);
  }
  reordered->of_elt.assign(n, 0);
  for (u64 i = 0; i < n; ++i) reordered->of_elt[i] = newpos[cl->of_elt[i]];
  reordered->inv_class.resize(perm.size());
  for (std::uint32_t c = 0; c < perm.size(); ++c)
    reordered->inv_class[c] = reordered->of_elt[d.inv[reordered->rep[c]]];
  impl_->classes = std::move(reordered);
}

inline PcConversion Group::to_polycyclic() const {
  // refine the derived series to a chain with prime-index steps
  std::vector<std::vector<std::uint32_t>> series{whole()};
  {
    std::vector<std::uint32_t> D = whole();
    while (D.size() > 1) {
      std::vector<std::uint32_t> Dn = derived_within(D);
      if (Dn.size() == D.size())
        throw_domain("polycyclic conversion requires a soluble group");
      // ascend from Dn to D one prime at a time
      std::vector<std::vector<std::uint32_t>> block{Dn};
      std::vector<std::uint32_t> T = Dn;
      while (T.size() < D.size()) {
        std::uint32_t x = 0;
        for (auto e : D)
          if (!std::binary_search(T.begin(), T.end(), e)) {
            x = e;
            break;
          }
        u64 o = 0;
        for (u64 k : divisors(element_order(x)))
          if (std::binary_search(T.begin(), T.end(),
                                 power(x, static_cast<i64>(k)))) {
            o = k;
            break;
          }
        SCHUR_CHECK(o > 1, "refinement found no proper step");
        auto tg = small_generating_set(T);
        u64 left = o;
        while (left > 1) {
          u64 p = prime_divisors(left)[0];
          left /= p;
          tg.push_back(power(x, static_cast<i64>(left)));
          auto next = closure(tg);
          SCHUR_CHECK(next.size() == T.size() * p, "refinement step size");
          T = std::move(next);
          block.push_back(T);
        }
      }
      SCHUR_CHECK(T == D, "refinement did not reach the top");
      for (std::size_t b = block.size() - 1; b-- > 0;)
        series.push_back(block[b]);
      D = std::move(Dn);
    }
  }
  std::size_t m = series.size() - 1;  // number of pc generators
  std::vector<std::uint32_t> pcgen(m);
  std::vector<std::uint32_t> rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = static_cast<std::uint32_t>(series[i].size() / series[i + 1].size());
    SCHUR_CHECK(is_prime(rel[i]), "series step is not prime");
    for (auto e : series[i])
      if (!std::binary_search(series[i + 1].begin(), series[i + 1].end(), e)) {
        pcgen[i] = e;
        break;
      }
  }
  auto express = [&](std::uint32_t g) {
    Elt e(m, 0);
    std::uint32_t cur = g;
    for (std::size_t i = 0; i < m; ++i) {
      std::uint32_t ai = inv(pcgen[i]);
      std::uint32_t cand = cur;
      std::uint32_t k = 0;
      while (!std::binary_search(series[i + 1].begin(), series[i + 1].end(),
                                 cand)) {
        cand = mul(ai, cand);
        ++k;
        SCHUR_CHECK(k < rel[i], "normal form extraction failed");
      }
      e[i] = k;
      cur = cand;
    }
    SCHUR_CHECK(cur == 0, "normal form leaves a remainder");
    return e;
  };
  PcRep rep;
  rep.relord = rel;
  rep.power_tail.resize(m);
  rep.conj.assign(m, std::vector<Elt>(m));
  auto is_id_word = [](const Elt& w) {
    for (auto x : w)
      if (x) return false;
    return true;
  };
  for (std::size_t i = 0; i < m; ++i) {
    Elt t = express(power(pcgen[i], static_cast<i64>(rel[i])));
    if (!is_id_word(t)) rep.power_tail[i] = std::move(t);
    for (std::size_t j = i + 1; j < m; ++j) {
      Elt w = express(conj(pcgen[j], pcgen[i]));
      // default (empty) means the generators commute
      Elt plain(m, 0);
      plain[j] = 1;
      if (w != plain) rep.conj[i][j] = std::move(w);
    }
  }
  Group pc = Group::polycyclic(std::move(rep), impl_->max_order);
  SCHUR_CHECK(pc.order() == order(), "polycyclic image has wrong order");
  std::vector<std::uint32_t> to_pc(order()), from_pc(order());
  for (std::uint32_t g = 0; g < order(); ++g)
    to_pc[g] = pc.index_of(express(g));
  for (std::uint32_t i = 0; i < order(); ++i) {
    const Elt& e = pc.elements()[i];
    std::uint32_t acc = 0;
    for (std::size_t t = 0; t < m; ++t)
      acc = mul(acc, power(pcgen[t], e[t]));
    from_pc[i] = acc;
  }
  for (std::uint32_t g = 0; g < order(); ++g)
    SCHUR_CHECK(from_pc[to_pc[g]] == g, "isomorphism round-trip failed");
  return {std::move(pc), std::move(to_pc), std::move(from_pc)};
}

inline std::vector<std::vector<std::uint32_t>>
Group::maximal_subgroups_quasielementary2() const {
  if (!is_quasi_elementary_at(2))
    throw_domain("maximal subgroups supported only quasi-elementary at 2");
  std::vector<std::vector<std::uint32_t>> out;
  auto A = coprime_order_elements(2);
  SCHUR_CHECK(is_subgroup(A), "odd-order elements fail to form a subgroup");
  if (order() == 1) return out;

  // (i) index-2 subgroups: kernels of the homomorphisms onto C2.  Work in
  // G modulo the closure of squares and commutators; what is left is
  // elementary abelian.
  {
    std::vector<std::uint32_t> seed;
    for (auto g : enumdata().gen_idx) {
      seed.push_back(mul(g, g));
      for (auto h : enumdata().gen_idx)
        seed.push_back(mul(mul(inv(g), inv(h)), mul(g, h)));
    }
    auto K = normal_closure_within(enumdata().gen_idx, std::move(seed));
    GroupQuotient W = quotient(K);
    u64 wn = W.group.order();
    SCHUR_CHECK(W.group.exponent() <= 2, "Frattini-style quotient too rich");
    // assign F2 coordinates by extending through a growing basis
    std::vector<std::uint32_t> coords(wn, UINT32_MAX);
    coords[0] = 0;
    std::vector<std::uint32_t> assigned{0};
    unsigned bits = 0;
    for (std::uint32_t x = 1; x < wn; ++x) {
      if (coords[x] != UINT32_MAX) continue;
      std::uint32_t bit = 1u << bits++;
      std::size_t prev = assigned.size();
      for (std::size_t t = 0; t < prev; ++t) {
        std::uint32_t y = W.group.mul(assigned[t], x);
        SCHUR_CHECK(coords[y] == UINT32_MAX, "coordinate clash");
        coords[y] = coords[assigned[t]] | bit;
        assigned.push_back(y);
      }
    }
    SCHUR_CHECK(assigned.size() == wn, "coordinate assignment incomplete");
    for (std::uint32_t w = 1; w < wn; ++w) {
      std::vector<std::uint32_t> M;
      for (std::uint32_t g = 0; g < order(); ++g) {
        std::uint32_t c = coords[W.proj[g]] & w;
        if (std::popcount(c) % 2 == 0) M.push_back(g);
      }
      SCHUR_CHECK(M.size() * 2 == order(), "index-2 member count");
      out.push_back(std::move(M));
    }
  }

  // (ii) one class per odd prime r dividing |A|: drop to G/B with B the
  // index-r subgroup of A; the maximal subgroups avoiding A are exactly the
  // preimages of the Sylow 2-subgroups there, and those are all conjugate.
  if (A.size() > 1) {
    std::uint32_t a = 0;
    for (auto x : A)
      if (element_order(x) == A.size()) {
        a = x;
        break;
      }
    SCHUR_CHECK(a != 0, "q-complement is not cyclic");
    for (u64 r : prime_divisors(A.size())) {
      auto B = cyclic_subgroup(power(a, static_cast<i64>(r)));
      SCHUR_CHECK(B.size() * r == A.size(), "index-r subgroup size");
      GroupQuotient Q = quotient(B);
      auto S = Q.group.sylow(2);
      std::vector<std::uint32_t> M;
      for (std::uint32_t g = 0; g < order(); ++g)
        if (std::binary_search(S.begin(), S.end(), Q.proj[g]))
          M.push_back(g);
      SCHUR_CHECK(M.size() * r == order(), "odd-index member count");
      out.push_back(std::move(M));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  return out;
}

}  // namespace schur
