#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schur/chartab.hpp"
#include "schur/padic.hpp"

namespace schur {

// Tuning knobs for the index computation.
struct EngineOptions {
  bool verbose = false;           // keep local entries that are exactly 1
  bool use_block_formula = true;  // allow the cyclic-defect block shortcut
  u64 max_subgroup_order = 0;     // skip search candidates above this (0 = off)
  bool table_only = false;        // bounds and place counting only, no subgroups
};

// One step in the derivation of a result.  `place` is "global", "inf" or a
// decimal prime; `tag` names the tool that produced the step.
struct ProvenanceEntry {
  std::string place;
  std::string tag;
  std::string detail;
};

struct LocalIndex {
  u64 p = 2;
  u64 value = 1;  // exact local index, or the best upper bound when !exact
  bool exact = true;
};

struct SchurIndexResult {
  std::size_t row = 0;
  u64 degree = 1;
  int indicator = 1;
  FieldSubgroup field;  // the character field as a fixed field in Q(zeta_N)
  u64 m_infinity = 1;
  std::vector<LocalIndex> locals;  // ascending p; exact ones hidden unless verbose
  u64 total = 1;  // lcm over all places (an upper bound unless total_exact)
  bool resolved = true;     // every local factor is pinned down
  bool total_exact = true;  // the lcm is pinned even if some factors are open
  std::vector<ProvenanceEntry> provenance;
};

// Upper-bound state for one finite place while a character is in flight.
struct LocalBound {
  u64 p;
  u64 bound;
  bool exact;
  u64 places;  // number of places of the character field above p
};

// Order data of the image G/ker(chi), recoverable from the table alone: the
// kernel classes are those where the value equals the degree, and the order
// of the image of x is the least d with x^d in the kernel.
struct EffectiveGroupData {
  u64 order;
  u64 exponent;
  std::vector<u64> orders;  // order of the image of each class representative
};

inline EffectiveGroupData effective_group_data(const CharacterTable& T,
                                               std::size_t row) {
  auto kc = kernel_classes(T, row);
  std::vector<bool> inker(T.num_classes(), false);
  u64 ksize = 0;
  for (auto c : kc) {
    inker[c] = true;
    ksize += T.class_size(c);
  }
  SCHUR_CHECK(ksize >= 1 && T.group_order() % ksize == 0,
              "kernel size does not divide the group order");
  EffectiveGroupData d;
  d.order = T.group_order() / ksize;
  d.exponent = 1;
  d.orders.resize(T.num_classes());
  for (std::size_t c = 0; c < T.num_classes(); ++c) {
    auto divs = divisors(T.class_order(c));
    std::sort(divs.begin(), divs.end());
    u64 img = T.class_order(c);
    for (u64 k : divs)
      if (inker[T.power_class(c, static_cast<i64>(k))]) {
        img = k;
        break;
      }
    d.orders[c] = img;
    d.exponent = lcm_u64(d.exponent, img);
  }
  return d;
}

// Shared state for one character table: the table, the group when there is
// one, and memoized per-prime and per-subgroup data.  Accessors serialize on
// an internal mutex, so a single context can back several worker threads.
class SchurContext {
 public:
  explicit SchurContext(const Group& G)
      : group_(G), table_(CharacterTable::compute(G)) {}
  explicit SchurContext(CharacterTable T) : table_(std::move(T)) {
    if (table_.attached()) group_ = table_.group();
  }

  SchurContext(const SchurContext&) = delete;
  SchurContext& operator=(const SchurContext&) = delete;

  const CharacterTable& table() const { return table_; }
  bool attached() const { return group_.has_value(); }
  const Group& group() const {
    SCHUR_CHECK(group_.has_value(), "context has no group attached");
    return *group_;
  }

  const std::vector<Block>& blocks(u64 p) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = blocks_.find(p);
    if (it == blocks_.end()) it = blocks_.emplace(p, p_blocks(table_, p)).first;
    return it->second;
  }

  const PAdicGaloisGroup& padic(u64 p) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = padics_.find(p);
    if (it == padics_.end())
      it = padics_.emplace(p, padic_galois(p, table_.exponent())).first;
    return it->second;
  }

  const FieldSubgroup& field(std::size_t row) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = fields_.find(row);
    if (it == fields_.end())
      it = fields_.emplace(row, character_field(table_, row)).first;
    return it->second;
  }

  struct SubgroupRec {
    GroupEmbedding emb;
    CharacterTable table;
    std::vector<std::uint32_t> fusion;  // subgroup class -> parent class
  };

  // Subgroup with its own table and class fusion, built once per element set.
  const SubgroupRec& subgroup(const std::vector<std::uint32_t>& elems) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = subgroups_.find(elems);
    if (it == subgroups_.end()) {
      auto build = [&]() -> SubgroupRec {
        if (elems.size() == group().order()) {
          // the whole group: reuse the parent table with identity fusion
          std::vector<std::uint32_t> ident(elems.size());
          for (std::uint32_t i = 0; i < ident.size(); ++i) ident[i] = i;
          std::vector<std::uint32_t> idfus(table_.num_classes());
          for (std::uint32_t c = 0; c < idfus.size(); ++c) idfus[c] = c;
          return SubgroupRec{GroupEmbedding{*group_, std::move(ident)}, table_,
                             std::move(idfus)};
        }
        GroupEmbedding emb = group().subgroup_group(elems);
        CharacterTable sub = CharacterTable::compute(emb.group);
        auto fus = class_fusion(emb, group());
        return SubgroupRec{std::move(emb), std::move(sub), std::move(fus)};
      };
      it = subgroups_.emplace(elems, build()).first;
    }
    return it->second;
  }

  struct QuotientHandle {
    SchurContext* ctx;
    std::size_t row;
    u64 kernel_order;
  };

  // Context for G/ker(chi) together with the row affording chi there.
  QuotientHandle faithful_quotient(std::size_t row);

  // Stored result whose row is `row` or a Galois conjugate of it, if any.
  // Conjugate characters have identical invariants, so one run answers the
  // whole orbit; only runs that needed real work get stored.
  const SchurIndexResult* cached_conjugate(const EngineOptions& opt,
                                           std::size_t row) {
    std::lock_guard<std::mutex> lk(mu_);
    auto& reps = results_[result_key(opt)];
    std::vector<u64> units;
    for (auto& [rep, res] : reps) {
      if (rep == row) return &res;
      if (table_.degree(rep) != table_.degree(row)) continue;
      if (units.empty()) units = units_mod(table_.exponent());
      for (u64 u : units)
        if (galois_conjugate_row(table_, rep, u) == row) return &res;
    }
    return nullptr;
  }

  void store_result(const EngineOptions& opt, const SchurIndexResult& res) {
    std::lock_guard<std::mutex> lk(mu_);
    results_[result_key(opt)].emplace(res.row, res);
  }

 private:
  std::optional<Group> group_;
  CharacterTable table_;
  std::mutex mu_;
  std::map<u64, std::vector<Block>> blocks_;
  std::map<u64, PAdicGaloisGroup> padics_;
  std::map<std::size_t, FieldSubgroup> fields_;
  std::map<std::vector<std::uint32_t>, SubgroupRec> subgroups_;
  struct QuotientRec {
    GroupQuotient gq;
    std::unique_ptr<SchurContext> ctx;
  };
  std::map<std::vector<std::uint32_t>, QuotientRec> quotients_;
  using ResultKey = std::tuple<bool, bool, bool, u64>;
  static ResultKey result_key(const EngineOptions& o) {
    return {o.verbose, o.use_block_formula, o.table_only,
            o.max_subgroup_order};
  }
  std::map<ResultKey, std::map<std::size_t, SchurIndexResult>> results_;
};

namespace detail_engine {

inline std::vector<std::uint32_t> intersect_sorted(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// |{x*y : x in A, y in B}| inside G.
inline u64 product_set_size(const Group& G,
                            const std::vector<std::uint32_t>& A,
                            const std::vector<std::uint32_t>& B) {
  std::set<std::uint32_t> prod;
  for (auto a : A)
    for (auto b : B) prod.insert(G.mul(a, b));
  return prod.size();
}

// A/B cyclic for B normal in A: some single coset must generate.
inline bool cyclic_section(const Group& G, const std::vector<std::uint32_t>& A,
                           const std::vector<std::uint32_t>& B) {
  if (A.size() == B.size()) return true;
  for (auto a : A) {
    auto gens = B;
    gens.push_back(a);
    if (G.closure(gens).size() == A.size()) return true;
  }
  return false;
}

// Splits n as r * 2^k for an odd prime r.
inline bool odd_prime_times_two_power(u64 n, u64& r) {
  u64 odd = n / p_part(n, 2);
  if (odd <= 1 || !is_prime(odd)) return false;
  r = odd;
  return true;
}

inline u64 radical_of(u64 n) {
  u64 r = 1;
  for (auto pp : factorize(n)) r *= pp.p;
  return r;
}

// Row of the quotient table affording the deflation of `row`.
inline std::size_t deflated_row(const Group& G, const CharacterTable& T,
                                std::size_t row, const GroupQuotient& gq,
                                const CharacterTable& QT) {
  std::vector<Cyclo> expect(QT.num_classes());
  std::vector<bool> seen(QT.num_classes(), false);
  const Classes& pc = G.classes();
  for (std::size_t c = 0; c < T.num_classes(); ++c) {
    std::uint32_t qc = gq.group.class_of(gq.proj[pc.rep[c]]);
    if (seen[qc]) {
      SCHUR_CHECK(expect[qc] == T.value(row, c),
                  "character is not constant on kernel cosets");
    } else {
      expect[qc] = T.value(row, c);
      seen[qc] = true;
    }
  }
  for (std::size_t i = 0; i < QT.num_rows(); ++i)
    if (QT.row(i) == expect) return i;
  throw_internal("no quotient row affords the deflated character");
}

// Does the restriction of `row` to the cyclic group C have a linear
// constituent with multiplicity coprime to q?  Computed exactly from the
// Fourier coefficients of the restricted values.
inline bool core_restriction_positive(const Group& G, const CharacterTable& T,
                                      std::size_t row,
                                      const std::vector<std::uint32_t>& C,
                                      u64 q) {
  u64 m = C.size();
  if (m == 1) return T.degree(row) % q != 0;
  std::uint32_t gen = 0;
  bool found = false;
  for (auto x : C)
    if (G.element_order(x) == m) {
      gen = x;
      found = true;
      break;
    }
  SCHUR_CHECK(found, "cyclic subgroup without a generator");
  std::vector<Cyclo> vals(m);
  std::uint32_t cur = 0;
  for (u64 k = 0; k < m; ++k) {
    vals[k] = T.value(row, G.class_of(cur));
    cur = G.mul(cur, gen);
  }
  Cyclo inv_m{Rational(Int(1), Int(m))};
  for (u64 t = 0; t < m; ++t) {
    Cyclo s;
    for (u64 k = 0; k < m; ++k)
      s += vals[k] * Cyclo::root_of_unity(m, -static_cast<i64>(t * k % m));
    s = s * inv_m;
    SCHUR_CHECK(s.is_rational(), "restriction multiplicity is irrational");
    Rational r = s.rational_value();
    SCHUR_CHECK(boost::multiprecision::denominator(r) == 1 && r >= 0,
                "restriction multiplicity is not a nonnegative integer");
    u64 mult = boost::multiprecision::numerator(r).convert_to<u64>();
    if (mult % q != 0) return true;
  }
  return false;
}

inline void sort_provenance(std::vector<ProvenanceEntry>& log) {
  auto rank = [](const ProvenanceEntry& e) -> i64 {
    if (e.place == "global") return -2;
    if (e.place == "inf") return -1;
    return static_cast<i64>(std::stoull(e.place));
  };
  std::stable_sort(log.begin(), log.end(),
                   [&](const ProvenanceEntry& a, const ProvenanceEntry& b) {
                     return rank(a) < rank(b);
                   });
}

// Gate for the per-context result store: only runs that went through the
// search or a dyadic descent are worth keeping for their Galois orbit.
inline bool result_took_real_work(const SchurIndexResult& res) {
  for (const auto& e : res.provenance)
    if (e.tag == "search" || e.tag == "dyadic" || e.tag == "brauer-witt")
      return true;
  return false;
}

}  // namespace detail_engine

// G = U x| P with U of odd prime order r and P a 2-group: the part of P that
// acts trivially on U is quaternion of order 8, P is its central product with
// its own centralizer, and the cyclic top P/X matches the 2-part of ord_r(2).
inline bool is_quaternion_product_type(const Group& G, u64* r_out = nullptr) {
  u64 r = 0;
  if (!detail_engine::odd_prime_times_two_power(G.order(), r)) return false;
  auto U = G.sylow(r);
  if (!G.is_normal(U)) return false;
  auto P = G.sylow(2);
  auto X = detail_engine::intersect_sorted(G.centralizer_of_set(U), P);
  if (!G.is_q8_set(X)) return false;
  auto CX = detail_engine::intersect_sorted(G.centralizer_of_set(X), P);
  if (detail_engine::product_set_size(G, X, CX) != P.size()) return false;
  if (P.size() == X.size()) return false;
  if (!detail_engine::cyclic_section(G, P, X)) return false;
  if (p_part(multiplicative_order(2, r), 2) != P.size() / X.size())
    return false;
  if (r_out) *r_out = r;
  return true;
}

// G = U x| P as above with a quasidihedral pattern in P: the derived subgroup
// Z of P is cyclic of order >= 4, the centralizer of its order-4 layer is
// cyclic over Z, and the kernel X of the action on U is nonabelian of twice
// the size of Z.  The 2-power index of X in P must divide ord_r(2); when the
// odd cofactor of that order is odd and X is quaternion, the group belongs to
// the previous family instead.
inline bool is_quasidihedral_product_type(const Group& G, u64* r_out = nullptr) {
  u64 r = 0;
  if (!detail_engine::odd_prime_times_two_power(G.order(), r)) return false;
  auto U = G.sylow(r);
  if (!G.is_normal(U)) return false;
  auto P = G.sylow(2);
  auto Z = G.derived_within(P);
  if (Z.size() < 4 || !G.is_cyclic_set(Z)) return false;
  std::uint32_t z4 = 0;
  bool found = false;
  for (auto x : Z)
    if (G.element_order(x) == 4) {
      z4 = x;
      found = true;
      break;
    }
  if (!found) return false;
  auto Y = detail_engine::intersect_sorted(G.centralizer_of_element(z4), P);
  if (!detail_engine::cyclic_section(G, Y, Z)) return false;
  auto X = detail_engine::intersect_sorted(G.centralizer_of_set(U), P);
  if (G.is_abelian_set(X)) return false;
  if (X.size() != 2 * Z.size()) return false;
  if (!std::includes(X.begin(), X.end(), Z.begin(), Z.end())) return false;
  u64 s_pow = P.size() / X.size();
  if (s_pow < 2) return false;
  u64 t = multiplicative_order(2, r);
  if (t % s_pow != 0) return false;
  if ((t / s_pow) % 2 == 1 && G.is_q8_set(X)) return false;
  if (r_out) *r_out = r;
  return true;
}

// Local index at 2 of an irreducible character of a 2-quasi-elementary group,
// by descent: an odd-multiplicity constituent on a maximal subgroup whose
// field is odd over Q_2(chi) either splits the question (even relative degree
// means index 1) or passes it to a smaller faithful pair.  With no such
// constituent anywhere the configuration (*) holds and the answer is decided
// by the isomorphism type of the group.
inline u64 dyadic_index(Group G, CharacterTable T, std::size_t row,
                        std::vector<ProvenanceEntry>* log = nullptr) {
  auto note = [&](std::string detail) {
    if (log) log->push_back({"2", "dyadic", std::move(detail)});
  };
  while (true) {
    SCHUR_CHECK(G.is_quasi_elementary_at(2),
                "dyadic descent left the 2-quasi-elementary family");
    if (!is_faithful(T, row)) {
      auto kc = kernel_classes(T, row);
      std::vector<bool> mask(T.num_classes(), false);
      for (auto c : kc) mask[c] = true;
      GroupQuotient gq = G.quotient(G.kernel_of_classes(mask));
      CharacterTable QT = CharacterTable::compute(gq.group);
      row = detail_engine::deflated_row(G, T, row, gq, QT);
      G = gq.group;
      T = std::move(QT);
      continue;
    }
    bool descended = false;
    PAdicGaloisGroup G2 = padic_galois(2, T.exponent());
    for (auto& H : G.maximal_subgroups_quasielementary2()) {
      GroupEmbedding emb = G.subgroup_group(H);
      CharacterTable TH = CharacterTable::compute(emb.group);
      auto fus = class_fusion(emb, G);
      std::vector<std::size_t> idx(TH.num_rows());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return TH.degree(a) < TH.degree(b);
      });
      for (auto psi : idx) {
        if (induced_inner_product(TH, psi, T, row, fus) % 2 == 0) continue;
        if (local_degree(G2, T.row(row), TH.row(psi)) % 2 == 0) continue;
        // odd multiplicity, odd degree over Q_2(chi): this pair decides
        if (local_degree(G2, TH.row(psi), T.row(row)) % 2 == 0) {
          note("split over a maximal subgroup of order " +
               std::to_string(emb.group.order()) +
               ": even relative degree, index 1");
          return 1;
        }
        note("descending to a maximal subgroup of order " +
             std::to_string(emb.group.order()));
        row = psi;
        G = emb.group;
        T = std::move(TH);
        descended = true;
        break;
      }
      if (descended) break;
    }
    if (descended) continue;
    u64 r = 0;
    if (G.order() == 8 && G.is_q8_set(G.whole())) {
      note("(*) holds: type Q8");
      return 2;
    }
    if (is_quaternion_product_type(G, &r)) {
      note("(*) holds: type (Q8," + std::to_string(r) + ")");
      return 2;
    }
    if (is_quasidihedral_product_type(G, &r)) {
      note("(*) holds: type (QD," + std::to_string(r) + ")");
      return 2;
    }
    note("(*) holds: no quaternionic type, index 1");
    return 1;
  }
}

inline SchurContext::QuotientHandle SchurContext::faithful_quotient(
    std::size_t row) {
  auto kc = kernel_classes(table_, row);
  std::vector<bool> mask(table_.num_classes(), false);
  for (auto c : kc) mask[c] = true;
  auto kernel = group().kernel_of_classes(mask);
  std::lock_guard<std::mutex> lk(mu_);
  auto it = quotients_.find(kernel);
  if (it == quotients_.end()) {
    GroupQuotient gq = group().quotient(kernel);
    auto sub = std::make_unique<SchurContext>(gq.group);
    it = quotients_.emplace(kernel, QuotientRec{std::move(gq), std::move(sub)})
             .first;
  }
  const QuotientRec& qr = it->second;
  std::size_t qrow = detail_engine::deflated_row(*group_, table_, row, qr.gq,
                                                 qr.ctx->table_);
  return {qr.ctx.get(), qrow, static_cast<u64>(kernel.size())};
}

// Coarse divisor bound on the index from degree, order and field data.
inline u64 global_upper_bound(SchurContext& ctx, std::size_t row,
                              const EffectiveGroupData& eff,
                              const FieldSubgroup& F,
                              std::vector<ProvenanceEntry>* log = nullptr) {
  auto note = [&](std::string tag, std::string detail) {
    if (log) log->push_back({"global", std::move(tag), std::move(detail)});
  };
  u64 deg = ctx.table().degree(row);
  SCHUR_CHECK(eff.order % deg == 0, "degree does not divide the image order");
  u64 u = gcd_u64(deg, eff.order / deg);
  u = gcd_u64(u, eff.exponent);
  u = gcd_u64(u, roots_of_unity_count(F));
  u = gcd_u64(u, euler_phi(2 * detail_engine::radical_of(eff.order)));
  if (u > 1 && eff.order % 2 == 1 && factorize(eff.order).size() == 1) {
    note("roquette", "odd prime-power order forces index 1");
    u = 1;
  }
  if (u > 1 && ctx.attached()) {
    SCHUR_CHECK(eff.order == ctx.group().order(),
                "group-level screens need a faithful character");
    // an elementary abelian Sylow subgroup keeps its prime out of the index
    for (u64 q : prime_divisors(u)) {
      auto S = ctx.group().sylow(q);
      bool elem = ctx.group().is_abelian_set(S);
      for (std::size_t i = 0; elem && i < S.size(); ++i)
        if (S[i] != 0 && ctx.group().element_order(S[i]) != q) elem = false;
      if (elem) {
        u /= p_part(u, q);
        note("sylow", "elementary abelian Sylow " + std::to_string(q) +
                          "-subgroup clears " + std::to_string(q));
      }
      if (u == 1) break;
    }
  }
  // a component q^a > 2 needs a prime p = 1 (mod q^a) together with an
  // element of order divisible by p*q^a
  for (u64 q : prime_divisors(u)) {
    u64 qe = p_part(u, q);
    while (qe > 2) {
      bool ok = false;
      for (u64 p : prime_divisors(eff.order)) {
        if ((p - 1) % qe != 0) continue;
        for (u64 n : eff.orders)
          if (n % (p * qe) == 0) {
            ok = true;
            break;
          }
        if (ok) break;
      }
      if (ok) break;
      u /= q;
      qe /= q;
      note("element-orders",
           "no element of order p*" + std::to_string(qe * q) +
               " with p = 1 (mod " + std::to_string(qe * q) + ")");
    }
  }
  note("bound", "initial bound " + std::to_string(u));
  return u;
}

// Upper bound on the local index at p, sharpened as far as table data allows.
inline LocalBound initial_local_bound(SchurContext& ctx, std::size_t row,
                                      u64 p, u64 u,
                                      const EffectiveGroupData& eff,
                                      const FieldSubgroup& F, u64 m_inf,
                                      const EngineOptions& opt,
                                      std::vector<ProvenanceEntry>* log =
                                          nullptr) {
  auto note = [&](std::string tag, std::string detail) {
    if (log) log->push_back({std::to_string(p), std::move(tag),
                             std::move(detail)});
  };
  const CharacterTable& T = ctx.table();
  LocalBound lb{p, 1, true, num_places_over_p(F, p)};
  u64 deg = T.degree(row);
  if (valuation(eff.order, p) == valuation(deg, p)) {
    note("defect-zero", "the p-part of the degree is full");
    return lb;
  }
  u64 up = gcd_u64(u, p == 2 ? 2 : p - 1);
  if (up == 1) return lb;
  lb.bound = up;
  lb.exact = false;
  if (p == 2) {
    if (ctx.attached() && ctx.group().is_abelian_set(ctx.group().sylow(2))) {
      lb.bound = 1;
      lb.exact = true;
      note("abelian-sylow", "abelian Sylow 2-subgroup forces 1");
      return lb;
    }
    if (eff.order == p_part(eff.order, 2) && F.field_degree() == 1) {
      lb.bound = m_inf;
      lb.exact = true;
      note("two-group",
           "rational character of a 2-group: matches the real place");
      return lb;
    }
  }
  const std::vector<Block>& blocks = ctx.blocks(p);
  const Block* B = nullptr;
  for (auto& b : blocks)
    if (std::find(b.members.begin(), b.members.end(), row) !=
        b.members.end()) {
      B = &b;
      break;
    }
  SCHUR_CHECK(B != nullptr, "character missing from the p-block partition");
  if (opt.use_block_formula) {
    CyclicDefect cert =
        ctx.attached() ? cyclic_defect_status(ctx.group(), *B)
                       : (B->defect <= 1 ? CyclicDefect::yes
                                         : CyclicDefect::unknown);
    if (cert == CyclicDefect::yes) {
      u64 v = benard_K_degree(T, *B, row, ctx.padic(p));
      SCHUR_CHECK(up % v == 0, "block formula escaped the coarse bound");
      lb.bound = v;
      lb.exact = true;
      note("benard", "cyclic-defect block: local index " + std::to_string(v));
      return lb;
    }
  }
  // a p-regular column whose whole block lies in Q_p(chi) divides the index
  const PAdicGaloisGroup& Gp = ctx.padic(p);
  auto stab = local_stabilizer(Gp, T.row(row));
  for (std::size_t c = 0; c < T.num_classes() && lb.bound > 1; ++c) {
    if (T.class_order(c) % p == 0) continue;
    bool local = true;
    for (auto j : B->members) {
      const Cyclo& v = T.value(j, c);
      for (u64 s : stab)
        if (v.galois(s % v.conductor()) != v) {
          local = false;
          break;
        }
      if (!local) break;
    }
    if (!local) continue;
    const Cyclo& val = T.value(row, c);
    u64 kept = 1;
    for (auto pp : factorize(lb.bound)) {
      u64 step = 1;
      for (unsigned e = 0; e < pp.e; ++e) {
        u64 cand = step * pp.p;
        if (!integer_divides_algebraic(cand, val)) break;
        step = cand;
      }
      kept *= step;
    }
    if (kept < lb.bound) {
      lb.bound = kept;
      note("feit", "value at a p-regular class trims the bound to " +
                       std::to_string(kept));
    }
  }
  if (lb.bound == 1) lb.exact = true;
  return lb;
}

// Hasse-style counting over the places of the character field, iterated to a
// fixed point.  The invariants over a given rational prime agree at all g_p
// places, every top prime power of the index is carried by more than one
// place, and while no place can hold more than a quaternionic component the
// number of carriers of 2 is even.
inline void counting_refine(std::vector<LocalBound>& bs, u64 m_inf,
                            u64 inf_places,
                            std::vector<ProvenanceEntry>* log = nullptr) {
  auto note = [&](u64 p, std::string detail) {
    if (log) log->push_back({std::to_string(p), "counting",
                             std::move(detail)});
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<std::pair<u64, u64>> qes;  // (q, q^e)
    auto harvest = [&](u64 v) {
      for (auto pp : factorize(v)) {
        u64 qe = 1;
        for (unsigned e = 0; e < pp.e; ++e) {
          qe *= pp.p;
          qes.insert({pp.p, qe});
        }
      }
    };
    harvest(m_inf);
    for (auto& b : bs) harvest(b.bound);
    bool two_flat = valuation(m_inf, 2) <= 1;
    for (auto& b : bs) two_flat = two_flat && valuation(b.bound, 2) <= 1;
    for (auto [q, qe] : qes) {
      u64 certain = (qe == 2 && m_inf == 2) ? inf_places : 0;
      std::vector<LocalBound*> poss;
      u64 poss_mult = 0;
      for (auto& b : bs) {
        if (b.bound % qe != 0) continue;
        if (b.exact) {
          certain += b.places;
        } else {
          poss.push_back(&b);
          poss_mult += b.places;
        }
      }
      auto clear_qe = [&](LocalBound& b, const char* why) {
        b.bound = b.bound / p_part(b.bound, q) * (qe / q);
        if (b.bound == 1) b.exact = true;
        note(b.p, std::string("ruled out ") + std::to_string(qe) + ": " + why);
        changed = true;
      };
      if (poss.empty()) {
        SCHUR_CHECK(certain != 1,
                    "an index component is carried by a single place");
        if (qe == 2 && two_flat)
          SCHUR_CHECK(certain % 2 == 0,
                      "odd count of places carrying the even part");
        continue;
      }
      if (certain == 0 && poss_mult <= 1) {
        for (auto* b : poss) clear_qe(*b, "a lone place cannot carry it");
      } else if (qe == 2 && two_flat && poss.size() == 1 &&
                 poss[0]->places % 2 == 1) {
        if (certain % 2 == 1 && poss[0]->bound == 2) {
          poss[0]->exact = true;
          note(poss[0]->p, "forced 2: the carrier count must come out even");
          changed = true;
        } else if (certain % 2 == 0) {
          clear_qe(*poss[0], "carrying it would leave an odd count");
        }
      } else if (qe == 2 && two_flat && certain % 2 == 1) {
        bool fixable = false;
        for (auto* b : poss) fixable = fixable || b->places % 2 == 1;
        SCHUR_CHECK(fixable, "even-part carrier count cannot become even");
      } else if (q % 2 == 1 && certain == 1 && poss.size() == 1 &&
                 poss[0]->bound == qe) {
        poss[0]->exact = true;
        note(poss[0]->p,
             "forced " + std::to_string(qe) + ": it cannot sit at one place");
        changed = true;
      }
    }
  }
}

// Outcome of the subgroup search for the q-part of the index at p.
struct SearchOutcome {
  enum class Status { found, exhausted, aborted } status;
  const SchurContext::SubgroupRec* rec = nullptr;
  std::size_t eta = 0;
};

// Look for a q-quasi-elementary subgroup U and a constituent eta with
// <eta^G, chi> * [Q_p(chi,eta) : Q_p(chi)] coprime to q.  Candidates are
// C * Syl_q(N_G(C)) over representatives C of the cyclic q'-subgroups; the
// ones whose core restriction already shows a q-coprime constituent go first,
// by ascending normalizer index then descending core, the rest by ascending
// order.  No candidate working means the q-part of the index is 1.
inline SearchOutcome quasielementary_search(
    SchurContext& ctx, std::size_t row, u64 p, u64 q, const EngineOptions& opt,
    std::vector<ProvenanceEntry>* log = nullptr) {
  auto note = [&](std::string tag, std::string detail) {
    if (log) log->push_back({std::to_string(p), std::move(tag),
                             std::move(detail)});
  };
  const Group& G = ctx.group();
  const CharacterTable& T = ctx.table();
  struct Cand {
    std::vector<std::uint32_t> uelems;
    u64 norm_index;
    u64 core_size;
    bool positive;
  };
  std::vector<Cand> cands;
  for (auto& cr : G.cyclic_subgroups_up_to_conjugacy(q)) {
    auto N = G.normalizer(cr.elems);
    auto S = G.sylow_within(N, q);
    std::vector<std::uint32_t> seed = cr.elems;
    seed.insert(seed.end(), S.begin(), S.end());
    auto U = G.closure(seed);
    SCHUR_CHECK(U.size() == cr.elems.size() * S.size(),
                "cyclic core and its Sylow complement overlap");
    bool pos =
        detail_engine::core_restriction_positive(G, T, row, cr.elems, q);
    cands.push_back(
        {std::move(U), G.order() / N.size(), cr.elems.size(), pos});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) {
                     if (a.positive != b.positive) return a.positive;
                     if (a.positive) {
                       if (a.norm_index != b.norm_index)
                         return a.norm_index < b.norm_index;
                       if (a.core_size != b.core_size)
                         return a.core_size > b.core_size;
                     } else if (a.uelems.size() != b.uelems.size()) {
                       return a.uelems.size() < b.uelems.size();
                     }
                     return a.uelems < b.uelems;
                   });
  bool skipped = false;
  for (auto& c : cands) {
    if (opt.max_subgroup_order != 0 &&
        c.uelems.size() > opt.max_subgroup_order) {
      note("search", "skipped a candidate subgroup of order " +
                         std::to_string(c.uelems.size()));
      skipped = true;
      continue;
    }
    const auto& rec = ctx.subgroup(c.uelems);
    for (std::size_t eta = 0; eta < rec.table.num_rows(); ++eta) {
      u64 mult = induced_inner_product(rec.table, eta, T, row, rec.fusion);
      if (mult % q == 0) continue;
      if (local_degree(ctx.padic(p), T.row(row), rec.table.row(eta)) % q == 0)
        continue;
      note("brauer-witt",
           "reduced to a subgroup of order " +
               std::to_string(c.uelems.size()) + " with a constituent of degree " +
               std::to_string(rec.table.degree(eta)));
      return {SearchOutcome::Status::found, &rec, eta};
    }
  }
  if (skipped) {
    note("search", "aborted: the subgroup order cap hid candidates");
    return {SearchOutcome::Status::aborted, nullptr, 0};
  }
  note("brauer-witt", "search exhausted: the " + std::to_string(q) +
                          "-part of the local index is 1");
  return {SearchOutcome::Status::exhausted, nullptr, 0};
}

// q-part of the local index at p extracted from a found pair (U, eta).
inline u64 search_local_q_part(SchurContext& ctx, std::size_t row,
                               const SchurContext::SubgroupRec& rec,
                               std::size_t eta, u64 p, u64 q,
                               std::vector<ProvenanceEntry>* log = nullptr) {
  const Group& U = rec.emb.group;
  SCHUR_CHECK(U.is_quasi_elementary_at(q),
              "search candidate is not quasi-elementary");
  SCHUR_CHECK(p != q || p == 2,
              "an odd prime cannot meet its own induction step");
  u64 meta = 1;
  if (U.order() % p != 0) {
    meta = 1;
  } else if (p != q) {
    // the Sylow p-subgroup sits in the cyclic core, so the block formula
    // applies unconditionally on U
    const auto blocks = p_blocks(rec.table, p);
    const Block* B = nullptr;
    for (auto& b : blocks)
      if (std::find(b.members.begin(), b.members.end(), eta) !=
          b.members.end()) {
        B = &b;
        break;
      }
    SCHUR_CHECK(B != nullptr, "constituent missing from the block partition");
    SCHUR_CHECK(cyclic_defect_status(U, *B) == CyclicDefect::yes,
                "quasi-elementary subgroup lost its cyclic Sylow subgroup");
    meta = benard_K_degree(rec.table, *B, eta,
                           padic_galois(p, rec.table.exponent()));
  } else {
    meta = dyadic_index(U, rec.table, eta, log);
  }
  u64 d = local_degree(ctx.padic(p), rec.table.row(eta), ctx.table().row(row));
  return p_part(meta / gcd_u64(meta, d), q);
}

namespace detail_engine {

inline void check_result_invariants(const SchurIndexResult& res,
                                    const EffectiveGroupData& eff,
                                    u64 inf_count,
                                    const std::vector<LocalBound>& bs) {
  for (auto& b : bs) {
    if (b.p == 2)
      SCHUR_CHECK(b.bound <= 2, "local index at 2 exceeds 2");
    else
      SCHUR_CHECK((b.p - 1) % b.bound == 0,
                  "local index does not divide p - 1");
  }
  SCHUR_CHECK(res.degree % res.total == 0, "index must divide the degree");
  SCHUR_CHECK(eff.exponent % res.total == 0, "index must divide the exponent");
  SCHUR_CHECK(roots_of_unity_count(res.field) % res.total == 0,
              "value field misses the matching roots of unity");
  for (u64 q : prime_divisors(res.total)) {
    u64 qe = p_part(res.total, q);
    u64 carriers = (qe == 2 && res.m_infinity == 2) ? inf_count : 0;
    for (auto& b : bs)
      if (b.bound % qe == 0) carriers += b.places;
    SCHUR_CHECK(carriers >= 2,
                "top index component carried by fewer than two places");
    if (qe == 2)
      SCHUR_CHECK(carriers % 2 == 0,
                  "odd carrier count for the quaternionic part");
  }
}

}  // namespace detail_engine

// Full local-global computation for one row of the table.  Non-faithful
// characters are first moved to the faithful quotient; bounds are then set up
// at every prime of the image order with 2 handled last, interleaved with the
// place-counting refinement, and any survivor goes through the subgroup
// search (unless table_only, which reports the open places as bounds).
inline SchurIndexResult schur_index(SchurContext& ctx, std::size_t row,
                                    const EngineOptions& opt = {}) {
  const CharacterTable& T = ctx.table();
  SCHUR_CHECK(row < T.num_rows(), "row out of range");
  if (const SchurIndexResult* hit = ctx.cached_conjugate(opt, row)) {
    SchurIndexResult res = *hit;
    res.row = row;
    return res;
  }
  if (ctx.attached() && !is_faithful(T, row)) {
    auto qh = ctx.faithful_quotient(row);
    SchurIndexResult res = schur_index(*qh.ctx, qh.row, opt);
    res.row = row;
    res.provenance.insert(
        res.provenance.begin(),
        {"global", "faithful-quotient",
         "computed on the faithful image of order " +
             std::to_string(qh.ctx->table().group_order())});
    if (opt.verbose) {
      for (u64 p : prime_divisors(T.group_order())) {
        bool have = false;
        for (auto& l : res.locals) have = have || l.p == p;
        if (!have) res.locals.push_back({p, 1, true});
      }
      std::sort(res.locals.begin(), res.locals.end(),
                [](const LocalIndex& a, const LocalIndex& b) {
                  return a.p < b.p;
                });
    }
    if (detail_engine::result_took_real_work(res)) ctx.store_result(opt, res);
    return res;
  }

  SchurIndexResult res;
  res.row = row;
  res.degree = T.degree(row);
  res.indicator = frobenius_schur_indicator(T, row);
  res.field = ctx.field(row);
  res.m_infinity = res.indicator == -1 ? 2 : 1;
  std::vector<ProvenanceEntry> log;
  log.push_back({"inf", "indicator",
                 res.indicator == -1
                     ? "quaternionic: index 2 at every real place"
                     : "index 1 at the infinite places"});
  EffectiveGroupData eff = effective_group_data(T, row);
  u64 u = global_upper_bound(ctx, row, eff, res.field, &log);

  u64 inf_count = 0;
  if (res.m_infinity == 2) {
    InfinitePlaces ip = infinite_places(res.field);
    SCHUR_CHECK(ip.real, "quaternionic character with a complex value field");
    inf_count = ip.count;
  }

  std::vector<LocalBound> bs;
  if (u > 1) {
    std::vector<u64> ps = prime_divisors(eff.order);
    std::sort(ps.begin(), ps.end());
    std::stable_partition(ps.begin(), ps.end(), [](u64 p) { return p != 2; });
    for (u64 p : ps)
      bs.push_back(initial_local_bound(ctx, row, p, u, eff, res.field,
                                       res.m_infinity, opt, &log));
    counting_refine(bs, res.m_infinity, inf_count, &log);
    if (!opt.table_only && ctx.attached()) {
      for (auto& b : bs) {
        if (b.exact) continue;
        u64 value = 1;
        bool settled = true;
        for (u64 q : prime_divisors(b.bound)) {
          SearchOutcome so =
              quasielementary_search(ctx, row, b.p, q, opt, &log);
          if (so.status == SearchOutcome::Status::aborted) {
            settled = false;
            continue;
          }
          if (so.status == SearchOutcome::Status::exhausted) continue;
          value *= search_local_q_part(ctx, row, *so.rec, so.eta, b.p, q, &log);
        }
        if (settled) {
          SCHUR_CHECK(b.bound % value == 0,
                      "search result escaped the local bound");
          b.bound = value;
          b.exact = true;
          counting_refine(bs, res.m_infinity, inf_count, &log);
          if (std::all_of(bs.begin(), bs.end(),
                          [](const LocalBound& x) { return x.exact; }))
            break;
        }
      }
    }
  }

  std::map<u64, LocalIndex> loc;
  for (u64 p : prime_divisors(T.group_order())) loc[p] = {p, 1, true};
  for (auto& b : bs) loc[b.p] = {b.p, b.bound, b.exact};
  res.total = res.m_infinity;
  u64 attained = res.m_infinity;  // lcm of the places already known exactly
  for (auto& [p, l] : loc) {
    res.resolved = res.resolved && l.exact;
    res.total = lcm_u64(res.total, l.value);
    if (l.exact) attained = lcm_u64(attained, l.value);
    if (opt.verbose || !(l.exact && l.value == 1)) res.locals.push_back(l);
  }
  // The lcm can be settled before every factor is: once the exact places
  // reach the upper bound, the open ones have nothing left to add.
  res.total_exact = res.resolved || attained == res.total;
  if (res.total_exact && !res.resolved)
    log.push_back({"global", "bound",
                   "exact places already attain the upper bound: index " +
                       std::to_string(res.total)});
  res.provenance = std::move(log);
  detail_engine::sort_provenance(res.provenance);
  if (res.resolved)
    detail_engine::check_result_invariants(res, eff, inf_count, bs);
  if (detail_engine::result_took_real_work(res)) ctx.store_result(opt, res);
  return res;
}

inline std::vector<SchurIndexResult> schur_indices(SchurContext& ctx,
                                                   const EngineOptions& opt =
                                                       {}) {
  std::vector<SchurIndexResult> out;
  out.reserve(ctx.table().num_rows());
  for (std::size_t i = 0; i < ctx.table().num_rows(); ++i)
    out.push_back(schur_index(ctx, i, opt));
  return out;
}

}  // namespace schur
