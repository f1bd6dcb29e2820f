#pragma once

// Stock finite groups: cyclic and abelian towers, the dihedral / dicyclic /
// metacyclic series, the extraspecial groups of order 27, a few
// distinguished 2-local examples, small permutation groups, and the
// reflection representation of the Coxeter group of type H4.  Also bundles
// a corpus of a couple hundred groups of order <= 200 for property tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schur/common.hpp"
#include "schur/group.hpp"
#include "schur/numtheory.hpp"
#include "schur/pc.hpp"
#include "schur/perm.hpp"

namespace schur {

// ---------------------------------------------------------------------------
// Polycyclic chains.
//
// A cyclic factor C_m is presented by one generator per prime in a fixed
// factorization p_1 <= p_2 <= ...: generator i stands for c^(w_i) with
// w_1 = 1 and w_{i+1} = w_i * p_i, so its relative order is p_i and its
// p_i-th power is the next generator down the chain.

struct CyclicChain {
  std::size_t base = 0;       // index of the chain's first generator
  u64 order = 1;
  std::vector<u64> primes;    // relative orders along the chain
  std::vector<u64> weights;   // generator i is c^(weights[i])
};

inline CyclicChain make_chain(std::size_t base, u64 m) {
  CyclicChain c;
  c.base = base;
  c.order = m;
  u64 w = 1;
  for (const auto& pp : factorize(m))
    for (unsigned i = 0; i < pp.e; ++i) {
      c.primes.push_back(pp.p);
      c.weights.push_back(w);
      w *= pp.p;
    }
  return c;
}

inline std::size_t chain_length(const CyclicChain& c) { return c.primes.size(); }

// Normal-form word (over the full generator list) for c^e, where c is the
// chain's top generator: mixed-radix digits of e mod m.
inline Elt chain_word(std::size_t ngens, const CyclicChain& c, u64 e) {
  Elt w(ngens, 0);
  e %= c.order;
  for (std::size_t i = 0; i < c.primes.size(); ++i)
    w[c.base + i] = static_cast<std::uint32_t>((e / c.weights[i]) % c.primes[i]);
  return w;
}

inline PcRep blank_rep(std::size_t ngens) {
  PcRep rep;
  rep.relord.assign(ngens, 2);
  rep.power_tail.resize(ngens);
  rep.conj.assign(ngens, std::vector<Elt>(ngens));
  return rep;
}

// Lay the chain's relative orders and internal power relations into rep.
// rep.relord must already have its final size.
inline void install_chain(PcRep& rep, const CyclicChain& c) {
  std::size_t n = rep.relord.size();
  for (std::size_t i = 0; i < c.primes.size(); ++i) {
    rep.relord[c.base + i] = static_cast<std::uint32_t>(c.primes[i]);
    if (i + 1 < c.primes.size()) {
      Elt t(n, 0);
      t[c.base + i + 1] = 1;
      rep.power_tail[c.base + i] = t;
    }
  }
}

inline PcRep cyclic_rep(u64 m) {
  CyclicChain c = make_chain(0, m);
  PcRep rep = blank_rep(chain_length(c));
  install_chain(rep, c);
  return rep;
}

// ---------------------------------------------------------------------------
// Abelian and metacyclic families.

inline Group cyclic_group(u64 n) {
  if (n == 0) throw_domain("cyclic_group: order must be positive");
  if (n == 1) return Group::permutation(1, {});
  return Group::polycyclic(cyclic_rep(n));
}

inline Group abelian_group(const std::vector<u64>& orders) {
  std::vector<CyclicChain> chains;
  std::size_t ngens = 0;
  for (u64 m : orders) {
    if (m == 0) throw_domain("abelian_group: factor of order zero");
    chains.push_back(make_chain(ngens, m));
    ngens += chain_length(chains.back());
  }
  if (ngens == 0) return Group::permutation(1, {});
  PcRep rep = blank_rep(ngens);
  for (const auto& c : chains) install_chain(rep, c);
  return Group::polycyclic(rep);
}

// Split metacyclic group C_a x| C_b where the top generator y of C_b acts on
// the bottom generator x of C_a by x^y = x^r.  Requires gcd(r, a) = 1 and
// r^b = 1 mod a.
inline PcRep metacyclic_rep(u64 a, u64 b, u64 r) {
  if (a == 0 || b == 0) throw_domain("metacyclic_rep: orders must be positive");
  if (a > 1) {
    r %= a;
    if (gcd_u64(r, a) != 1 || powmod(r, b, a) != 1)
      throw_domain("metacyclic_rep: action exponent must be a unit of order dividing " +
                   std::to_string(b));
  }
  CyclicChain top = make_chain(0, b);
  CyclicChain bot = make_chain(chain_length(top), a);
  std::size_t n = chain_length(top) + chain_length(bot);
  PcRep rep = blank_rep(n);
  install_chain(rep, top);
  install_chain(rep, bot);
  for (std::size_t i = 0; i < chain_length(top); ++i) {
    // y^(w_i) conjugates x^(w_j) to x^(w_j * r^(w_i)).
    u64 ri = powmod(r, top.weights[i], a);
    if (ri == 1) continue;
    for (std::size_t j = 0; j < chain_length(bot); ++j)
      rep.conj[top.base + i][bot.base + j] =
          chain_word(n, bot, mulmod(bot.weights[j], ri, a));
  }
  return rep;
}

inline Group metacyclic_group(u64 a, u64 b, u64 r) {
  if (a <= 1) return cyclic_group(b);
  if (b == 1) return cyclic_group(a);
  return Group::polycyclic(metacyclic_rep(a, b, r));
}

// Dihedral group of order 2n.
inline Group dihedral_group(u64 n) {
  if (n <= 1) return cyclic_group(2 * n);
  return metacyclic_group(n, 2, n - 1);
}

// Dicyclic group of order 4n: <s, c | c^(2n) = 1, s^2 = c^n, c^s = c^(-1)>.
// n = 2 gives the quaternion group, n a power of 2 the generalized
// quaternion groups.
inline PcRep dicyclic_rep(u64 n) {
  if (n < 2) throw_domain("dicyclic_rep: order parameter below 2");
  CyclicChain c = make_chain(1, 2 * n);
  std::size_t ngens = 1 + chain_length(c);
  PcRep rep = blank_rep(ngens);
  rep.relord[0] = 2;
  install_chain(rep, c);
  rep.power_tail[0] = chain_word(ngens, c, n);
  for (std::size_t j = 0; j < chain_length(c); ++j)
    rep.conj[0][c.base + j] = chain_word(ngens, c, 2 * n - c.weights[j]);
  return rep;
}

inline Group dicyclic_group(u64 n) { return Group::polycyclic(dicyclic_rep(n)); }

inline Group quaternion_group() { return dicyclic_group(2); }

// The two nonabelian split extensions C8 x| C2 besides D16: semidihedral
// (x^y = x^3) and modular (x^y = x^5), both of order 16.
inline Group semidihedral_group_16() { return metacyclic_group(8, 2, 3); }
inline Group modular_group_16() { return metacyclic_group(8, 2, 5); }

// ---------------------------------------------------------------------------
// Distinguished small groups.

// Extraspecial of order 27 and exponent 3: <x, y, z | z central, [x, y] = z>.
inline PcRep extraspecial_27_exponent_3_rep() {
  PcRep rep = blank_rep(3);
  rep.relord = {3, 3, 3};
  rep.conj[0][1] = {0, 1, 1};
  return rep;
}

inline Group extraspecial_27_exponent_3() {
  return Group::polycyclic(extraspecial_27_exponent_3_rep());
}

// Extraspecial of order 27 and exponent 9: C9 x| C3 with x^y = x^4.
inline Group extraspecial_27_exponent_9() { return metacyclic_group(9, 3, 4); }

// SL(2,3) = Q8 x| C3 with the order-3 generator cycling i -> j -> ij.
inline PcRep sl_2_3_rep() {
  PcRep rep = blank_rep(4);
  rep.relord = {3, 2, 2, 2};
  rep.power_tail[1] = {0, 0, 0, 1};
  rep.power_tail[2] = {0, 0, 0, 1};
  rep.conj[0][1] = {0, 0, 1, 0};
  rep.conj[0][2] = {0, 1, 1, 0};
  rep.conj[1][2] = {0, 0, 1, 1};
  return rep;
}

inline Group sl_2_3() { return Group::polycyclic(sl_2_3_rep()); }

// Order 48: C3 x| (Q8 o C4), where the central product's quaternion part
// centralizes C3 and the order-4 factor inverts it.  The smallest group
// whose faithful characters exhibit the (Q8, r) dyadic pattern, with r = 3.
inline Group type_q8_example_48() {
  PcRep rep = blank_rep(5);
  rep.relord = {2, 2, 2, 2, 3};
  rep.power_tail[0] = {0, 0, 0, 1, 0};  // c^2 = z
  rep.power_tail[1] = {0, 0, 0, 1, 0};  // i^2 = z
  rep.power_tail[2] = {0, 0, 0, 1, 0};  // j^2 = z
  rep.conj[1][2] = {0, 0, 1, 1, 0};     // j^i = jz
  rep.conj[0][4] = {0, 0, 0, 0, 2};     // u^c = u^2
  return Group::polycyclic(rep);
}

// Order 272: C17 x| SD16, acting through SD16's quotient of order 2; the
// centralizer of C17 in a Sylow 2-subgroup is dihedral of order 8.  The
// smallest group whose faithful characters exhibit the (QD, r) dyadic
// pattern, with r = 17.
inline Group type_qd_example_272() {
  PcRep rep = blank_rep(5);
  rep.relord = {2, 2, 2, 2, 17};
  rep.power_tail[2] = {0, 0, 0, 1, 0};
  rep.conj[0][1] = {0, 1, 1, 0, 0};
  rep.conj[0][2] = {0, 0, 1, 1, 0};
  rep.conj[1][2] = {0, 0, 1, 1, 0};
  rep.conj[0][4] = {0, 0, 0, 0, 16};
  return Group::polycyclic(rep);
}

// ---------------------------------------------------------------------------
// Permutation groups.

inline Group perm_group(u64 degree, std::initializer_list<std::string> cycles,
                        u64 max_order = 1000000) {
  std::vector<Elt> gens;
  for (const auto& c : cycles) gens.push_back(parse_permutation(c, degree));
  return Group::permutation(degree, gens, max_order);
}

inline Group symmetric_group(u64 n) {
  if (n <= 1) return Group::permutation(1, {});
  if (n == 2) return perm_group(2, {"(1,2)"});
  std::string cycle = "(1";
  for (u64 i = 2; i <= n; ++i) cycle += "," + std::to_string(i);
  cycle += ")";
  return perm_group(n, {"(1,2)", cycle});
}

inline Group alternating_group(u64 n) {
  if (n <= 2) return Group::permutation(1, {});
  if (n == 3) return perm_group(3, {"(1,2,3)"});
  // (1,2,3) together with an even long cycle.
  std::string cycle = n % 2 ? "(1" : "(2";
  for (u64 i = (n % 2 ? 2 : 3); i <= n; ++i) cycle += "," + std::to_string(i);
  cycle += ")";
  return perm_group(n, {"(1,2,3)", cycle});
}

// Direct product of polycyclic presentations (no cross relations).
inline PcRep pc_direct_product(const PcRep& a, const PcRep& b) {
  std::size_t na = a.ngens(), nb = b.ngens(), n = na + nb;
  PcRep rep = blank_rep(n);
  auto shift = [&](const Elt& w, std::size_t off) {
    if (w.empty()) return Elt();
    Elt t(n, 0);
    for (std::size_t i = 0; i < w.size(); ++i) t[off + i] = w[i];
    return t;
  };
  for (std::size_t i = 0; i < na; ++i) {
    rep.relord[i] = a.relord[i];
    rep.power_tail[i] = shift(a.power_tail[i], 0);
    for (std::size_t j = i + 1; j < na; ++j) rep.conj[i][j] = shift(a.conj[i][j], 0);
  }
  for (std::size_t i = 0; i < nb; ++i) {
    rep.relord[na + i] = b.relord[i];
    rep.power_tail[na + i] = shift(b.power_tail[i], na);
    for (std::size_t j = i + 1; j < nb; ++j)
      rep.conj[na + i][na + j] = shift(b.conj[i][j], na);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The reflection group of type H4, acting on its 120 roots.
//
// Exact coordinates live in Q(sqrt 5).  Scaled by 2, the roots are the
// permutations of (+-2, 0, 0, 0), all (+-1, +-1, +-1, +-1), and the even
// coordinate permutations of (+-g, +-1, +-1/g, 0) with g the golden ratio;
// every root then has squared length 4.

struct QuadSqrt5 {
  Rational a, b;  // a + b*sqrt(5)

  friend QuadSqrt5 operator+(const QuadSqrt5& x, const QuadSqrt5& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadSqrt5 operator-(const QuadSqrt5& x, const QuadSqrt5& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QuadSqrt5 operator*(const QuadSqrt5& x, const QuadSqrt5& y) {
    return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  QuadSqrt5 operator-() const { return {-a, -b}; }
  bool operator==(const QuadSqrt5& o) const { return a == o.a && b == o.b; }
  bool operator<(const QuadSqrt5& o) const {
    return a != o.a ? a < o.a : b < o.b;  // representation order, not value order
  }

  int sign() const {
    int sa = a.sign(), sb = b.sign();
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    Rational d = a * a - 5 * b * b;  // nonzero: sqrt(5) is irrational
    return sa > 0 ? (d.sign() > 0 ? 1 : -1) : (d.sign() > 0 ? -1 : 1);
  }
};

inline Group h4_reflection_group() {
  using Vec = std::array<QuadSqrt5, 4>;
  const QuadSqrt5 zero{0, 0}, one{1, 0}, two{2, 0};
  const QuadSqrt5 phi{Rational(1, 2), Rational(1, 2)};
  const QuadSqrt5 phibar{Rational(-1, 2), Rational(1, 2)};  // 1/g = g - 1

  std::vector<Vec> roots;
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      Vec v{zero, zero, zero, zero};
      v[i] = s > 0 ? two : -two;
      roots.push_back(v);
    }
  for (int mask = 0; mask < 16; ++mask) {
    Vec v;
    for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -one : one;
    roots.push_back(v);
  }
  const std::array<QuadSqrt5, 4> pattern{phi, one, phibar, zero};
  std::array<int, 4> idx{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += idx[i] > idx[j];
    if (inversions % 2) continue;
    for (int mask = 0; mask < 8; ++mask) {
      Vec v;
      int bit = 0;
      for (int i = 0; i < 4; ++i) {
        QuadSqrt5 c = pattern[idx[i]];
        if (!(c == zero)) c = (mask >> bit++) & 1 ? -c : c;
        v[i] = c;
      }
      roots.push_back(v);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  SCHUR_CHECK(roots.size() == 120, "h4: root count");

  std::sort(roots.begin(), roots.end());
  std::map<Vec, std::uint32_t> index;
  for (std::size_t i = 0; i < roots.size(); ++i)
    index[roots[i]] = static_cast<std::uint32_t>(i);
  SCHUR_CHECK(index.size() == 120, "h4: duplicate roots");

  auto dot = [&](const Vec& x, const Vec& y) {
    QuadSqrt5 s{0, 0};
    for (int i = 0; i < 4; ++i) s = s + x[i] * y[i];
    return s;
  };
  const QuadSqrt5 four{4, 0};
  for (const auto& r : roots)
    SCHUR_CHECK(dot(r, r) == four, "h4: root normalization");

  // A functional with no root in its kernel selects the positive system.
  std::vector<Vec> positive;
  for (u64 t = 10;; ++t) {
    Vec f;
    Rational w = 1;
    for (int i = 0; i < 4; ++i, w *= Rational(t)) f[i] = {w, 0};
    positive.clear();
    bool generic = true;
    for (const auto& r : roots) {
      int s = dot(r, f).sign();
      if (s == 0) {
        generic = false;
        break;
      }
      if (s > 0) positive.push_back(r);
    }
    if (generic) break;
    SCHUR_CHECK(t < 100, "h4: no generic functional found");
  }
  SCHUR_CHECK(positive.size() == 60, "h4: positive system size");

  // A positive root is simple exactly when its reflection permutes the other
  // positive roots.  (The "not a sum of two positives" shortcut is only valid
  // for crystallographic systems.)
  const QuadSqrt5 half{Rational(1, 2), 0};
  auto reflect = [&](const Vec& x, const Vec& alpha) {
    QuadSqrt5 c = dot(x, alpha) * half;  // 2(x,a)/(a,a) with (a,a) = 4
    Vec img;
    for (int k = 0; k < 4; ++k) img[k] = x[k] - c * alpha[k];
    return img;
  };
  std::map<Vec, bool> pos_set;
  for (const auto& r : positive) pos_set[r] = true;
  std::vector<Vec> simple;
  for (const auto& alpha : positive) {
    bool keeps_positive = true;
    for (const auto& beta : positive) {
      if (beta == alpha) continue;
      if (!pos_set.count(reflect(beta, alpha))) {
        keeps_positive = false;
        break;
      }
    }
    if (keeps_positive) simple.push_back(alpha);
  }
  SCHUR_CHECK(simple.size() == 4, "h4: rank");

  std::vector<Elt> gens;
  for (const auto& alpha : simple) {
    Elt perm(120);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      auto it = index.find(reflect(roots[i], alpha));
      SCHUR_CHECK(it != index.end(), "h4: reflection leaves root system");
      perm[i] = it->second;
    }
    gens.push_back(perm);
  }
  Group g = Group::permutation(120, gens, 20000);
  SCHUR_CHECK(g.order() == 14400, "h4: group order");
  return g;
}

// ---------------------------------------------------------------------------
// Corpus of small groups for property suites: a few hundred groups of order
// at most 200, spanning abelian, metabelian, nilpotent, and perfect cases.

struct NamedGroup {
  std::string name;
  Group group;
};

inline std::vector<NamedGroup> small_group_corpus() {
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, Group g) {
    SCHUR_CHECK(g.order() <= 200, "corpus: order bound exceeded by " + name);
    out.push_back({std::move(name), std::move(g)});
  };

  for (u64 n = 1; n <= 64; ++n) add("C" + std::to_string(n), cyclic_group(n));

  const std::vector<std::vector<u64>> ab = {
      {2, 2},       {2, 4},    {2, 6},    {2, 8},       {2, 10},   {2, 12},
      {2, 14},      {2, 16},   {2, 18},   {2, 20},      {3, 3},    {3, 6},
      {3, 9},       {3, 12},   {4, 4},    {4, 8},       {4, 12},   {5, 5},
      {6, 6},       {7, 7},    {10, 10},  {2, 2, 2},    {2, 2, 4}, {2, 2, 6},
      {2, 2, 8},    {2, 4, 4}, {3, 3, 3}, {2, 2, 2, 2}, {2, 24},   {13, 13},
      {2, 2, 2, 3}, {3, 3, 6}, {5, 10},   {4, 16},      {2, 32},   {8, 8},
  };
  for (const auto& inv : ab) {
    std::string name = "C" + std::to_string(inv[0]);
    for (std::size_t i = 1; i < inv.size(); ++i) name += "xC" + std::to_string(inv[i]);
    add(name, abelian_group(inv));
  }

  for (u64 n = 3; n <= 40; ++n) add("Dih" + std::to_string(2 * n), dihedral_group(n));
  for (u64 n = 2; n <= 25; ++n) add("Dic" + std::to_string(4 * n), dicyclic_group(n));

  // Split metacyclic examples (a, b, r): C_a x| C_b with x^y = x^r.
  const std::vector<std::array<u64, 3>> mc = {
      {7, 3, 2},   {13, 3, 3},  {13, 4, 5},  {5, 4, 2},    {7, 6, 3},
      {13, 9, 3},
      {11, 5, 3},  {13, 6, 4},  {11, 10, 2}, {17, 8, 2},   {19, 9, 4},
      {31, 5, 2},  {43, 3, 6},  {37, 4, 6},  {41, 4, 9},   {5, 8, 2},
      {13, 12, 2}, {9, 6, 2},   {25, 5, 6},  {25, 4, 7},   {15, 4, 2},
      {8, 2, 3},   {8, 2, 5},   {16, 2, 7},  {16, 2, 9},   {16, 4, 3},
      {9, 3, 4},   {17, 4, 4},  {19, 6, 8},  {29, 4, 12},  {32, 2, 15},
  };
  for (const auto& m : mc)
    add("Meta(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
            std::to_string(m[2]) + ")",
        metacyclic_group(m[0], m[1], m[2]));

  add("ES27+", extraspecial_27_exponent_3());
  add("ES27-", extraspecial_27_exponent_9());
  add("SL(2,3)", sl_2_3());
  add("Q8oC4:C3", type_q8_example_48());
  add("S4", symmetric_group(4));
  add("S5", symmetric_group(5));
  add("A4", alternating_group(4));
  add("A5", alternating_group(5));
  add("S3xS3", perm_group(6, {"(1,2)", "(1,2,3)", "(4,5)", "(4,5,6)"}));
  add("S3xA4", perm_group(7, {"(1,2)", "(1,2,3)", "(4,5,6)", "(4,5)(6,7)"}));
  add("A4xA4", perm_group(8, {"(1,2,3)", "(1,2)(3,4)", "(5,6,7)", "(5,6)(7,8)"}));
  add("S4xC2", perm_group(6, {"(1,2)", "(1,2,3,4)", "(5,6)"}));
  add("A4xC2", perm_group(6, {"(1,2,3)", "(1,2)(3,4)", "(5,6)"}));
  add("S3xC4", perm_group(7, {"(1,2)", "(1,2,3)", "(4,5,6,7)"}));
  add("S3xC3", perm_group(6, {"(1,2)", "(1,2,3)", "(4,5,6)"}));
  add("S3xC5", perm_group(8, {"(1,2)", "(1,2,3)", "(4,5,6,7,8)"}));
  add("S3xC7", perm_group(10, {"(1,2)", "(1,2,3)", "(4,5,6,7,8,9,10)"}));
  add("S4xC3", perm_group(7, {"(1,2)", "(1,2,3,4)", "(5,6,7)"}));
  add("A4xC3", perm_group(7, {"(1,2,3)", "(1,2)(3,4)", "(5,6,7)"}));
  add("A4xC4", perm_group(8, {"(1,2,3)", "(1,2)(3,4)", "(5,6,7,8)"}));
  add("A4xC5", perm_group(9, {"(1,2,3)", "(1,2)(3,4)", "(5,6,7,8,9)"}));

  // Direct products assembled from polycyclic presentations.
  struct PcProd {
    const char* name;
    const PcRep* left;
    u64 right;
  };
  const PcRep q8 = dicyclic_rep(2), q16 = dicyclic_rep(4);
  const PcRep sd16 = metacyclic_rep(8, 2, 3), d8 = metacyclic_rep(4, 2, 3);
  const PcRep d10 = metacyclic_rep(5, 2, 4), d12 = metacyclic_rep(6, 2, 5);
  const PcRep es27 = extraspecial_27_exponent_3_rep(), sl23 = sl_2_3_rep();
  const std::vector<PcProd> prods = {
      {"Q8xC3", &q8, 3},        {"Q8xC5", &q8, 5},     {"Q8xC7", &q8, 7},
      {"Q8xC9", &q8, 9},        {"Q8xC15", &q8, 15},   {"Q8xC25", &q8, 25},
      {"Q16xC3", &q16, 3},      {"Q16xC5", &q16, 5},   {"Q16xC7", &q16, 7},
      {"Q16xC9", &q16, 9},      {"Q16xC11", &q16, 11}, {"SD16xC3", &sd16, 3},
      {"SD16xC5", &sd16, 5},    {"SD16xC7", &sd16, 7}, {"SD16xC9", &sd16, 9},
      {"D8xC3", &d8, 3},        {"D8xC5", &d8, 5},     {"D8xC7", &d8, 7},
      {"D8xC9", &d8, 9},        {"D8xC25", &d8, 25},   {"D10xC5", &d10, 5},
      {"D10xC3", &d10, 3},      {"D12xC3", &d12, 3},   {"D12xC4", &d12, 4},
      {"D12xC5", &d12, 5},      {"ES27+xC2", &es27, 2}, {"ES27+xC4", &es27, 4},
      {"ES27+xC5", &es27, 5},   {"ES27+xC7", &es27, 7}, {"SL(2,3)xC2", &sl23, 2},
      {"SL(2,3)xC3", &sl23, 3}, {"SL(2,3)xC5", &sl23, 5}, {"SL(2,3)xC7", &sl23, 7},
  };
  for (const auto& p : prods)
    add(p.name, Group::polycyclic(pc_direct_product(*p.left, cyclic_rep(p.right))));

  return out;
}

}  // namespace schur
