#pragma once

// Exact ordinary character tables.
//
// Non-abelian tables come from the class-sum eigenvector method: the central
// characters are the simultaneous eigenvectors of the class-multiplication
// matrices, computed over a prime field F_l with l = 1 (mod exponent) and
// l > 2*sqrt(|G|), so that degrees and root-of-unity multiplicities lift
// uniquely back to characteristic zero.  Abelian tables are assembled
// directly, extending linear characters one prime step of a polycyclic
// series at a time.  On top of the finished tables sit class fusion,
// Frobenius reciprocity, indicators, kernels, p-blocks with defects, and the
// local field degrees attached to blocks with cyclic defect groups.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schur/common.hpp"
#include "schur/cyclo.hpp"
#include "schur/ff.hpp"
#include "schur/group.hpp"
#include "schur/numtheory.hpp"
#include "schur/padic.hpp"

namespace schur {

namespace detail_ct {

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;  // row-major square matrix over F_l

inline Vec mat_apply(const Mat& M, const Vec& w, u64 p) {
  Vec out(w.size(), 0);
  for (std::size_t s = 0; s < w.size(); ++s) {
    u64 acc = 0;
    for (std::size_t t = 0; t < w.size(); ++t)
      if (M[s][t] != 0 && w[t] != 0)
        acc = fp::add(acc, fp::mul(M[s][t], w[t], p), p);
    out[s] = acc;
  }
  return out;
}

// In-place reduced row echelon form; drops zero rows, returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<Vec>& rows, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t width = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    u64 s = fp::inv(rows[r][c], p);
    for (auto& x : rows[r]) x = fp::mul(x, s, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      u64 t = rows[i][c];
      for (std::size_t j = c; j < width; ++j)
        rows[i][j] = fp::sub(rows[i][j], fp::mul(t, rows[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline std::vector<Vec> nullspace(Mat A, u64 p) {
  std::size_t n = A.size();
  auto pivots = rref(A, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(n, 0);
    v[fc] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = fp::neg(A[r][fc], p);
    out.push_back(std::move(v));
  }
  return out;
}

// Monic polynomial of least degree annihilating b under M, by incremental
// elimination along the Krylov sequence b, Mb, M^2 b, ...
inline fp::Poly krylov_annihilator(const Mat& M, const Vec& b, u64 p) {
  std::vector<Vec> red;
  std::vector<fp::Poly> how;  // red[i] = how[i](M) applied to b
  std::vector<std::size_t> piv;
  Vec cur = b;
  fp::Poly curpoly{1};
  for (std::size_t step = 0; step <= b.size() + 1; ++step) {
    Vec v = cur;
    fp::Poly w = curpoly;
    for (std::size_t i = 0; i < red.size(); ++i) {
      if (v[piv[i]] == 0) continue;
      u64 t = v[piv[i]];
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = fp::sub(v[j], fp::mul(t, red[i][j], p), p);
      w = fp::poly_sub(w, fp::poly_scale(how[i], t, p), p);
    }
    std::size_t pc = 0;
    while (pc < v.size() && v[pc] == 0) ++pc;
    if (pc == v.size()) return fp::monic(std::move(w), p);
    u64 s = fp::inv(v[pc], p);
    for (auto& x : v) x = fp::mul(x, s, p);
    w = fp::poly_scale(std::move(w), s, p);
    red.push_back(std::move(v));
    how.push_back(std::move(w));
    piv.push_back(pc);
    cur = mat_apply(M, cur, p);
    fp::Poly next(curpoly.size() + 1, 0);
    std::copy(curpoly.begin(), curpoly.end(), next.begin() + 1);
    curpoly = std::move(next);
  }
  throw_internal("krylov elimination failed to terminate");
}

struct Subspace {
  std::vector<Vec> basis;           // RREF rows, ambient coordinates
  std::vector<std::size_t> pivots;  // pivot column per basis row
};

// Split an invariant subspace into eigenspaces of M.  Eigenvalues are found
// as roots of a Krylov annihilator of a random vector; a vector that fails
// to see every eigenvalue leaves the dimensions short, and we redraw.
inline std::vector<Subspace> eigen_split(const Subspace& S, const Mat& M,
                                         u64 p, Rng& rng) {
  std::size_t d = S.basis.size();
  Mat R(d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    Vec u = mat_apply(M, S.basis[i], p);
    for (std::size_t j = 0; j < d; ++j) {
      u64 c = u[S.pivots[j]];
      R[j][i] = c;
      if (c == 0) continue;
      for (std::size_t t = 0; t < u.size(); ++t)
        u[t] = fp::sub(u[t], fp::mul(c, S.basis[j][t], p), p);
    }
    for (u64 x : u)
      SCHUR_CHECK(x == 0, "class matrix does not preserve the subspace");
  }
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vec b(d, 0);
    for (auto& x : b) x = rng.below(p);
    if (std::all_of(b.begin(), b.end(), [](u64 x) { return x == 0; }))
      continue;
    auto roots = fp::roots_mod(krylov_annihilator(R, b, p), p);
    std::vector<Subspace> parts;
    std::size_t total = 0;
    for (u64 lam : roots) {
      Mat A = R;
      for (std::size_t i = 0; i < d; ++i) A[i][i] = fp::sub(A[i][i], lam, p);
      auto ns = nullspace(std::move(A), p);
      if (ns.empty()) continue;
      Subspace part;
      for (const auto& coeffs : ns) {
        Vec amb(S.basis[0].size(), 0);
        for (std::size_t j = 0; j < d; ++j) {
          if (coeffs[j] == 0) continue;
          for (std::size_t t = 0; t < amb.size(); ++t)
            amb[t] = fp::add(amb[t], fp::mul(coeffs[j], S.basis[j][t], p), p);
        }
        part.basis.push_back(std::move(amb));
      }
      part.pivots = rref(part.basis, p);
      total += part.basis.size();
      parts.push_back(std::move(part));
    }
    if (total == d) return parts;
  }
  throw_internal("eigenvector splitting failed to exhaust a subspace");
}

inline u64 isqrt64(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace detail_ct

class CharacterTable {
 public:
  // Work guards: tables beyond this are outside the intended scale.
  static constexpr std::size_t kMaxClasses = 1024;
  static constexpr u64 kMaxClassMatrixWork = 400000000;

  static CharacterTable compute(const Group& G);

  // Table assembled from serialized data, with no group behind it.
  // power_maps[k] gives, per class, the class of k-th powers.
  static CharacterTable detached(
      u64 group_order, std::vector<u64> class_orders,
      std::vector<u64> class_sizes, std::vector<std::uint32_t> inverse_class,
      std::map<u64, std::vector<std::uint32_t>> power_maps,
      std::vector<std::vector<Cyclo>> rows);

  bool attached() const { return group_.has_value(); }
  const Group& group() const {
    SCHUR_CHECK(group_.has_value(), "table has no group attached");
    return *group_;
  }
  u64 group_order() const { return order_; }
  std::size_t num_classes() const { return sizes_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  u64 exponent() const { return exponent_; }
  u64 class_size(std::size_t c) const { return sizes_.at(c); }
  u64 class_order(std::size_t c) const { return orders_.at(c); }
  std::uint32_t inverse_class(std::size_t c) const { return inv_.at(c); }
  std::size_t identity_class() const { return identity_; }

  const std::vector<Cyclo>& row(std::size_t i) const { return rows_.at(i); }
  const Cyclo& value(std::size_t i, std::size_t c) const {
    return rows_.at(i).at(c);
  }
  u64 degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<u64>& degrees() const { return degrees_; }

  // Class of k-th powers of class c; detached tables can only answer from
  // their stored power maps.
  std::uint32_t power_class(std::size_t c, i64 k) const {
    if (group_.has_value())
      return group_->class_of_power(static_cast<std::uint32_t>(c), k);
    u64 n = orders_.at(c);
    u64 r = static_cast<u64>(((k % static_cast<i64>(n)) + static_cast<i64>(n)) %
                             static_cast<i64>(n));
    if (r == 0) return static_cast<std::uint32_t>(identity_);
    if (r == 1) return static_cast<std::uint32_t>(c);
    if (r == n - 1) return inv_.at(c);
    for (const auto& [kk, m] : powmaps_)
      if (kk % n == r) return m.at(c);
    throw_domain("power map for k=" + std::to_string(k) +
                 " not available in detached table");
  }

 private:
  CharacterTable() = default;

  std::optional<Group> group_;
  u64 order_ = 1;
  u64 exponent_ = 1;
  std::size_t identity_ = 0;
  std::vector<u64> orders_;        // element order per class
  std::vector<u64> sizes_;         // class sizes
  std::vector<std::uint32_t> inv_;  // class of inverses
  std::map<u64, std::vector<std::uint32_t>> powmaps_;  // detached only
  std::vector<std::vector<Cyclo>> rows_;
  std::vector<u64> degrees_;

  static void compute_abelian(const Group& G, CharacterTable& T);
  // returns the prime used for the modular lift
  static u64 compute_dixon(const Group& G, CharacterTable& T);
  void sort_rows();
  void structural_checks() const;
};

// ---------------------------------------------------------------------------
// Inner products and everything built from them.

// (1/|G|) sum over classes of |C| a(C) conj(b(C)); exact.
inline Cyclo inner_product(const CharacterTable& T, const std::vector<Cyclo>& a,
                           const std::vector<Cyclo>& b) {
  SCHUR_CHECK(a.size() == T.num_classes() && b.size() == T.num_classes(),
              "class function has the wrong length");
  Cyclo acc;
  for (std::size_t c = 0; c < T.num_classes(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    acc = acc + (a[c] * b[c].conjugate()).scaled(Rational(Int(T.class_size(c))));
  }
  return acc.scaled(Rational(Int(1), Int(T.group_order())));
}

inline Cyclo inner_product(const CharacterTable& T, std::size_t i,
                           std::size_t j) {
  return inner_product(T, T.row(i), T.row(j));
}

// Inner product that must come out a non-negative rational integer
// (multiplicities of irreducible constituents).
inline u64 multiplicity_inner_product(const CharacterTable& T,
                                      const std::vector<Cyclo>& a,
                                      const std::vector<Cyclo>& b) {
  Cyclo v = inner_product(T, a, b);
  SCHUR_CHECK(v.is_rational(), "multiplicity is not rational");
  Rational r = v.rational_value();
  SCHUR_CHECK(boost::multiprecision::denominator(r) == 1 && r >= 0,
              "multiplicity is not a non-negative integer");
  return boost::multiprecision::numerator(r).convert_to<u64>();
}

// Exact check of both orthogonality relations; throws on any failure.
inline void verify_orthogonality(const CharacterTable& T) {
  std::size_t k = T.num_classes();
  SCHUR_CHECK(T.num_rows() == k, "table is not square");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclo v = inner_product(T, i, j);
      SCHUR_CHECK(v == Cyclo(i == j ? 1 : 0), "row orthogonality fails");
    }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = c; d < k; ++d) {
      Cyclo acc;
      for (std::size_t i = 0; i < k; ++i) {
        if (T.value(i, c).is_zero() || T.value(i, d).is_zero()) continue;
        acc = acc + T.value(i, c) * T.value(i, d).conjugate();
      }
      Cyclo expect = c == d ? Cyclo(Rational(Int(T.group_order()),
                                             Int(T.class_size(c))))
                            : Cyclo(0);
      SCHUR_CHECK(acc == expect, "column orthogonality fails");
    }
}

namespace detail_ct {

// Cheap counterpart of verify_orthogonality for freshly computed tables:
// send zeta_N to a fixed N-th root of unity modulo a prime l = 1 (mod N)
// beyond `lower`, evaluate every entry there, and test both relations with
// machine arithmetic.  A defective row would have to cancel at a prime
// unrelated to the one the lift used, so this catches construction errors
// at a tiny fraction of the exact check's cost.
inline void modular_orthogonality_check(const CharacterTable& T, u64 lower) {
  u64 N = T.exponent();
  std::size_t k = T.num_classes();
  u64 ell = next_prime_in_class(N, 1, std::max(lower, T.group_order()));
  u64 z = powmod(primitive_root_mod_prime(ell), (ell - 1) / N, ell);
  std::vector<u64> zpow(N, 1);
  for (u64 i = 1; i < N; ++i) zpow[i] = fp::mul(zpow[i - 1], z, ell);

  std::vector<std::vector<u64>> X(T.num_rows(), std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < T.num_rows(); ++i)
    for (std::size_t c = 0; c < k; ++c) {
      const Cyclo& v = T.value(i, c);
      u64 step = N / v.conductor();
      u64 acc = 0;
      for (const auto& [e, coeff] : v.coefficients()) {
        Int num = boost::multiprecision::numerator(coeff) % Int(ell);
        if (num < 0) num += ell;
        acc = fp::add(acc,
                      fp::mul(num.convert_to<u64>(),
                              zpow[static_cast<u64>(e) * step % N], ell),
                      ell);
      }
      X[i][c] = acc;
    }

  u64 g_mod = T.group_order() % ell;
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i; j < X.size(); ++j) {
      u64 s = 0;
      for (std::size_t c = 0; c < k; ++c)
        s = fp::add(s,
                    fp::mul(fp::mul(T.class_size(c) % ell, X[i][c], ell),
                            X[j][T.inverse_class(c)], ell),
                    ell);
      SCHUR_CHECK(s == (i == j ? g_mod : 0),
                  "row orthogonality fails in the modular image");
    }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = c; d < k; ++d) {
      u64 s = 0;
      for (std::size_t i = 0; i < X.size(); ++i)
        s = fp::add(s, fp::mul(X[i][c], X[i][T.inverse_class(d)], ell), ell);
      u64 want =
          c == d ? fp::mul(invmod(T.class_size(c) % ell, ell), g_mod, ell) : 0;
      SCHUR_CHECK(s == want, "column orthogonality fails in the modular image");
    }
}

}  // namespace detail_ct

// ---------------------------------------------------------------------------
// Table construction.

inline void CharacterTable::sort_rows() {
  std::vector<std::size_t> idx(rows_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (degrees_[a] != degrees_[b]) return degrees_[a] < degrees_[b];
    return std::lexicographical_compare(rows_[a].begin(), rows_[a].end(),
                                        rows_[b].begin(), rows_[b].end());
  });
  std::vector<std::vector<Cyclo>> rows;
  std::vector<u64> degs;
  rows.reserve(idx.size());
  for (auto i : idx) {
    rows.push_back(std::move(rows_[i]));
    degs.push_back(degrees_[i]);
  }
  rows_ = std::move(rows);
  degrees_ = std::move(degs);
}

inline void CharacterTable::structural_checks() const {
  SCHUR_CHECK(rows_.size() == sizes_.size(), "table is not square");
  u64 degsum = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    SCHUR_CHECK(degrees_[i] >= 1 && order_ % degrees_[i] == 0,
                "degree must divide the group order");
    degsum += degrees_[i] * degrees_[i];
    SCHUR_CHECK(value(i, identity_) == Cyclo(Int(degrees_[i])),
                "identity value must equal the degree");
    for (std::size_t c = 0; c < sizes_.size(); ++c) {
      SCHUR_CHECK(value(i, c).is_integral(), "value is not integral");
      SCHUR_CHECK(exponent_ % value(i, c).conductor() == 0,
                  "value conductor must divide the exponent");
      SCHUR_CHECK(value(i, inv_[c]) == value(i, c).conjugate(),
                  "inverse classes must carry conjugate values");
    }
  }
  SCHUR_CHECK(degsum == order_, "degree squares must sum to the group order");
}

inline void CharacterTable::compute_abelian(const Group& G,
                                            CharacterTable& T) {
  PcConversion conv = G.to_polycyclic();
  const PcRep& rep = conv.group.pc_presentation();
  std::size_t n = rep.ngens();
  u64 N = T.exponent_;
  PcOps ops(rep);

  // Exponent vectors b with value zeta_N^{b_i} on generator i, built from the
  // bottom of the series up: each power relation g_i^{p_i} = tail forces
  // p_i * b_i = sum tail_k b_k (mod N), which has exactly p_i solutions.
  std::vector<std::vector<u64>> bvecs{std::vector<u64>(n, 0)};
  for (std::size_t j = n; j-- > 0;) {
    u64 p = rep.relord[j];
    Elt tail = rep.power_tail.empty() || rep.power_tail[j].empty()
                   ? ops.identity()
                   : rep.power_tail[j];
    std::vector<std::vector<u64>> next;
    next.reserve(bvecs.size() * p);
    for (const auto& b : bvecs) {
      u64 a = 0;
      for (std::size_t k = j + 1; k < n; ++k)
        a = (a + static_cast<u64>(tail[k]) % N * b[k]) % N;
      SCHUR_CHECK(N % p == 0 && a % p == 0,
                  "linear character extension has no solution");
      for (u64 t = 0; t < p; ++t) {
        auto nb = b;
        nb[j] = (a / p + t * (N / p)) % N;
        next.push_back(std::move(nb));
      }
    }
    bvecs = std::move(next);
  }
  SCHUR_CHECK(bvecs.size() == G.order(), "wrong number of linear characters");
  auto sorted = bvecs;
  std::sort(sorted.begin(), sorted.end());
  SCHUR_CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
              "linear characters collided");

  const Classes& cl = G.classes();
  T.rows_.reserve(bvecs.size());
  for (const auto& b : bvecs) {
    std::vector<Cyclo> row(cl.count());
    for (std::size_t c = 0; c < cl.count(); ++c) {
      const Elt& w = conv.group.elements()[conv.to_pc[cl.rep[c]]];
      u64 e = 0;
      for (std::size_t i = 0; i < n; ++i)
        e = (e + static_cast<u64>(w[i]) % N * b[i]) % N;
      row[c] = Cyclo::root_of_unity(N, static_cast<i64>(e));
    }
    T.rows_.push_back(std::move(row));
    T.degrees_.push_back(1);
  }
}

inline u64 CharacterTable::compute_dixon(const Group& G, CharacterTable& T) {
  const Classes& cl = G.classes();
  std::size_t k = cl.count();
  u64 N = T.exponent_;
  u64 order = G.order();
  if (k * order > kMaxClassMatrixWork)
    throw_resource("character table work bound exceeded");
  u64 ell = next_prime_in_class(N, 1, 2 * detail_ct::isqrt64(order));

  // one class-multiplication matrix, computed via y = x^{-1} z_t
  auto class_matrix = [&](std::size_t j) {
    detail_ct::Mat M(k, detail_ct::Vec(k, 0));
    std::vector<std::uint32_t> inv_members;
    inv_members.reserve(cl.members[j].size());
    for (auto x : cl.members[j]) inv_members.push_back(G.inv(x));
    for (std::size_t t = 0; t < k; ++t) {
      std::uint32_t zt = cl.rep[t];
      for (auto xi : inv_members) ++M[cl.of_elt[G.mul(xi, zt)]][t];
    }
    for (auto& row : M)
      for (auto& x : row) x %= ell;
    return M;
  };

  std::vector<detail_ct::Subspace> spaces(1);
  spaces[0].basis.assign(k, detail_ct::Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    spaces[0].basis[i][i] = 1;
    spaces[0].pivots.push_back(i);
  }
  Rng rng(0x0d1c50u);
  for (std::size_t j = 1; j < k; ++j) {
    bool split_needed = false;
    for (const auto& S : spaces) split_needed |= S.basis.size() > 1;
    if (!split_needed) break;
    detail_ct::Mat M = class_matrix(j);
    std::vector<detail_ct::Subspace> next;
    for (auto& S : spaces) {
      if (S.basis.size() == 1) {
        next.push_back(std::move(S));
        continue;
      }
      for (auto& part : detail_ct::eigen_split(S, M, ell, rng))
        next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  for (const auto& S : spaces)
    SCHUR_CHECK(S.basis.size() == 1,
                "class matrices failed to separate the central characters");

  // fixed root-of-unity correspondence: zeta_N <-> g0^((ell-1)/N)
  u64 g0 = primitive_root_mod_prime(ell);
  u64 z = powmod(g0, (ell - 1) / N, ell);

  std::vector<u64> size_inv(k);
  for (std::size_t c = 0; c < k; ++c) size_inv[c] = invmod(cl.size(c) % ell, ell);

  T.rows_.reserve(k);
  for (const auto& S : spaces) {
    detail_ct::Vec w = S.basis[0];
    SCHUR_CHECK(w[0] != 0, "central character vanishes on the identity");
    u64 scale = invmod(w[0], ell);
    for (auto& x : w) x = fp::mul(x, scale, ell);

    // degree from the second orthogonality against itself:
    // chi(1)^2 = |G| / sum_t w_t w_{t'} / |C_t|
    u64 den = 0;
    for (std::size_t t = 0; t < k; ++t)
      den = fp::add(den, fp::mul(fp::mul(w[t], w[cl.inv_class[t]], ell),
                                 size_inv[t], ell),
                    ell);
    SCHUR_CHECK(den != 0, "degree denominator vanished");
    u64 d2 = fp::mul(order % ell, invmod(den, ell), ell);
    auto root = fp::sqrt_mod(d2, ell);
    SCHUR_CHECK(root.has_value(), "degree square has no square root");
    u64 deg = std::min(*root, ell - *root);
    SCHUR_CHECK(deg >= 1 && deg * deg <= order, "implausible degree");

    std::vector<u64> val(k);  // character values mod ell
    for (std::size_t c = 0; c < k; ++c)
      val[c] = fp::mul(fp::mul(deg % ell, w[c], ell), size_inv[c], ell);

    // lift each value from its root-of-unity multiplicities
    std::vector<Cyclo> row(k);
    for (std::size_t t = 0; t < k; ++t) {
      u64 n = cl.elt_order[t];
      std::vector<u64> pow_class(n);
      for (u64 i = 0; i < n; ++i)
        pow_class[i] =
            G.class_of_power(static_cast<std::uint32_t>(t), static_cast<i64>(i));
      u64 zt = powmod(z, N / n, ell);
      u64 zt_inv = invmod(zt, ell);
      u64 n_inv = invmod(n % ell, ell);
      Cyclo v;
      u64 msum = 0;
      for (u64 kk = 0; kk < n; ++kk) {
        u64 acc = 0, root_pow = 1;  // zt^{-i kk}
        u64 step = powmod(zt_inv, kk, ell);
        for (u64 i = 0; i < n; ++i) {
          acc = fp::add(acc, fp::mul(val[pow_class[i]], root_pow, ell), ell);
          root_pow = fp::mul(root_pow, step, ell);
        }
        u64 mult = fp::mul(acc, n_inv, ell);
        SCHUR_CHECK(mult <= deg, "root-of-unity multiplicity out of range");
        msum += mult;
        if (mult != 0)
          v = v + Cyclo::root_of_unity(n, static_cast<i64>(kk))
                      .scaled(Rational(Int(mult)));
      }
      SCHUR_CHECK(msum == deg, "multiplicities do not sum to the degree");
      row[t] = std::move(v);
    }
    T.rows_.push_back(std::move(row));
    T.degrees_.push_back(deg);
  }
  return ell;
}

inline CharacterTable CharacterTable::compute(const Group& G) {
  CharacterTable T;
  T.group_ = G;
  T.order_ = G.order();
  T.exponent_ = G.exponent();
  const Classes& cl = G.classes();
  if (cl.count() > kMaxClasses)
    throw_resource("too many conjugacy classes for a character table");
  T.orders_ = cl.elt_order;
  T.inv_ = cl.inv_class;
  T.sizes_.resize(cl.count());
  for (std::size_t c = 0; c < cl.count(); ++c) T.sizes_[c] = cl.size(c);
  T.identity_ = 0;  // canonical class order puts the identity first
  SCHUR_CHECK(T.orders_[0] == 1, "identity class must come first");

  u64 lift_prime = 0;
  if (G.is_abelian())
    compute_abelian(G, T);
  else
    lift_prime = compute_dixon(G, T);

  T.sort_rows();
  T.structural_checks();
  // Cross-check against a modular image at a prime the lift never touched;
  // exact verification stays available through verify_orthogonality.
  detail_ct::modular_orthogonality_check(T, lift_prime);
  return T;
}

inline CharacterTable CharacterTable::detached(
    u64 group_order, std::vector<u64> class_orders, std::vector<u64> class_sizes,
    std::vector<std::uint32_t> inverse_class,
    std::map<u64, std::vector<std::uint32_t>> power_maps,
    std::vector<std::vector<Cyclo>> rows) {
  CharacterTable T;
  std::size_t k = class_orders.size();
  if (k == 0 || class_sizes.size() != k || inverse_class.size() != k ||
      rows.size() != k)
    throw_domain("table data must be square and non-empty");
  if (k > kMaxClasses) throw_resource("too many classes in table data");
  T.order_ = group_order;
  T.orders_ = std::move(class_orders);
  T.sizes_ = std::move(class_sizes);
  T.inv_ = std::move(inverse_class);
  T.powmaps_ = std::move(power_maps);
  T.rows_ = std::move(rows);

  u64 total = 0;
  T.exponent_ = 1;
  std::optional<std::size_t> ident;
  for (std::size_t c = 0; c < k; ++c) {
    if (T.orders_[c] == 0 || T.sizes_[c] == 0 || group_order % T.orders_[c] != 0)
      throw_domain("impossible class order or size");
    total += T.sizes_[c];
    T.exponent_ = lcm_u64(T.exponent_, T.orders_[c]);
    if (T.inv_[c] >= k || T.orders_[T.inv_[c]] != T.orders_[c] ||
        T.sizes_[T.inv_[c]] != T.sizes_[c] || T.inv_[T.inv_[c]] != c)
      throw_domain("inverse-class map is not an order-preserving involution");
    if (T.orders_[c] == 1) {
      if (ident.has_value() || T.sizes_[c] != 1)
        throw_domain("identity class must be unique of size 1");
      ident = c;
    }
  }
  if (total != group_order)
    throw_domain("class sizes do not sum to the group order");
  if (!ident.has_value()) throw_domain("no identity class");
  T.identity_ = *ident;

  for (const auto& [kk, m] : T.powmaps_) {
    if (m.size() != k) throw_domain("power map has the wrong length");
    for (std::size_t c = 0; c < k; ++c) {
      u64 n = T.orders_[c];
      if (m[c] >= k || T.orders_[m[c]] != n / std::gcd(n, kk % n == 0 ? n : kk % n))
        throw_domain("power map is inconsistent with element orders");
    }
  }

  for (std::size_t i = 0; i < k; ++i)
    if (T.rows_[i].size() != k) throw_domain("character row has wrong length");
  T.degrees_.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Cyclo& d = T.rows_[i][T.identity_];
    if (!d.is_rational() || !d.is_integral() || d.is_zero())
      throw_domain("identity column must hold positive integer degrees");
    Rational r = d.rational_value();
    if (r < 0) throw_domain("identity column must hold positive degrees");
    T.degrees_.push_back(boost::multiprecision::numerator(r).convert_to<u64>());
  }

  try {
    T.structural_checks();
    verify_orthogonality(T);
  } catch (const Error& e) {
    // inputs, not internal state, are at fault here
    throw_domain(std::string("table data rejected: ") + e.what());
  }
  return T;
}

// ---------------------------------------------------------------------------
// Derived notions.

// Map classes of an embedded subgroup to classes of the parent.
inline std::vector<std::uint32_t> class_fusion(const GroupEmbedding& emb,
                                               const Group& parent) {
  const Classes& cu = emb.group.classes();
  std::vector<std::uint32_t> fus(cu.count());
  for (std::size_t c = 0; c < cu.count(); ++c) {
    fus[c] = parent.class_of(emb.to_parent[cu.rep[c]]);
    SCHUR_CHECK(parent.classes().elt_order[fus[c]] == cu.elt_order[c],
                "fusion must preserve element orders");
  }
  return fus;
}

// Values of a parent character on the classes of a subgroup.
inline std::vector<Cyclo> restrict_character(
    const CharacterTable& parent_table, std::size_t chi,
    const std::vector<std::uint32_t>& fusion) {
  std::vector<Cyclo> out(fusion.size());
  for (std::size_t c = 0; c < fusion.size(); ++c)
    out[c] = parent_table.value(chi, fusion[c]);
  return out;
}

// <eta^G, chi> computed on the subgroup side of Frobenius reciprocity.
inline u64 induced_inner_product(const CharacterTable& sub_table,
                                 std::size_t eta,
                                 const CharacterTable& parent_table,
                                 std::size_t chi,
                                 const std::vector<std::uint32_t>& fusion) {
  return multiplicity_inner_product(
      sub_table, sub_table.row(eta),
      restrict_character(parent_table, chi, fusion));
}

inline int frobenius_schur_indicator(const CharacterTable& T, std::size_t i) {
  Cyclo acc;
  for (std::size_t c = 0; c < T.num_classes(); ++c)
    acc = acc + T.value(i, T.power_class(c, 2))
                    .scaled(Rational(Int(T.class_size(c))));
  acc = acc.scaled(Rational(Int(1), Int(T.group_order())));
  if (!acc.is_rational() || !acc.is_integral())
    throw_internal("indicator did not come out an integer");
  Rational r = acc.rational_value();
  if (r < -1 || r > 1) throw_internal("indicator out of range");
  return r == 1 ? 1 : (r == -1 ? -1 : 0);
}

// Classes on which the character takes its degree; they form the kernel.
inline std::vector<std::uint32_t> kernel_classes(const CharacterTable& T,
                                                 std::size_t i) {
  std::vector<std::uint32_t> out;
  Cyclo deg(Int(T.degree(i)));
  for (std::size_t c = 0; c < T.num_classes(); ++c)
    if (T.value(i, c) == deg) out.push_back(static_cast<std::uint32_t>(c));
  return out;
}

inline bool is_faithful(const CharacterTable& T, std::size_t i) {
  auto ker = kernel_classes(T, i);
  return ker.size() == 1 && ker[0] == T.identity_class();
}

// The field Q(chi) as the subgroup of (Z/N)^* fixing every value.
inline FieldSubgroup character_field(const CharacterTable& T, std::size_t i) {
  return stabilizer_subgroup(T.row(i), T.exponent());
}

// Index of the Galois-conjugate row under u in (Z/N)^*.
inline std::size_t galois_conjugate_row(const CharacterTable& T, std::size_t i,
                                        u64 u) {
  u64 N = T.exponent();
  SCHUR_CHECK(std::gcd(u % N, N) == 1, "conjugating by a non-unit");
  std::vector<Cyclo> conj(T.num_classes());
  for (std::size_t c = 0; c < T.num_classes(); ++c) {
    const Cyclo& v = T.value(i, c);
    conj[c] = v.conductor() == 1 ? v : v.galois(u % v.conductor());
  }
  for (std::size_t j = 0; j < T.num_rows(); ++j)
    if (T.row(j) == conj) return j;
  throw_internal("table is not closed under Galois conjugation");
}

// ---------------------------------------------------------------------------
// p-blocks.

struct Block {
  u64 p = 2;
  u64 defect = 0;
  std::vector<std::size_t> members;  // row indices, ascending
};

namespace detail_ct {

// Reduction of an algebraic integer in Q(zeta_N) to the residue field
// F_p[x]/(f): the p-power part of every root of unity collapses to 1 and
// zeta_m goes to the class of x, a fixed primitive m-th root of unity.
inline fp::Poly reduce_mod_prime_ideal(const Cyclo& v, u64 N, u64 p, u64 m,
                                       const fp::Poly& f,
                                       const std::vector<fp::Poly>& xpow) {
  SCHUR_CHECK(v.is_integral(), "reducing a non-integral value");
  fp::Poly acc;
  for (const auto& [e, coeff] : v.coefficients()) {
    Int num = boost::multiprecision::numerator(coeff) % Int(p);
    if (num < 0) num += p;
    u64 c = num.convert_to<u64>();
    if (c == 0) continue;
    u64 lifted = static_cast<u64>(e) * (N / v.conductor()) % m;
    acc = fp::poly_add(acc, fp::poly_scale(xpow[lifted], c, p), p);
  }
  return acc;
}

inline std::vector<std::vector<std::size_t>> block_partition(
    const CharacterTable& T, u64 p, const fp::Poly& f) {
  u64 N = T.exponent();
  u64 m = pprime_part(N, p);
  std::vector<fp::Poly> xpow(m);
  xpow[0] = fp::Poly{1};
  for (u64 i = 1; i < m; ++i)
    xpow[i] = fp::poly_mulmod(xpow[i - 1], fp::Poly{0, 1}, f, p);
  std::map<std::vector<fp::Poly>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < T.num_rows(); ++i) {
    std::vector<fp::Poly> key(T.num_classes());
    for (std::size_t c = 0; c < T.num_classes(); ++c) {
      // central character value |C| chi(C) / chi(1), an algebraic integer
      Cyclo omega = T.value(i, c).scaled(
          Rational(Int(T.class_size(c)), Int(T.degree(i))));
      key[c] = reduce_mod_prime_ideal(omega, N, p, m, f, xpow);
    }
    buckets[std::move(key)].push_back(i);
  }
  std::vector<std::vector<std::size_t>> parts;
  parts.reserve(buckets.size());
  for (auto& [key, members] : buckets) parts.push_back(std::move(members));
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace detail_ct

inline std::vector<Block> p_blocks(const CharacterTable& T, u64 p) {
  if (!is_prime(p)) throw_domain("p_blocks: p must be prime");
  u64 a = valuation(T.group_order(), p);
  std::vector<Block> blocks;
  if (a == 0) {
    // p does not divide |G|: every character sits alone with defect 0
    for (std::size_t i = 0; i < T.num_rows(); ++i)
      blocks.push_back(Block{p, 0, {i}});
    return blocks;
  }
  u64 m = pprime_part(T.exponent(), p);
  auto factors = fp::factor_squarefree(fp::cyclotomic_mod(m, p), p);
  auto parts = detail_ct::block_partition(T, p, factors[0]);
  if (factors.size() > 1) {
    // the partition must not depend on which prime ideal we picked
    auto again = detail_ct::block_partition(T, p, factors[1]);
    SCHUR_CHECK(parts == again, "block partition depends on the reduction map");
  }
  std::size_t covered = 0;
  for (auto& members : parts) {
    Block B;
    B.p = p;
    B.members = std::move(members);
    // defect = largest p-valuation of |G|/chi(1) across the block, so the
    // principal block gets the full valuation and height-zero members exist
    B.defect = 0;
    for (auto i : B.members) {
      SCHUR_CHECK(T.group_order() % T.degree(i) == 0, "degree does not divide");
      B.defect = std::max<u64>(B.defect,
                               valuation(T.group_order() / T.degree(i), p));
    }
    SCHUR_CHECK(B.defect <= a, "defect exceeds the p-valuation of the order");
    covered += B.members.size();
    blocks.push_back(std::move(B));
  }
  SCHUR_CHECK(covered == T.num_rows(), "blocks must partition the characters");
  // defect-0 characters are alone in their blocks
  for (const auto& B : blocks)
    if (B.defect == 0)
      SCHUR_CHECK(B.members.size() == 1, "defect-0 block must be a singleton");
  return blocks;
}

// Whether the defect groups of a block are cyclic, when that can be decided
// cheaply: defect <= 1 or a cyclic Sylow subgroup force yes; a full-defect
// block has Sylow defect groups, so a non-cyclic Sylow forces no.
enum class CyclicDefect { yes, no, unknown };

inline CyclicDefect cyclic_defect_status(const Group& G, const Block& B) {
  if (B.defect <= 1) return CyclicDefect::yes;
  if (G.is_cyclic_set(G.sylow(B.p))) return CyclicDefect::yes;
  if (B.defect == valuation(G.order(), B.p)) return CyclicDefect::no;
  return CyclicDefect::unknown;
}

// [K(chi) : Q_p(chi)] where K is generated over Q_p by the values of every
// character in the block on classes of order prime to p.
inline u64 benard_K_degree(const CharacterTable& T, const Block& B,
                           std::size_t chi, const PAdicGaloisGroup& Gp) {
  SCHUR_CHECK(std::find(B.members.begin(), B.members.end(), chi) !=
                  B.members.end(),
              "character must belong to the block");
  SCHUR_CHECK(Gp.p == B.p, "block prime and local group prime differ");
  std::vector<Cyclo> block_values;
  for (auto i : B.members)
    for (std::size_t c = 0; c < T.num_classes(); ++c)
      if (T.class_order(c) % B.p != 0) block_values.push_back(T.value(i, c));
  return local_degree(Gp, T.row(chi), block_values);
}

// ---------------------------------------------------------------------------
// Linear characters of cyclic groups, with faithfulness flags.

struct LinearCharacters {
  CharacterTable table;         // every row is linear
  std::vector<bool> faithful;   // per row
};

inline LinearCharacters linear_characters_of_cyclic(const Group& C) {
  if (!C.is_abelian() || C.exponent() != C.order())
    throw_domain("linear_characters_of_cyclic: group is not cyclic");
  LinearCharacters out{CharacterTable::compute(C), {}};
  out.faithful.resize(out.table.num_rows());
  for (std::size_t i = 0; i < out.table.num_rows(); ++i)
    out.faithful[i] = is_faithful(out.table, i);
  return out;
}

}  // namespace schur
