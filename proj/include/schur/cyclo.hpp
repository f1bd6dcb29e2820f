#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Values are stored over the power basis 1, z, ..., z^(phi(n)-1) of the
// minimal cyclotomic field containing them (the conductor; never 2 mod 4),
// with arbitrary-precision rational coefficients.  The power basis is an
// integral basis of Z[zeta_n], which makes integrality and divisibility by
// rational integers coefficient-wise tests.  No floating point anywhere.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schur/common.hpp"
#include "schur/numtheory.hpp"

namespace schur {

namespace detail {

using Poly = std::vector<Int>;  // coefficient list, lowest degree first

inline Poly poly_xn_minus_1(u64 n) {
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  return p;
}

// Exact division of integer polynomials; remainder must vanish.
inline Poly poly_exact_div(Poly num, const Poly& den) {
  SCHUR_CHECK(!den.empty() && den.back() != 0, "poly division by zero");
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    Int c = num[i + den.size() - 1];
    if (c == 0) continue;
    SCHUR_CHECK(c % den.back() == 0, "poly division not exact");
    Int f = c / den.back();
    q[i] = f;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i + j] -= f * den[j];
  }
  for (auto& c : num) SCHUR_CHECK(c == 0, "poly division left a remainder");
  return q;
}

inline Poly poly_substitute_power(const Poly& p, u64 k) {
  Poly out((p.size() - 1) * k + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * k] = p[i];
  return out;
}

// Phi_n as a sparse list of (degree, coefficient), ascending degree.
// Uses Phi_rad(n)(x^(n/rad)) with Phi built up one prime at a time via
// Phi_{mp}(x) = Phi_m(x^p) / Phi_m(x); the result has at most
// phi(rad(n)) + 1 terms, which keeps reduction cheap for smooth n.
inline std::vector<std::pair<u64, Int>> cyclotomic_poly_sparse(u64 n) {
  auto fac = factorize(n);
  u64 rad = 1;
  for (auto& pp : fac) rad *= pp.p;
  Poly phi{1};  // Phi_1 numerator handling starts from the first prime
  bool first = true;
  for (auto& pp : fac) {
    if (first) {
      phi.assign(pp.p, Int(1));  // 1 + x + ... + x^(p-1)
      first = false;
    } else {
      phi = poly_exact_div(poly_substitute_power(phi, pp.p), phi);
    }
  }
  if (first) phi = {Int(-1), Int(1)};  // n == 1: x - 1
  u64 stride = n / rad;
  std::vector<std::pair<u64, Int>> out;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i] != 0) out.emplace_back(i * stride, phi[i]);
  return out;
}

struct DownSolver {
  // Solves B*y = v where the columns of B are the power-basis coordinates
  // of zeta_d^j inside Q(zeta_n), d = n/p.  Returns nullopt if v is not in
  // the subfield.  T is the row transform bringing B to reduced echelon
  // form; pivots[c] is the row holding column c's pivot.
  std::vector<std::vector<Rational>> T;  // phi(n) x phi(n)
  std::vector<std::size_t> pivots;       // size phi(d)
  std::vector<bool> row_is_pivot;
  std::size_t rows = 0, cols = 0;

  std::optional<std::vector<Rational>> solve(
      const std::map<std::uint32_t, Rational>& v) const {
    std::vector<Rational> w(rows);
    for (auto& [e, c] : v)
      for (std::size_t r = 0; r < rows; ++r)
        if (!(T[r][e] == 0)) w[r] += T[r][e] * c;
    std::vector<Rational> y(cols);
    for (std::size_t c = 0; c < cols; ++c) y[c] = w[pivots[c]];
    for (std::size_t r = 0; r < rows; ++r)
      if (!row_is_pivot[r] && !(w[r] == 0)) return std::nullopt;
    return y;
  }
};

class CycloContext {
 public:
  explicit CycloContext(u64 n) : n_(n), phi_(euler_phi(n)) {
    if (n > 1000000) throw_resource("cyclotomic conductor too large");
    if (n > 1) {
      fpoly_ = cyclotomic_poly_sparse(n);
      SCHUR_CHECK(!fpoly_.empty() && fpoly_.back().first == phi_ &&
                      fpoly_.back().second == 1,
                  "cyclotomic polynomial degree mismatch");
      fpoly_.pop_back();  // keep only the sub-leading terms
    }
  }

  u64 n() const { return n_; }
  u64 phi() const { return phi_; }

  // Reduce a sparse exponent->coefficient map (exponents taken mod n) into
  // power-basis coordinates, by long division with the sparse Phi_n.
  std::map<std::uint32_t, Rational> reduce_raw(
      const std::map<std::uint32_t, Rational>& raw) const {
    if (raw.empty() || raw.rbegin()->first < phi_) {
      // already inside the power basis; just drop explicit zeros
      std::map<std::uint32_t, Rational> out;
      for (auto& [e, c] : raw)
        if (!(c == 0)) out.emplace(e, c);
      return out;
    }
    std::vector<Rational> a(n_);
    for (auto& [e, c] : raw) a[static_cast<u64>(e) % n_] += c;
    for (u64 i = n_; i-- > phi_;) {
      if (a[i] == 0) continue;
      Rational c = std::move(a[i]);
      a[i] = 0;
      // x^i = x^(i-phi) * (x^phi) = -x^(i-phi) * (sub-leading terms)
      for (auto& [d, f] : fpoly_) a[i - phi_ + d] -= c * Rational(f);
    }
    std::map<std::uint32_t, Rational> out;
    for (u64 i = 0; i < phi_; ++i)
      if (!(a[i] == 0)) out[static_cast<std::uint32_t>(i)] = std::move(a[i]);
    return out;
  }

  const DownSolver& down_solver(u64 p) const;

  const std::vector<std::pair<u64, Int>>& subleading_terms() const {
    return fpoly_;
  }

 private:
  u64 n_, phi_;
  std::vector<std::pair<u64, Int>> fpoly_;  // Phi_n minus its leading term
  mutable std::mutex mu_;
  mutable std::map<u64, std::shared_ptr<const DownSolver>> solvers_;
};

inline std::shared_ptr<const CycloContext> cyclo_context(u64 n) {
  static std::mutex mu;
  static std::unordered_map<u64, std::shared_ptr<const CycloContext>> reg;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = reg.find(n);
    if (it != reg.end()) return it->second;
  }
  auto ctx = std::make_shared<const CycloContext>(n);
  std::lock_guard<std::mutex> lk(mu);
  auto [it, _] = reg.emplace(n, ctx);
  return it->second;
}

}  // namespace detail

class Cyclo {
 public:
  Cyclo() : n_(1) {}
  /* implicit */ Cyclo(int v) : n_(1) {
    if (v != 0) c_[0] = Rational(v);
  }
  explicit Cyclo(const Rational& r) : n_(1) {
    if (!(r == 0)) c_[0] = r;
  }
  explicit Cyclo(const Int& v) : n_(1) {
    if (v != 0) c_[0] = Rational(v);
  }

  // zeta_order ^ exponent
  static Cyclo root_of_unity(u64 order, i64 exponent) {
    SCHUR_CHECK(order >= 1, "root_of_unity: order must be positive");
    i64 e = exponent % static_cast<i64>(order);
    if (e < 0) e += static_cast<i64>(order);
    std::map<std::uint32_t, Rational> raw;
    raw[static_cast<std::uint32_t>(e)] = Rational(1);
    return normalized(order, std::move(raw));
  }

  u64 conductor() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return n_ == 1; }
  bool is_integral() const {
    for (auto& [e, r] : c_)
      if (boost::multiprecision::denominator(r) != 1) return false;
    return true;
  }
  Rational rational_value() const {
    SCHUR_CHECK(n_ == 1, "rational_value: element is irrational");
    return c_.empty() ? Rational(0) : c_.begin()->second;
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    u64 m = lcm_u64(a.n_, b.n_);
    std::map<std::uint32_t, Rational> raw;
    a.lift_into(m, Rational(1), raw);
    b.lift_into(m, Rational(1), raw);
    return normalized(m, std::move(raw));
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    u64 m = lcm_u64(a.n_, b.n_);
    std::map<std::uint32_t, Rational> raw;
    a.lift_into(m, Rational(1), raw);
    b.lift_into(m, Rational(-1), raw);
    return normalized(m, std::move(raw));
  }
  Cyclo operator-() const {
    Cyclo r(*this);
    for (auto& [e, c] : r.c_) c = -c;
    return r;
  }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == 1) return b.scaled(a.rational_value());
    if (b.n_ == 1) return a.scaled(b.rational_value());
    u64 m = lcm_u64(a.n_, b.n_);
    u64 fa = m / a.n_, fb = m / b.n_;
    std::map<std::uint32_t, Rational> raw;
    for (auto& [ea, ca] : a.c_)
      for (auto& [eb, cb] : b.c_) {
        u64 e = (static_cast<u64>(ea) * fa + static_cast<u64>(eb) * fb) % m;
        raw[static_cast<std::uint32_t>(e)] += ca * cb;
      }
    return normalized(m, std::move(raw));
  }
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) {
    return a * b.inverse();
  }
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  Cyclo inverse() const;

  // Galois action zeta_n -> zeta_n^k; k must be a unit mod the conductor.
  Cyclo galois(u64 k) const {
    if (n_ == 1) return *this;
    k %= n_;
    if (std::gcd(k, n_) != 1)
      throw_domain("galois exponent not coprime to conductor");
    std::map<std::uint32_t, Rational> raw;
    for (auto& [e, c] : c_)
      raw[static_cast<std::uint32_t>(static_cast<u64>(e) * k % n_)] += c;
    // conductor is Galois-invariant, so skip the subfield descent
    return reduced_only(n_, std::move(raw));
  }

  Cyclo conjugate() const { return n_ <= 2 ? *this : galois(n_ - 1); }
  bool is_real() const { return conjugate() == *this; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Total order used only for canonical sorting of tables and reports.
  friend bool operator<(const Cyclo& a, const Cyclo& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    auto ia = a.c_.begin(), ib = b.c_.begin();
    for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (!(ia->second == ib->second)) return ia->second < ib->second;
    }
    return ia == a.c_.end() && ib != b.c_.end();
  }

  // m divides a in the ring of algebraic integers iff m divides every
  // coefficient over the integral power basis.
  friend bool integer_divides_algebraic(u64 m, const Cyclo& a) {
    SCHUR_CHECK(m >= 1, "divisor must be positive");
    if (!a.is_integral()) throw_domain("divisibility test on a non-integer");
    for (auto& [e, c] : a.c_)
      if (boost::multiprecision::numerator(c) % Int(m) != 0) return false;
    return true;
  }

  std::string to_string() const;
  static Cyclo parse(const std::string& s);

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    auto fold = [](const Int& v) {
      Int r = v % 1000000007;
      if (r < 0) r += 1000000007;
      return static_cast<std::size_t>(r);
    };
    for (auto& [e, c] : c_) {
      hash_mix(h, e);
      hash_mix(h, fold(boost::multiprecision::numerator(c)));
      hash_mix(h, fold(boost::multiprecision::denominator(c)));
    }
    return h;
  }

  const std::map<std::uint32_t, Rational>& coefficients() const { return c_; }

  Cyclo scaled(const Rational& r) const {
    if (r == 0) return Cyclo();
    Cyclo out(*this);
    for (auto& [e, c] : out.c_) c *= r;
    return out;
  }

 private:
  u64 n_;
  std::map<std::uint32_t, Rational> c_;

  void lift_into(u64 m, const Rational& scale,
                 std::map<std::uint32_t, Rational>& raw) const {
    u64 f = m / n_;
    for (auto& [e, c] : c_) {
      raw[static_cast<std::uint32_t>(static_cast<u64>(e) * f)] += c * scale;
    }
  }

  // Reduce exponents into the power basis of Q(zeta_n); no conductor work.
  static Cyclo reduced_only(u64 n, std::map<std::uint32_t, Rational> raw);
  // Full normal form: basis reduction plus descent to the conductor.
  static Cyclo normalized(u64 n, std::map<std::uint32_t, Rational> raw);
};

namespace detail {

inline const DownSolver& CycloContext::down_solver(u64 p) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = solvers_.find(p);
    if (it != solvers_.end()) return *it->second;
  }
  u64 d = n_ / p;
  auto dctx = cyclo_context(d);
  u64 rows = phi_, cols = dctx->phi();
  // B columns: zeta_d^j = zeta_n^(j * n/d) in the power basis of zeta_n.
  std::vector<std::vector<Rational>> B(rows, std::vector<Rational>(cols));
  for (u64 j = 0; j < cols; ++j) {
    std::map<std::uint32_t, Rational> single;
    single[static_cast<std::uint32_t>(j * (n_ / d) % n_)] = 1;
    for (auto& [i, c] : reduce_raw(single)) B[i][j] = c;
  }
  auto solver = std::make_shared<DownSolver>();
  solver->rows = rows;
  solver->cols = cols;
  solver->T.assign(rows, std::vector<Rational>(rows));
  for (u64 i = 0; i < rows; ++i) solver->T[i][i] = 1;
  solver->row_is_pivot.assign(rows, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && B[piv][c] == 0) ++piv;
    SCHUR_CHECK(piv < rows, "subfield basis is rank deficient");
    std::swap(B[piv], B[r]);
    std::swap(solver->T[piv], solver->T[r]);
    Rational inv = Rational(1) / B[r][c];
    for (auto& x : B[r]) x *= inv;
    for (auto& x : solver->T[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || B[i][c] == 0) continue;
      Rational f = B[i][c];
      for (std::size_t j = 0; j < cols; ++j) B[i][j] -= f * B[r][j];
      for (std::size_t j = 0; j < rows; ++j)
        solver->T[i][j] -= f * solver->T[r][j];
    }
    solver->pivots.push_back(r);
    solver->row_is_pivot[r] = true;
    ++r;
  }
  SCHUR_CHECK(solver->pivots.size() == cols, "subfield solve rank mismatch");
  std::lock_guard<std::mutex> lk(mu_);
  auto it = solvers_.emplace(p, solver).first;
  return *it->second;
}

}  // namespace detail

inline Cyclo Cyclo::inverse() const {
  SCHUR_CHECK(!is_zero(), "inverse of zero");
  if (n_ == 1) return Cyclo(Rational(1) / rational_value());
  // Extended Euclid in Q[x] against Phi_n, which is irreducible: the gcd is
  // a nonzero constant c with t*f ≡ c (mod Phi_n), so 1/f = t/c.
  auto ctx = detail::cyclo_context(n_);
  u64 phi = ctx->phi();
  using P = std::vector<Rational>;
  auto deg = [](const P& p) -> int {
    for (std::size_t i = p.size(); i-- > 0;)
      if (!(p[i] == 0)) return static_cast<int>(i);
    return -1;
  };
  P r0(phi + 1), r1(phi);
  r0[phi] = 1;
  for (auto& [d, f] : ctx->subleading_terms()) r0[d] = Rational(f);
  for (auto& [e, c] : c_) r1[e] = c;
  P t0, t1{Rational(1)};
  while (deg(r1) > 0) {
    int d0 = deg(r0), d1 = deg(r1);
    P q(d0 - d1 + 1);
    P rem = r0;
    for (int i = d0; i >= d1; --i) {
      if (rem[i] == 0) continue;
      Rational f = rem[i] / r1[d1];
      q[i - d1] = f;
      for (int j = 0; j <= d1; ++j) rem[i - d1 + j] -= f * r1[j];
    }
    P tn(std::max<std::size_t>(t0.size(), q.size() + t1.size()));
    for (std::size_t i = 0; i < t0.size(); ++i) tn[i] = t0[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < t1.size(); ++j) tn[i + j] -= q[i] * t1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  SCHUR_CHECK(deg(r1) == 0, "inverse: unit has a nonconstant gcd");
  Rational c = r1[deg(r1)];
  std::map<std::uint32_t, Rational> raw;
  for (std::size_t i = 0; i < t1.size(); ++i)
    if (!(t1[i] == 0)) raw[static_cast<std::uint32_t>(i)] = t1[i] / c;
  return normalized(n_, std::move(raw));
}

inline Cyclo Cyclo::reduced_only(u64 n, std::map<std::uint32_t, Rational> raw) {
  Cyclo out;
  if (n == 1) {
    Rational total;
    for (auto& [e, c] : raw) total += c;
    out.n_ = 1;
    if (!(total == 0)) out.c_[0] = total;
    return out;
  }
  auto ctx = detail::cyclo_context(n);
  out.n_ = n;
  out.c_ = ctx->reduce_raw(raw);
  return out;
}

inline Cyclo Cyclo::normalized(u64 n, std::map<std::uint32_t, Rational> raw) {
  Cyclo cur = reduced_only(n, std::move(raw));
  if (cur.c_.empty()) {
    cur.n_ = 1;
    return cur;
  }
  // Descend to the true conductor: repeatedly try each prime p | n.
  bool changed = true;
  while (changed && cur.n_ > 1) {
    changed = false;
    for (u64 p : prime_divisors(cur.n_)) {
      u64 d = cur.n_ / p;
      // Fixed by Gal(Q(zeta_n)/Q(zeta_d)) = units congruent to 1 mod d?
      bool fixed = true;
      for (u64 u = 1 + d; u < cur.n_ && fixed; u += d)
        if (std::gcd(u, cur.n_) == 1 && cur.galois(u) != cur) fixed = false;
      if (!fixed) continue;
      auto ctx = detail::cyclo_context(cur.n_);
      auto y = ctx->down_solver(p).solve(cur.c_);
      // Galois-fixed under everything above Q(zeta_d) means the element
      // lies in Q(zeta_d), so the coordinate solve cannot fail.
      SCHUR_CHECK(y.has_value(), "fixed element missing from subfield");
      Cyclo next;
      next.n_ = d;
      for (std::size_t j = 0; j < y->size(); ++j)
        if (!((*y)[j] == 0)) next.c_[static_cast<std::uint32_t>(j)] = (*y)[j];
      if (next.c_.empty()) next.n_ = 1;
      cur = std::move(next);
      changed = true;
      break;
    }
  }
  if (cur.c_.empty()) cur.n_ = 1;
  return cur;
}

inline std::string Cyclo::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : c_) {
    std::string coeff = c.str();
    bool neg = coeff[0] == '-';
    std::string mag = neg ? coeff.substr(1) : coeff;
    std::string term;
    if (n_ == 1 || e == 0) {
      term = mag;
    } else {
      std::string base = "E(" + std::to_string(n_) + ")";
      if (e > 1) base += "^" + std::to_string(e);
      term = (mag == "1") ? base : mag + "*" + base;
    }
    if (first) {
      os << (neg ? "-" : "") << term;
      first = false;
    } else {
      os << (neg ? "-" : "+") << term;
    }
  }
  return os.str();
}

inline Cyclo Cyclo::parse(const std::string& s) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw_parse("cyclotomic value '" + s + "' at position " +
                std::to_string(i) + ": " + why);
  };
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  auto parse_uint = [&]() -> Int {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected a number");
    Int v(s.substr(i, j - i));
    i = j;
    return v;
  };
  Cyclo total;
  skip_ws();
  bool expect_term = true;
  int sign = 1;
  while (i < s.size() || expect_term) {
    skip_ws();
    if (expect_term) {
      if (i >= s.size()) fail("expected a term");
      if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -sign;
        ++i;
        skip_ws();
        if (i >= s.size()) fail("expected a term after sign");
      }
      Rational coeff(1);
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        Int num = parse_uint();
        Int den = 1;
        skip_ws();
        if (i < s.size() && s[i] == '/') {
          ++i;
          skip_ws();
          den = parse_uint();
          if (den == 0) fail("zero denominator");
        }
        coeff = Rational(num, den);
        have_coeff = true;
        skip_ws();
        if (i < s.size() && s[i] == '*') {
          ++i;
          skip_ws();
        }
      }
      Cyclo term;
      if (i < s.size() && s[i] == 'E') {
        ++i;
        if (i >= s.size() || s[i] != '(') fail("expected '(' after E");
        ++i;
        Int order = parse_uint();
        if (i >= s.size() || s[i] != ')') fail("expected ')'");
        ++i;
        Int expo = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          skip_ws();
          bool eneg = false;
          if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            eneg = s[i] == '-';
            ++i;
          }
          expo = parse_uint();
          if (eneg) expo = -expo;
        }
        if (order <= 0 || order > 1000000) fail("root order out of range");
        i64 e64 = static_cast<i64>(expo % order);
        term = root_of_unity(static_cast<u64>(order), e64)
                   .scaled(coeff);
      } else if (have_coeff) {
        term = Cyclo(coeff);
      } else {
        fail("expected a coefficient or E(n)");
      }
      if (sign < 0) term = -term;
      total += term;
      expect_term = false;
    } else {
      if (s[i] == '+') {
        sign = 1;
      } else if (s[i] == '-') {
        sign = -1;
      } else {
        fail("expected '+' or '-'");
      }
      ++i;
      expect_term = true;
    }
    skip_ws();
  }
  return total;
}

// ---------------------------------------------------------------------------
// Subgroups of (Z/N)^* as descriptions of abelian fields Q(values) inside
// Q(zeta_N).

struct FieldSubgroup {
  u64 modulus = 1;
  std::vector<u64> elements;  // sorted, always contains 1
  std::vector<u64> gens;

  u64 order() const { return elements.size(); }
  u64 field_degree() const { return euler_phi(modulus) / order(); }
  bool contains(u64 u) const {
    u %= modulus ? modulus : 1;
    if (modulus <= 1) return true;
    return std::binary_search(elements.begin(), elements.end(), u);
  }
};

inline std::vector<u64> closure_mod(u64 n, std::vector<u64> seed) {
  if (n <= 1) return {1};
  std::vector<u64> elems{1};
  std::vector<u64> queue{1};
  auto add = [&](u64 x) {
    if (!std::binary_search(elems.begin(), elems.end(), x)) {
      elems.insert(std::lower_bound(elems.begin(), elems.end(), x), x);
      queue.push_back(x);
    }
  };
  for (u64 s : seed) add(s % n);
  while (!queue.empty()) {
    u64 x = queue.back();
    queue.pop_back();
    for (u64 s : seed) add(mulmod(x, s % n, n));
  }
  return elems;
}

inline std::vector<u64> small_generating_set_mod(u64 n,
                                                 const std::vector<u64>& elems) {
  std::vector<u64> gens;
  std::vector<u64> have{1};
  for (u64 x : elems) {
    if (std::binary_search(have.begin(), have.end(), x)) continue;
    gens.push_back(x);
    have = closure_mod(n, gens);
    if (have.size() == elems.size()) break;
  }
  return gens;
}

// Stabilizer in (Z/N)^* of a list of cyclotomic values (all of conductor
// dividing N).  Describes the field Q(values) as a subgroup of the Galois
// group of Q(zeta_N)/Q.
inline FieldSubgroup stabilizer_subgroup(const std::vector<Cyclo>& values,
                                         u64 N) {
  for (auto& v : values)
    if (N % v.conductor() != 0)
      throw_domain("value conductor does not divide the ambient modulus");
  FieldSubgroup H;
  H.modulus = N;
  for (u64 u : units_mod(N)) {
    bool fixes = true;
    for (auto& v : values) {
      if (v.conductor() == 1) continue;
      if (v.galois(u % v.conductor()) != v) {
        fixes = false;
        break;
      }
    }
    if (fixes) H.elements.push_back(u);
  }
  std::sort(H.elements.begin(), H.elements.end());
  H.gens = small_generating_set_mod(N, H.elements);
  return H;
}

// The same field described with the smallest cyclotomic modulus.  The
// conductor is the least f | N whose reduction kernel {u = 1 (mod f)} lies
// inside the stabilizer; the subgroup descends to its image mod f.
inline FieldSubgroup reduced_to_conductor(const FieldSubgroup& H) {
  u64 N = H.modulus;
  if (N <= 1) return {1, {1}, {}};
  for (u64 f : divisors(N)) {
    bool kernel_inside = true;
    for (u64 u : units_mod(N))
      if (u % f == 1 % f && !H.contains(u)) {
        kernel_inside = false;
        break;
      }
    if (!kernel_inside) continue;
    if (f == 1) return {1, {1}, {}};
    FieldSubgroup R;
    R.modulus = f;
    for (u64 u : H.elements) R.elements.push_back(u % f);
    std::sort(R.elements.begin(), R.elements.end());
    R.elements.erase(std::unique(R.elements.begin(), R.elements.end()),
                     R.elements.end());
    R.gens = small_generating_set_mod(f, R.elements);
    return R;
  }
  return H;  // f = N always qualifies
}

// Number of roots of unity in the fixed field of H (as a subfield of
// Q(zeta_N)); the roots of unity of Q(zeta_N) form a cyclic group of order
// lcm(2, N).
inline u64 roots_of_unity_count(const FieldSubgroup& H) {
  u64 N = H.modulus;
  if (N <= 2) return 2;  // the rationals contain only +-1
  u64 M = (N % 2 == 0) ? N : 2 * N;
  // zeta_M^j is fixed by sigma_u iff M/gcd(M, u'-1) divides j, where u' is
  // the odd lift of u to (Z/M)^*.  Intersecting over H leaves a cyclic
  // group of order gcd over H of gcd(M, u'-1); it is even since -1 is
  // always fixed.
  u64 g = M;
  for (u64 u : H.elements) {
    u64 lifted = (N % 2 == 1 && u % 2 == 0) ? u + N : u;
    g = std::gcd(g, gcd_u64(M, lifted - 1));
    if (g == 2) break;
  }
  SCHUR_CHECK(g % 2 == 0, "roots-of-unity count must be even");
  return g;
}

// Infinite places of the fixed field: the field is real iff complex
// conjugation (-1 mod N) lies in H.
struct InfinitePlaces {
  bool real;
  u64 count;
};

inline InfinitePlaces infinite_places(const FieldSubgroup& H) {
  u64 deg = H.field_degree();
  if (H.modulus <= 2) return {true, 1};
  bool real = H.contains(H.modulus - 1);
  return {real, real ? deg : deg / 2};
}

}  // namespace schur
