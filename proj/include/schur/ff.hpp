#pragma once

// Dense polynomial arithmetic over prime fields, with just enough
// factorization machinery for two consumers: root extraction of
// characteristic polynomials during table computation, and picking a
// canonical irreducible factor of a cyclotomic polynomial to pin down a
// residue field for block reductions.

#include <optional>
#include <utility>
#include <vector>

#include "schur/common.hpp"
#include "schur/cyclo.hpp"
#include "schur/numtheory.hpp"

namespace schur::fp {

inline u64 add(u64 a, u64 b, u64 p) {
  a += b;
  return a >= p ? a - p : a;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 neg(u64 a, u64 p) { return a ? p - a : 0; }
inline u64 mul(u64 a, u64 b, u64 p) { return mulmod(a, b, p); }
inline u64 inv(u64 a, u64 p) { return invmod(a % p, p); }

// Coefficients by ascending degree; the zero polynomial is the empty vector.
using Poly = std::vector<u64>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline bool is_zero(const Poly& f) { return f.empty(); }
inline std::size_t degree(const Poly& f) {
  SCHUR_CHECK(!f.empty(), "degree of zero polynomial");
  return f.size() - 1;
}

inline u64 eval(const Poly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x, p), f[i], p);
  return acc;
}

inline Poly poly_add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i], p);
  trim(r);
  return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i], p);
  trim(r);
  return r;
}

inline Poly poly_scale(Poly a, u64 c, u64 p) {
  for (auto& x : a) x = mul(x, c, p);
  trim(a);
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

inline Poly monic(Poly f, u64 p) {
  if (f.empty() || f.back() == 1) return f;
  u64 s = inv(f.back(), p);
  return poly_scale(std::move(f), s, p);
}

inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, u64 p) {
  SCHUR_CHECK(!b.empty(), "polynomial division by zero");
  if (a.size() < b.size()) return {{}, std::move(a)};
  Poly q(a.size() - b.size() + 1, 0);
  u64 lead_inv = inv(b.back(), p);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) {
      if (i == 0) break;
      continue;
    }
    u64 c = mul(a[i], lead_inv, p);
    q[i - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[i - (b.size() - 1) + j] =
          sub(a[i - (b.size() - 1) + j], mul(c, b[j], p), p);
    if (i == 0) break;
  }
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

inline Poly poly_mod(Poly a, const Poly& b, u64 p) {
  return poly_divmod(std::move(a), b, p).second;
}

inline Poly poly_gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return monic(std::move(a), p);
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  return poly_mod(poly_mul(a, b, p), f, p);
}

inline Poly poly_powmod(Poly base, Int e, const Poly& f, u64 p) {
  SCHUR_CHECK(e >= 0, "negative polynomial exponent");
  Poly acc{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if ((e & 1) != 0) acc = poly_mulmod(acc, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return acc;
}

// Coefficients of the m-th cyclotomic polynomial reduced mod p.
inline Poly cyclotomic_mod(u64 m, u64 p) {
  Poly f(euler_phi(m) + 1, 0);
  for (const auto& [e, c] : detail::cyclotomic_poly_sparse(m)) {
    Int r = c % static_cast<i64>(p);
    if (r < 0) r += p;
    f[e] = r.convert_to<u64>();
  }
  trim(f);
  return f;
}

namespace detail_ff {

// Equal-degree splitting (Cantor-Zassenhaus), f squarefree monic with all
// irreducible factors of degree d.
inline void edf(const Poly& f, std::size_t d, u64 p, Rng& rng,
                std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  while (true) {
    Poly a(degree(f), 0);
    for (auto& c : a) c = rng.below(p);
    trim(a);
    if (a.empty()) continue;
    Poly h;
    if (p == 2) {
      // trace map over F_{2^d}
      Poly t = a, cur = a;
      for (std::size_t i = 1; i < d; ++i) {
        cur = poly_mulmod(cur, cur, f, p);
        t = poly_add(t, cur, p);
      }
      h = poly_gcd(t, f, p);
    } else {
      Int e = (Int(pow(Int(p), static_cast<unsigned>(d))) - 1) / 2;
      Poly b = poly_powmod(a, e, f, p);
      if (b.empty()) continue;
      b[0] = sub(b[0], 1, p);
      trim(b);
      h = poly_gcd(b, f, p);
    }
    if (h.empty() || degree(h) == 0 || degree(h) == degree(f)) continue;
    edf(h, d, p, rng, out);
    edf(poly_divmod(f, h, p).first, d, p, rng, out);
    return;
  }
}

}  // namespace detail_ff

// All monic irreducible factors of a squarefree monic polynomial, sorted by
// (degree, coefficient vector) so callers get a canonical first choice.
// The random split sequence is seeded deterministically.
inline std::vector<Poly> factor_squarefree(Poly f, u64 p, u64 seed = 0x5eed) {
  f = monic(std::move(f), p);
  SCHUR_CHECK(!f.empty() && degree(f) >= 1, "factoring a constant");
  Rng rng(seed);
  std::vector<Poly> out;
  Poly frob{0, 1};  // x, advanced one Frobenius power per round
  for (std::size_t d = 1; !f.empty() && degree(f) >= 1; ++d) {
    if (degree(f) < 2 * d) {
      out.push_back(f);  // what remains is irreducible
      break;
    }
    frob = poly_powmod(std::move(frob), Int(p), f, p);
    Poly diff = poly_sub(frob, Poly{0, 1}, p);
    Poly g = poly_gcd(diff, f, p);
    if (!g.empty() && degree(g) >= 1) {
      detail_ff::edf(g, d, p, rng, out);
      f = poly_divmod(f, g, p).first;
      frob = poly_mod(std::move(frob), f, p);
      if (degree(f) == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

// Distinct roots in F_p of an arbitrary nonzero polynomial.
inline std::vector<u64> roots_mod(const Poly& f, u64 p, u64 seed = 0x5eed) {
  SCHUR_CHECK(!is_zero(f), "roots of the zero polynomial");
  if (degree(f) == 0) return {};
  Poly xp = poly_powmod(Poly{0, 1}, Int(p), f, p);
  Poly g = poly_gcd(poly_sub(xp, Poly{0, 1}, p), f, p);
  std::vector<u64> roots;
  if (g.empty() || degree(g) == 0) return roots;
  std::vector<Poly> linear;
  Rng rng(seed);
  detail_ff::edf(g, 1, p, rng, linear);
  for (const auto& l : linear) roots.push_back(neg(l[0], p));
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Tonelli-Shanks square root; empty when a is a non-residue.
inline std::optional<u64> sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) == 1) ++z;
  u64 m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mul(tt, tt, p);
      ++i;
      SCHUR_CHECK(i < m, "square root iteration diverged");
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul(b, b, p);
    m = i;
    c = mul(b, b, p);
    t = mul(t, c, p);
    r = mul(r, b, p);
  }
  return r;
}

}  // namespace schur::fp
