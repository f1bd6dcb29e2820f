#pragma once

// Elementary number theory over machine integers: factorization by trial
// division, Euler phi, multiplicative orders, CRT, modular arithmetic.
// Everything here is exact and deterministic; inputs stay well below 2^32
// in practice (group orders are capped), so trial division is fine.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "schur/common.hpp"

namespace schur {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<__uint128_t>(a) * b) % m);
}

inline u64 powmod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

inline u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

struct PrimePower {
  u64 p;
  unsigned e;
};

inline std::vector<PrimePower> factorize(u64 n) {
  std::vector<PrimePower> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto& pp : factorize(n)) out.push_back(pp.p);
  return out;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto& pp : factorize(n)) {
    std::size_t len = out.size();
    u64 q = 1;
    for (unsigned i = 0; i < pp.e; ++i) {
      q *= pp.p;
      for (std::size_t j = 0; j < len; ++j) out.push_back(out[j] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto& pp : factorize(n)) r = r / pp.p * (pp.p - 1);
  return r;
}

// p-adic valuation of n.
inline unsigned valuation(u64 n, u64 p) {
  SCHUR_CHECK(n != 0 && p >= 2, "valuation: bad arguments");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline u64 p_part(u64 n, u64 p) {
  u64 r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline u64 pprime_part(u64 n, u64 p) { return n / p_part(n, p); }

// Multiplicative order of a modulo n; requires gcd(a, n) == 1.
inline u64 multiplicative_order(u64 a, u64 n) {
  if (n == 1) return 1;
  a %= n;
  SCHUR_CHECK(std::gcd(a, n) == 1, "multiplicative_order: not a unit");
  u64 x = a % n, ord = 1;
  while (x != 1) {
    x = mulmod(x, a, n);
    ++ord;
    SCHUR_CHECK(ord <= n, "multiplicative_order: runaway loop");
  }
  return ord;
}

inline std::vector<u64> units_mod(u64 n) {
  std::vector<u64> out;
  if (n <= 1) return {1};  // degenerate: treat (Z/1)* as the trivial group
  for (u64 u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) out.push_back(u);
  return out;
}

// Smallest prime l with l ≡ r (mod n) and l > lower.
inline u64 next_prime_in_class(u64 n, u64 r, u64 lower) {
  u64 cand = r % n;
  if (cand == 0) cand = n;
  while (cand <= lower) cand += n;
  while (!is_prime(cand)) cand += n;
  return cand;
}

// Smallest generator of (Z/p)^* for prime p.
inline u64 primitive_root_mod_prime(u64 p) {
  SCHUR_CHECK(is_prime(p), "primitive_root: p not prime");
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto& pp : fac)
      if (powmod(g, (p - 1) / pp.p, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw_internal("primitive_root: none found");
}

// Modular inverse for a unit.
inline u64 invmod(u64 a, u64 n) {
  if (n == 1) return 0;
  i64 t = 0, newt = 1;
  i64 r = static_cast<i64>(n), newr = static_cast<i64>(a % n);
  while (newr != 0) {
    i64 q = r / newr;
    i64 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  SCHUR_CHECK(r == 1, "invmod: not a unit");
  if (t < 0) t += static_cast<i64>(n);
  return static_cast<u64>(t);
}

// x ≡ a (mod m), x ≡ b (mod n) with gcd(m, n) = 1; result mod m*n.
inline u64 crt(u64 a, u64 m, u64 b, u64 n) {
  SCHUR_CHECK(std::gcd(m, n) == 1, "crt: moduli not coprime");
  if (m == 1) return b % n;
  if (n == 1) return a % m;
  u64 mn = m * n;
  // x = a + m * k with m*k ≡ b-a (mod n)
  u64 diff = ((b % n) + n - (a % m) % n) % n;
  u64 k = mulmod(diff, invmod(m % n, n), n);
  return (a % m + m * k) % mn;
}

}  // namespace schur
