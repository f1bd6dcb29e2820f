#include <gtest/gtest.h>

#include "schur/numtheory.hpp"

using namespace schur;

TEST(NumTheory, Factorize) {
  auto f = factorize(1);
  EXPECT_TRUE(f.empty());

  f = factorize(272);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].p, 2u);
  EXPECT_EQ(f[0].e, 4u);
  EXPECT_EQ(f[1].p, 17u);
  EXPECT_EQ(f[1].e, 1u);

  f = factorize(14400);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].p, 2u);
  EXPECT_EQ(f[0].e, 6u);
  EXPECT_EQ(f[1].p, 3u);
  EXPECT_EQ(f[1].e, 2u);
  EXPECT_EQ(f[2].p, 5u);
  EXPECT_EQ(f[2].e, 2u);

  EXPECT_EQ(prime_divisors(120), (std::vector<u64>{2, 3, 5}));
}

TEST(NumTheory, Divisors) {
  EXPECT_EQ(divisors(1), (std::vector<u64>{1}));
  EXPECT_EQ(divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(17), (std::vector<u64>{1, 17}));
  EXPECT_EQ(divisors(36).size(), 9u);
}

TEST(NumTheory, EulerPhi) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(2), 1u);
  EXPECT_EQ(euler_phi(8), 4u);
  EXPECT_EQ(euler_phi(17), 16u);
  EXPECT_EQ(euler_phi(40), 16u);
  EXPECT_EQ(euler_phi(2520), 576u);
}

TEST(NumTheory, ValuationAndParts) {
  EXPECT_EQ(valuation(48, 2), 4u);
  EXPECT_EQ(valuation(48, 3), 1u);
  EXPECT_EQ(valuation(49, 2), 0u);
  EXPECT_EQ(p_part(272, 2), 16u);
  EXPECT_EQ(pprime_part(272, 2), 17u);
  EXPECT_EQ(p_part(117, 13), 13u);
  EXPECT_EQ(pprime_part(117, 13), 9u);
}

TEST(NumTheory, MultiplicativeOrder) {
  EXPECT_EQ(multiplicative_order(2, 17), 8u);
  EXPECT_EQ(multiplicative_order(3, 17), 16u);
  EXPECT_EQ(multiplicative_order(2, 7), 3u);
  EXPECT_EQ(multiplicative_order(3, 20), 4u);
  EXPECT_EQ(multiplicative_order(1, 5), 1u);
  EXPECT_EQ(multiplicative_order(2, 1), 1u);
  EXPECT_THROW(multiplicative_order(2, 8), Error);  // not a unit
}

TEST(NumTheory, UnitsMod) {
  EXPECT_EQ(units_mod(1), (std::vector<u64>{1}));
  EXPECT_EQ(units_mod(8), (std::vector<u64>{1, 3, 5, 7}));
  EXPECT_EQ(units_mod(12), (std::vector<u64>{1, 5, 7, 11}));
  EXPECT_EQ(units_mod(17).size(), 16u);
}

TEST(NumTheory, PrimesInResidueClass) {
  EXPECT_EQ(next_prime_in_class(4, 1, 2), 5u);
  EXPECT_EQ(next_prime_in_class(17, 1, 2), 103u);
  EXPECT_EQ(next_prime_in_class(60, 1, 240), 241u);
  EXPECT_EQ(next_prime_in_class(136, 1, 33), 137u);
  EXPECT_TRUE(is_prime(next_prime_in_class(180, 1, 240)));
  EXPECT_EQ(next_prime_in_class(180, 1, 240) % 180, 1u);
}

TEST(NumTheory, PrimitiveRoot) {
  EXPECT_EQ(primitive_root_mod_prime(2), 1u);
  EXPECT_EQ(primitive_root_mod_prime(3), 2u);
  EXPECT_EQ(primitive_root_mod_prime(7), 3u);
  EXPECT_EQ(primitive_root_mod_prime(17), 3u);
  EXPECT_EQ(primitive_root_mod_prime(41), 6u);
  // definition check on a larger prime
  u64 p = 103, g = primitive_root_mod_prime(p);
  EXPECT_EQ(multiplicative_order(g, p), p - 1);
}

TEST(NumTheory, ModularInverseAndCrt) {
  for (u64 m : {5u, 8u, 17u, 97u}) {
    for (u64 a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      u64 inv = invmod(a, m);
      EXPECT_EQ(mulmod(a, inv, m), 1u);
    }
  }
  // crt(a mod m, b mod n) for coprime m, n
  u64 x = crt(3, 16, 5, 17);
  EXPECT_EQ(x % 16, 3u);
  EXPECT_EQ(x % 17, 5u);
  EXPECT_LT(x, 16u * 17u);
  x = crt(1, 4, 2, 9);
  EXPECT_EQ(x % 4, 1u);
  EXPECT_EQ(x % 9, 2u);
}

TEST(NumTheory, PowMulMod) {
  EXPECT_EQ(powmod(2, 10, 1000), 24u);
  EXPECT_EQ(powmod(3, 0, 7), 1u);
  EXPECT_EQ(powmod(7, 100, 13), powmod(7, 100 % 12, 13));
  // values near 2^63 exercise the 128-bit path: big ≡ -2 (mod big+2)
  u64 big = 0x7fffffffffffffffULL;
  EXPECT_EQ(mulmod(big, big, big + 2), 4u);
}

TEST(NumTheory, IsPrime) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(17));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(7919));
  EXPECT_FALSE(is_prime(7917));
}
