#include "disclab/int_util.hpp"

#include <gtest/gtest.h>

#include <cstdint>

namespace {

using disclab::Int;

TEST(is_prime_u64, small_cases) {
  EXPECT_FALSE(disclab::is_prime_u64(0));
  EXPECT_FALSE(disclab::is_prime_u64(1));
  EXPECT_TRUE(disclab::is_prime_u64(2));
  EXPECT_TRUE(disclab::is_prime_u64(3));
  EXPECT_FALSE(disclab::is_prime_u64(4));
  EXPECT_TRUE(disclab::is_prime_u64(97));
  EXPECT_FALSE(disclab::is_prime_u64(561));   // Carmichael
  EXPECT_FALSE(disclab::is_prime_u64(1105));  // Carmichael
  EXPECT_TRUE(disclab::is_prime_u64(1000003));
}

TEST(is_prime_u64, large_cases) {
  EXPECT_TRUE(disclab::is_prime_u64(2305843009213693951ULL));   // 2^61 - 1
  EXPECT_FALSE(disclab::is_prime_u64(2305843009213693951ULL - 2));
  EXPECT_TRUE(disclab::is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(disclab::is_prime_u64(18446744073709551615ULL));
}

TEST(check_prime, certification_tiers) {
  EXPECT_EQ(disclab::check_prime(Int(1)), disclab::primality::composite);
  EXPECT_EQ(disclab::check_prime(Int(97)), disclab::primality::prime);
  EXPECT_EQ(disclab::check_prime(Int(91)), disclab::primality::composite);
  Int m89 = (Int(1) << 89) - 1;  // Mersenne prime, above the deterministic range
  EXPECT_NE(disclab::check_prime(m89), disclab::primality::composite);
  EXPECT_EQ(disclab::check_prime(m89 + 2), disclab::primality::composite);
}

TEST(require_prime, guards) {
  EXPECT_NO_THROW(disclab::require_prime(Int(13)));
  EXPECT_THROW(disclab::require_prime(Int(12)), std::invalid_argument);
  EXPECT_NO_THROW(disclab::require_odd_prime(Int(13)));
  EXPECT_THROW(disclab::require_odd_prime(Int(2)), std::invalid_argument);
  EXPECT_THROW(disclab::require_odd_prime(Int(9)), std::invalid_argument);
}

TEST(legendre, known_symbols) {
  EXPECT_EQ(disclab::legendre(Int(2), Int(7)), 1);    // 7 = -1 mod 8
  EXPECT_EQ(disclab::legendre(Int(3), Int(7)), -1);
  EXPECT_EQ(disclab::legendre(Int(4), Int(7)), 1);
  EXPECT_EQ(disclab::legendre(Int(2), Int(29)), -1);  // 29 = 5 mod 8
  EXPECT_EQ(disclab::legendre(Int(7), Int(7)), 0);
  EXPECT_THROW(disclab::legendre(Int(2), Int(9)), std::invalid_argument);
}

TEST(nu_p, valuations) {
  EXPECT_EQ(disclab::nu_p(Int(675), Int(3)), 3u);  // 675 = 3^3 * 25
  EXPECT_EQ(disclab::nu_p(Int(675), Int(5)), 2u);
  EXPECT_EQ(disclab::nu_p(Int(40391), Int(13)), 2u);  // 40391 = 13^2 * 239
  EXPECT_EQ(disclab::nu_p(Int(40391), Int(239)), 1u);
  EXPECT_EQ(disclab::nu_p(Int(7), Int(3)), 0u);
}

TEST(factorize, small_certified) {
  auto f = disclab::factorize(Int(40391));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].p, 13);
  EXPECT_EQ(f.factors[0].e, 2u);
  EXPECT_EQ(f.factors[1].p, 239);
  EXPECT_EQ(f.factors[1].e, 1u);
  EXPECT_TRUE(f.certified);

  auto one = disclab::factorize(Int(1));
  EXPECT_TRUE(one.factors.empty());
  EXPECT_TRUE(one.certified);

  auto f288 = disclab::factorize(Int(288));  // 2^5 * 3^2
  ASSERT_EQ(f288.factors.size(), 2u);
  EXPECT_EQ(f288.factors[0].e, 5u);
  EXPECT_EQ(f288.factors[1].e, 2u);
}

TEST(factorize, big_paths) {
  // all small factors: delegates to the 64-bit strip once the cofactor shrinks
  Int n = (Int(1) << 100) * 3;
  auto f = disclab::factorize(n);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].p, 2);
  EXPECT_EQ(f.factors[0].e, 100u);
  EXPECT_EQ(f.factors[1].p, 3);
  EXPECT_TRUE(f.certified);

  // probable-prime cofactor above 64 bits is reported but not certified
  Int m89 = (Int(1) << 89) - 1;
  auto g = disclab::factorize(m89 * 4, 1000);
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0].p, 2);
  EXPECT_EQ(g.factors[1].p, m89);
  EXPECT_FALSE(g.certified);
}

TEST(factorize, capacity) {
  Int n = Int(1000003) * Int(1000033);  // both prime, both above the bound
  EXPECT_THROW(disclab::factorize(n, 1000), disclab::capacity_error);
  EXPECT_THROW(disclab::factorize(Int(0)), std::invalid_argument);
}

TEST(divisors_ascending, small) {
  auto d12 = disclab::divisors_ascending(Int(12));
  std::vector<Int> want{1, 2, 3, 4, 6, 12};
  EXPECT_EQ(d12, want);
  EXPECT_EQ(disclab::divisors_ascending(Int(1)), std::vector<Int>{Int(1)});
  auto d49 = disclab::divisors_ascending(Int(49));
  EXPECT_EQ(d49, (std::vector<Int>{1, 7, 49}));
}

TEST(u64_bridge, round_trip) {
  EXPECT_TRUE(disclab::fits_u64(Int("18446744073709551615")));
  EXPECT_FALSE(disclab::fits_u64(Int("18446744073709551616")));
  EXPECT_EQ(disclab::to_u64(Int("18446744073709551615")), 18446744073709551615ULL);
  EXPECT_EQ(disclab::u64_to_int(18446744073709551615ULL), Int("18446744073709551615"));
}

}  // namespace
