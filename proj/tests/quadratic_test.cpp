#include "disclab/quadratic.hpp"

#include <gtest/gtest.h>

#include <cstdint>

namespace {

using disclab::Int;
using disclab::QuadIntMod;

TEST(quad, construction_guards) {
  EXPECT_NO_THROW(QuadIntMod(3, 2, 2, 1000));
  EXPECT_THROW(QuadIntMod(3, 2, 2, 1), std::invalid_argument);   // m >= 2
  EXPECT_THROW(QuadIntMod(3, 2, 0, 1000), std::invalid_argument); // d >= 1
  QuadIntMod q(-1, 1002, 2, 1000);  // canonicalized on entry
  EXPECT_EQ(q.a, 999);
  EXPECT_EQ(q.b, 2);
}

TEST(quad, fundamental_unit_square) {
  // (3 + 2*sqrt(2))^2 = 17 + 12*sqrt(2)
  QuadIntMod alpha(3, 2, 2, 1000);
  QuadIntMod sq = disclab::quad_mul(alpha, alpha);
  EXPECT_EQ(sq.a, 17);
  EXPECT_EQ(sq.b, 12);
}

TEST(quad, norm_is_one) {
  QuadIntMod alpha(3, 2, 2, 1000);
  QuadIntMod conj(3, 1000 - 2, 2, 1000);
  QuadIntMod prod = disclab::quad_mul(alpha, conj);
  EXPECT_EQ(prod.a, 1);
  EXPECT_EQ(prod.b, 0);
}

TEST(quad, mismatched_rings_throw) {
  QuadIntMod x(3, 2, 2, 1000);
  QuadIntMod y(3, 2, 2, 999);
  QuadIntMod z(3, 2, 3, 1000);
  EXPECT_THROW(disclab::quad_mul(x, y), std::invalid_argument);
  EXPECT_THROW(disclab::quad_mul(x, z), std::invalid_argument);
}

TEST(quad_pow, golden_values) {
  disclab::LucasParams p1(1);
  // alpha^7 = -1 mod 169 (z(169) = 7 with the doubled index convention)
  QuadIntMod r = disclab::quad_pow_mod(disclab::alpha_mod(p1, 169), 7);
  EXPECT_EQ(r.a, 168);
  EXPECT_EQ(r.b, 0);
  // alpha^3 = -1 mod 5
  QuadIntMod r5 = disclab::quad_pow_mod(disclab::alpha_mod(p1, 5), 3);
  EXPECT_EQ(r5.a, 4);
  EXPECT_EQ(r5.b, 0);
}

TEST(quad_pow, identity_and_base) {
  QuadIntMod alpha(3, 2, 2, 997);
  QuadIntMod e0 = disclab::quad_pow_mod(alpha, 0);
  EXPECT_EQ(e0, disclab::quad_one(2, 997));
  EXPECT_EQ(disclab::quad_pow_mod(alpha, 1), alpha);
}

TEST(quad_pow, agrees_with_repeated_multiplication) {
  for (long k = 1; k <= 3; ++k) {
    disclab::LucasParams p(k);
    QuadIntMod alpha = disclab::alpha_mod(p, 9973);
    QuadIntMod acc = disclab::quad_one(alpha.d, 9973);
    for (std::uint64_t e = 0; e <= 64; ++e) {
      EXPECT_EQ(disclab::quad_pow_mod(alpha, e), acc) << "k = " << k << " e = " << e;
      acc = disclab::quad_mul(acc, alpha);
    }
  }
}

TEST(quad, alpha_mod_shape) {
  disclab::LucasParams p(3);
  QuadIntMod a = disclab::alpha_mod(p, 101);
  EXPECT_EQ(a.a, 7);   // 2k + 1
  EXPECT_EQ(a.b, 2);
  EXPECT_EQ(a.d, 12);  // k(k+1)
  EXPECT_EQ(a.m, 101);
}

}  // namespace
