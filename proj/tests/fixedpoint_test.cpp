#include "disclab/discriminator.hpp"
#include "disclab/fixedpoint.hpp"

#include <gtest/gtest.h>

namespace {

using disclab::Int;

TEST(log2_fixed, exact_powers_of_two) {
  EXPECT_EQ(disclab::log2_fixed(1, 1, 32), 0);
  EXPECT_EQ(disclab::log2_fixed(2, 1, 10), Int(1) << 10);
  EXPECT_EQ(disclab::log2_fixed(1024, 1, 64), Int(10) << 64);
  EXPECT_EQ(disclab::log2_fixed(8, 2, 20), Int(2) << 20);
}

TEST(log2_fixed, guards) {
  EXPECT_THROW(disclab::log2_fixed(3, 4, 32), std::invalid_argument);  // ratio < 1
  EXPECT_THROW(disclab::log2_fixed(0, 1, 32), std::invalid_argument);
  EXPECT_THROW(disclab::log2_fixed(5, 0, 32), std::invalid_argument);
  EXPECT_THROW(disclab::log2_fixed(5, 1, 0), std::invalid_argument);
}

// decimal prefixes pinned against an independent high-precision computation
TEST(log2_fixed, frozen_decimal_prefixes) {
  const unsigned F = 256;
  Int theta = disclab::log2_fixed(5, 1, F);
  Int ten18("1000000000000000000");
  EXPECT_EQ((theta * ten18) >> F, Int("2321928094887362347"));  // log2(5)

  Int l6 = disclab::log2_fixed(6, 1, F);
  Int ten12("1000000000000");
  EXPECT_EQ((l6 * ten12) >> F, Int("2584962500721"));  // log2(6)
}

TEST(log2_fixed, additive_identity) {
  const unsigned F = 192;
  Int l5 = disclab::log2_fixed(5, 1, F);
  Int l65 = disclab::log2_fixed(6, 5, F);
  Int l6 = disclab::log2_fixed(6, 1, F);
  Int diff = l5 + l65 - l6;
  EXPECT_LE(abs(diff), 2);
}

TEST(mset_params, frozen_threshold) {
  disclab::MSetParams mp(192);
  EXPECT_EQ(mp.frac_bits, 256u);
  Int ten36("1000000000000000000000000000000000000");
  EXPECT_EQ((mp.threshold * ten36) >> 256,
            Int("736965594166206166416580485541573667"));  // 1 - log2(6/5)
  EXPECT_THROW(disclab::MSetParams(64), std::invalid_argument);
}

TEST(m_set, prefix_membership) {
  const std::vector<unsigned long> members{3, 6, 9, 12, 15, 18, 21};
  std::size_t idx = 0;
  for (unsigned long b = 1; b <= 21; ++b) {
    bool want = idx < members.size() && members[idx] == b;
    EXPECT_EQ(disclab::m_set_member(Int(b)), want) << "b = " << b;
    if (want) ++idx;
  }
  EXPECT_FALSE(disclab::m_set_member(Int(24)));
  EXPECT_THROW(disclab::m_set_member(Int(0)), std::invalid_argument);
}

TEST(m_set, exact_integer_test_agrees) {
  disclab::MSetParams mp(192);
  for (unsigned long b = 1; b <= 3000; ++b) {
    EXPECT_EQ(disclab::m_set_member(Int(b), mp), disclab::m_set_member_exact(b)) << "b = " << b;
  }
}

TEST(m_set, density_prefix) {
  auto est = disclab::m_density(21);
  EXPECT_EQ(est.members, 7u);
  EXPECT_EQ(est.count, 21u);
  EXPECT_TRUE(est.undecided.empty());
  EXPECT_NEAR(est.value(), 1.0 / 3.0, 1e-9);
}

}  // namespace
