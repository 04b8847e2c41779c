#include "disclab/discriminator.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <set>

namespace {

using disclab::Int;
using disclab::LucasParams;

TEST(disc_brute, golden_values) {
  LucasParams p1(1);
  EXPECT_EQ(disclab::disc_brute(p1, 1).value, 1);
  EXPECT_EQ(disclab::disc_brute(p1, 2).value, 2);
  EXPECT_EQ(disclab::disc_brute(p1, 130).value, 250);
  LucasParams p2(2);
  EXPECT_EQ(disclab::disc_brute(p2, 5).value, 6);
  LucasParams p5(5);
  EXPECT_EQ(disclab::disc_brute(p5, 11).value, 12);
  EXPECT_THROW(disclab::disc_brute(p1, 0), std::invalid_argument);
  EXPECT_THROW(disclab::disc_brute(p1, 50'000'001), disclab::capacity_error);
}

TEST(disc_brute, record_shape) {
  LucasParams p1(1);
  auto r = disclab::disc_brute(p1, 130);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.n, 130u);
  EXPECT_EQ(r.method, disclab::disc_method::brute);
  EXPECT_EQ(r.classification, disclab::disc_class::two_a_five_b);
  EXPECT_TRUE(r.certified);
  EXPECT_FALSE(r.candidate.has_value());
}

TEST(discriminates, window_edges) {
  LucasParams p1(1);
  EXPECT_TRUE(disclab::discriminates(p1, 130, 250));
  EXPECT_FALSE(disclab::discriminates(p1, 130, 200));
  EXPECT_FALSE(disclab::discriminates(p1, 130, 130));
  EXPECT_TRUE(disclab::discriminates(p1, 1, 1));
  EXPECT_FALSE(disclab::discriminates(p1, 5, 4));  // pigeonhole
  EXPECT_THROW(disclab::discriminates(p1, 0, 5), std::invalid_argument);
}

TEST(disc_closed_k1, plateaus_and_neighbors) {
  const std::pair<std::uint64_t, long> cases[] = {
      {1, 1},     {2, 2},     {128, 128},  {129, 250},  {140, 250},  {150, 250},
      {151, 256}, {256, 256}, {257, 500},  {300, 500},  {301, 512},  {512, 512},
      {513, 1000}, {600, 1000}, {601, 1024}, {1024, 1024}, {1025, 2000}, {1200, 2000},
      {1201, 2048}};
  for (auto [n, want] : cases) {
    EXPECT_EQ(disclab::disc_closed_k1(n).value, want) << "n = " << n;
  }
}

TEST(disc_closed_k1, matches_brute_sweep) {
  LucasParams p1(1);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    EXPECT_EQ(disclab::disc_closed_k1(n).value, disclab::disc_brute(p1, n).value) << "n = " << n;
  }
}

TEST(disc_closed_k2, examples_and_sweep) {
  EXPECT_EQ(disclab::disc_closed_k2(3).value, 4);
  EXPECT_EQ(disclab::disc_closed_k2(5).value, 6);
  EXPECT_EQ(disclab::disc_closed_k2(7).value, 8);
  EXPECT_EQ(disclab::disc_closed_k2(49).value, 64);
  EXPECT_EQ(disclab::disc_closed_k2(97).value, 128);
  LucasParams p2(2);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    EXPECT_EQ(disclab::disc_closed_k2(n).value, disclab::disc_brute(p2, n).value) << "n = " << n;
  }
}

TEST(disc_closed_general, certificates) {
  LucasParams p3(3);
  auto [r5, cert5] = disclab::disc_closed_general(p3, 5);
  EXPECT_EQ(r5.value, 6);
  EXPECT_TRUE(cert5);
  LucasParams p8(8);
  auto [r25, cert25] = disclab::disc_closed_general(p8, 25);
  EXPECT_EQ(r25.value, 32);
  EXPECT_TRUE(cert25);
  EXPECT_THROW(disclab::disc_closed_general(LucasParams(2), 5), std::invalid_argument);
}

TEST(disc_auto, dispatch_and_fallback) {
  LucasParams p1(1);
  auto r130 = disclab::disc_auto(p1, 130);
  EXPECT_EQ(r130.value, 250);
  EXPECT_EQ(r130.method, disclab::disc_method::closed_k1);
  EXPECT_TRUE(r130.certified);

  LucasParams p2(2);
  EXPECT_EQ(disclab::disc_auto(p2, 97).method, disclab::disc_method::closed_k2);

  for (long k : {3L, 7L}) {
    LucasParams p(k);
    for (std::uint64_t n = 1; n <= 120; ++n) {
      auto r = disclab::disc_auto(p, n);
      auto b = disclab::disc_brute(p, n);
      ASSERT_EQ(r.value, b.value) << "k = " << k << " n = " << n;
      EXPECT_TRUE(r.certified);
      if (r.method == disclab::disc_method::auto_dispatch) {
        // uncertified closed candidate: fallback recorded both values
        ASSERT_TRUE(r.candidate.has_value());
        EXPECT_LE(r.value, *r.candidate) << "k = " << k << " n = " << n;
      } else {
        EXPECT_EQ(r.method, disclab::disc_method::closed_general);
      }
    }
  }
}

TEST(disc_brute_range, matches_pointwise) {
  LucasParams p3(3);
  auto rows = disclab::disc_brute_range(p3, 2, 80, 3);
  ASSERT_EQ(rows.size(), 79u);
  for (std::uint64_t n = 2; n <= 80; ++n) {
    EXPECT_EQ(rows[n - 2].value, disclab::disc_brute(p3, n).value) << "n = " << n;
    EXPECT_EQ(rows[n - 2].n, n);
  }
}

TEST(brute_values, shape_and_bounds_k1) {
  LucasParams p1(1);
  for (std::uint64_t n = 2; n <= 256; ++n) {
    Int v = disclab::disc_brute(p1, n).value;
    EXPECT_GE(v, n);
    EXPECT_LT(v, 2 * disclab::u64_to_int(n));
    EXPECT_EQ(v % 2, 0) << "n = " << n;
    Int r = v;
    while (r % 2 == 0) r /= 2;
    while (r % 5 == 0) r /= 5;
    EXPECT_EQ(r, 1) << "value " << v.get_str() << " at n = " << n;
  }
}

TEST(is_two_a_five_b, characterization) {
  for (long v : {10L, 20L, 40L, 50L, 250L, 4000L}) EXPECT_TRUE(disclab::is_two_a_five_b(v)) << v;
  for (long v : {1L, 2L, 4L, 5L, 8L, 15L, 25L, 128L, 30L}) {
    EXPECT_FALSE(disclab::is_two_a_five_b(v)) << v;
  }
}

TEST(classify_value, chain) {
  LucasParams p1(1);
  EXPECT_EQ(disclab::classify_value(p1, 1), disclab::disc_class::power_of_two);
  EXPECT_EQ(disclab::classify_value(p1, 64), disclab::disc_class::power_of_two);
  EXPECT_EQ(disclab::classify_value(p1, 250), disclab::disc_class::two_a_five_b);
  EXPECT_EQ(disclab::classify_value(p1, 15), disclab::disc_class::exceptional_candidate);
  LucasParams p3(3);
  EXPECT_EQ(disclab::classify_value(p3, 3), disclab::disc_class::in_A);
  EXPECT_EQ(disclab::classify_value(p3, 6), disclab::disc_class::in_B);
}

TEST(image_k1, prefixes) {
  auto im10 = disclab::image_k1(10);
  EXPECT_EQ(im10, (std::vector<Int>{1, 2, 4, 8}));
  EXPECT_EQ(disclab::image_k1(1), std::vector<Int>{Int(1)});
  auto im = disclab::image_k1(4100);
  std::set<Int> s(im.begin(), im.end());
  EXPECT_EQ(s.size(), im.size());
  EXPECT_TRUE(std::is_sorted(im.begin(), im.end()));
  for (long v : {250L, 500L, 1000L, 2000L, 4000L, 2048L, 4096L}) EXPECT_TRUE(s.count(v)) << v;
  for (long v : {125L, 50L, 40L, 1600L, 3L}) EXPECT_FALSE(s.count(v)) << v;
}

TEST(exceptional_intervals, first_three) {
  auto iv = disclab::exceptional_intervals_k1({7, 8, 9});
  ASSERT_EQ(iv.size(), 3u);
  EXPECT_EQ(iv[0].n_lo, 129u);
  EXPECT_EQ(iv[0].n_hi, 150u);
  EXPECT_EQ(iv[0].value, 250);
  EXPECT_EQ(iv[1].n_lo, 257u);
  EXPECT_EQ(iv[1].n_hi, 300u);
  EXPECT_EQ(iv[1].value, 500);
  EXPECT_EQ(iv[2].n_lo, 513u);
  EXPECT_EQ(iv[2].n_hi, 600u);
  EXPECT_EQ(iv[2].value, 1000);
  EXPECT_THROW(disclab::exceptional_intervals_k1({6}), std::invalid_argument);
  EXPECT_THROW(disclab::exceptional_intervals_k1({57}), disclab::capacity_error);
}

TEST(fk_extract, k2_empty) {
  auto fk = disclab::fk_extract(LucasParams(2), 600);
  EXPECT_TRUE(fk.empty());
  EXPECT_THROW(disclab::fk_extract(LucasParams(1), 100), std::invalid_argument);
}

TEST(fk_extract, dense_k_hits_250) {
  // k = 1 + lcm(1..250): every m <= 250 sees the same residue windows as k = 1,
  // but k(k+1) has no odd prime factor below 251, so 250 is exceptional
  Int l = 1;
  for (long i = 2; i <= 250; ++i) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), i);
  LucasParams big(l + 1);
  auto fk = disclab::fk_extract(big, 150);
  bool has250 = false;
  for (const auto& r : fk) {
    EXPECT_EQ(r.classification, disclab::disc_class::exceptional_candidate);
    if (r.value == 250) has250 = true;
  }
  EXPECT_TRUE(has250);
}

TEST(twocases_law, small_moduli) {
  // for m = 2^a 5^b with a, b >= 1: the first n terms stay distinct mod m iff 3m >= 5n
  LucasParams p1(1);
  for (Int m = 10; m <= 400; ++m) {
    if (!disclab::is_two_a_five_b(m)) continue;
    std::uint64_t mm = disclab::to_u64(m);
    for (std::uint64_t n = 1; n <= mm + 2; ++n) {
      bool law = 3 * m >= 5 * disclab::u64_to_int(n);
      ASSERT_EQ(disclab::discriminates(p1, n, m), law) << "m = " << m << " n = " << n;
    }
  }
}

}  // namespace
