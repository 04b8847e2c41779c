#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "disclab/appearance.hpp"
#include "disclab/fixedpoint.hpp"
#include "disclab/int_util.hpp"
#include "disclab/lucas.hpp"
#include "disclab/parallel.hpp"

namespace disclab {

enum class disc_method { brute, closed_k1, closed_k2, closed_general, auto_dispatch };
enum class disc_class { power_of_two, two_a_five_b, in_A, in_B, exceptional_candidate };

struct DiscriminatorRecord {
  Int k;
  std::uint64_t n;
  Int value;
  disc_method method;
  disc_class classification;
  bool certified;               // the value is provably the discriminator
  std::optional<Int> candidate; // A/B candidate when an uncertified case fell back to brute
};

inline bool is_two_a_five_b(const Int& v) {
  if (v < 10) return false;
  Int r = v;
  unsigned long a = mpz_remove(r.get_mpz_t(), r.get_mpz_t(), Int(2).get_mpz_t());
  unsigned long b = mpz_remove(r.get_mpz_t(), r.get_mpz_t(), Int(5).get_mpz_t());
  return a >= 1 && b >= 1 && r == 1;
}

inline disc_class classify_value(const LucasParams& params, const Int& v) {
  assert(v >= 1);
  if (mpz_popcount(v.get_mpz_t()) == 1) return disc_class::power_of_two;
  if (in_set_A(params, v)) return disc_class::in_A;
  if (in_set_B(params, v)) return disc_class::in_B;
  // the 2^a 5^b family describes the k = 1 image only
  if (params.k() == 1 && is_two_a_five_b(v)) return disc_class::two_a_five_b;
  return disc_class::exceptional_candidate;
}

namespace detail {

inline bool distinct_window_u64_table(std::uint64_t c, std::uint64_t m, std::uint64_t n) {
  static thread_local std::vector<std::uint64_t> stamp;
  static thread_local std::uint64_t epoch = 0;
  if (stamp.size() < m) stamp.resize(m, 0);
  if (++epoch == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    epoch = 1;
  }
  bool distinct = true;
  window_scan_u64(c, m, n, [&](std::uint64_t, std::uint64_t r) {
    if (stamp[r] == epoch) {
      distinct = false;
      return false;
    }
    stamp[r] = epoch;
    return true;
  });
  return distinct;
}

inline bool distinct_window_u64_sorted(std::uint64_t c, std::uint64_t m, std::uint64_t n) {
  std::vector<std::uint64_t> res;
  res.reserve(n);
  window_scan_u64(c, m, n, [&](std::uint64_t, std::uint64_t r) {
    res.push_back(r);
    return true;
  });
  std::sort(res.begin(), res.end());
  return std::adjacent_find(res.begin(), res.end()) == res.end();
}

inline bool distinct_window_mpz(const Int& coeff, const Int& m, std::uint64_t n) {
  std::vector<Int> res;
  res.reserve(n);
  window_scan_mpz(coeff, m, n, [&](std::uint64_t, const Int& r) {
    res.push_back(r);
    return true;
  });
  std::sort(res.begin(), res.end());
  return std::adjacent_find(res.begin(), res.end()) == res.end();
}

inline Int smallest_pow2_at_least(std::uint64_t n) {
  assert(n >= 1);
  Int v = 1;
  while (v < u64_to_int(n)) v <<= 1;
  return v;
}

}  // namespace detail

// true iff U_0..U_{n-1} are pairwise distinct mod m. Occupancy table up to
// table_cap entries; sorted residues beyond that.
inline bool discriminates(const LucasParams& params, std::uint64_t n, const Int& m,
                          std::uint64_t table_cap = 1u << 24) {
  if (n < 1) throw std::invalid_argument("discriminates: n must be >= 1");
  if (m < 1) throw std::invalid_argument("discriminates: m must be >= 1");
  if (n == 1) return true;
  if (m < u64_to_int(n)) return false;  // pigeonhole
  if (n > 100'000'000) throw capacity_error("discriminates: window too large");
  if (fits_u64(m) && to_u64(m) <= 0xffffffffULL) {
    std::uint64_t mm = to_u64(m);
    std::uint64_t c = to_u64(params.coefficient() % m);
    return mm <= table_cap ? detail::distinct_window_u64_table(c, mm, n)
                           : detail::distinct_window_u64_sorted(c, mm, n);
  }
  return detail::distinct_window_mpz(params.coefficient() % m, m, n);
}

// Smallest m with the first n terms pairwise distinct mod m. The power-of-two
// bound confines the search to [n, 2n); exhausting the window is impossible.
inline DiscriminatorRecord disc_brute(const LucasParams& params, std::uint64_t n,
                                      std::uint64_t table_cap = 1u << 24) {
  if (n < 1) throw std::invalid_argument("disc_brute: n must be >= 1");
  if (n > 50'000'000) throw capacity_error("disc_brute: n too large");
  for (std::uint64_t m = n; m < 2 * n; ++m) {
    Int mm = u64_to_int(m);
    if (discriminates(params, n, mm, table_cap))
      return {params.k(), n, mm, disc_method::brute, classify_value(params, mm), true, std::nullopt};
  }
  throw inconsistency_error("disc_brute: window [n, 2n) exhausted; power-of-two bound violated");
}

inline std::vector<DiscriminatorRecord> disc_brute_range(const LucasParams& params,
                                                         std::uint64_t n_from, std::uint64_t n_to,
                                                         unsigned threads = 0,
                                                         std::uint64_t table_cap = 1u << 24) {
  if (n_from < 1 || n_from > n_to) throw std::invalid_argument("disc_brute_range: bad range");
  std::vector<DiscriminatorRecord> out(n_to - n_from + 1,
                                       {0, 0, 0, disc_method::brute, disc_class::power_of_two, false, std::nullopt});
  parallel_for(n_from, n_to + 1, threads,
               [&](std::uint64_t n) { out[n - n_from] = disc_brute(params, n, table_cap); });
  return out;
}

namespace detail {

// smallest 2^a*5^b >= lo with a,b >= 1
inline Int smallest_2a5b_at_least(const Int& lo) {
  Int best = 0;
  for (Int p5 = 5;; p5 *= 5) {
    if (best != 0 && 2 * p5 >= best) break;
    Int w = 2 * p5;
    while (w < lo) w <<= 1;
    if (best == 0 || w < best) best = w;
  }
  return best;
}

}  // namespace detail

// k=1 closed form: min of v_n (smallest 2^e >= n) and w_n (smallest 2^a*5^b,
// a,b >= 1, with 3*w >= 5*n; exact integer comparison).
inline DiscriminatorRecord disc_closed_k1(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("disc_closed_k1: n must be >= 1");
  LucasParams params(1);
  if (n == 1)
    return {1, 1, 1, disc_method::closed_k1, disc_class::power_of_two, true, std::nullopt};
  Int v = detail::smallest_pow2_at_least(n);
  Int lo = (u64_to_int(n) * 5 + 2) / 3;  // ceil(5n/3)
  Int w = detail::smallest_2a5b_at_least(lo);
  const Int& value = v < w ? v : w;
  return {1, n, value, disc_method::closed_k1, classify_value(params, value), true, std::nullopt};
}

// k=2 closed form: min over {2^e >= n} and {3*2^f >= n, f >= 1}.
inline DiscriminatorRecord disc_closed_k2(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("disc_closed_k2: n must be >= 1");
  LucasParams params(2);
  Int v = detail::smallest_pow2_at_least(n);
  Int u = 6;
  while (u < u64_to_int(n)) u <<= 1;
  const Int& value = v < u ? v : u;
  return {2, n, value, disc_method::closed_k2, classify_value(params, value), true, std::nullopt};
}

// k>2 candidate: smallest member of A_k or B_k that is >= n. Equality with the
// true discriminator is certified when candidate < 3n/2 (2*candidate < 3*n).
inline std::pair<DiscriminatorRecord, bool> disc_closed_general(const LucasParams& params,
                                                                std::uint64_t n) {
  if (params.k() <= 2) throw std::invalid_argument("disc_closed_general: requires k > 2");
  if (n < 1) throw std::invalid_argument("disc_closed_general: n must be >= 1");
  Int limit = u64_to_int(n) * 2;
  for (Int m = u64_to_int(n); m < limit; ++m) {
    if (!membership_positive(params, m)) continue;
    bool certified = 2 * m < 3 * u64_to_int(n);
    DiscriminatorRecord rec{params.k(), n,    m,         disc_method::closed_general,
                            classify_value(params, m), certified, std::nullopt};
    return {rec, certified};
  }
  throw inconsistency_error("disc_closed_general: no A/B member in [n, 2n)");
}

// Dispatch to the k-appropriate closed form; uncertified k>2 cases fall back
// to brute force and record both values. A brute value above the candidate
// contradicts the upper bound and is reported, never reconciled.
inline DiscriminatorRecord disc_auto(const LucasParams& params, std::uint64_t n,
                                     std::uint64_t table_cap = 1u << 24) {
  if (n < 1) throw std::invalid_argument("disc_auto: n must be >= 1");
  if (params.k() == 1) return disc_closed_k1(n);
  if (params.k() == 2) return disc_closed_k2(n);
  auto [cand, certified] = disc_closed_general(params, n);
  if (certified) return cand;
  DiscriminatorRecord brute = disc_brute(params, n, table_cap);
  if (brute.value > cand.value)
    throw inconsistency_error("disc_auto: brute value exceeds the A/B candidate upper bound");
  brute.method = disc_method::auto_dispatch;
  brute.candidate = cand.value;
  return brute;
}

// --- the M set ---------------------------------------------------------------

// Fixed-point constants for the fractional-part test {b*log2(5)} >= 1 - log2(6/5).
struct MSetParams {
  unsigned precision_bits;
  unsigned frac_bits;
  Int theta;      // log2(5) scaled by 2^frac_bits
  Int threshold;  // 1 - log2(6/5) scaled by 2^frac_bits

  explicit MSetParams(unsigned precision_bits_ = 192) : precision_bits(precision_bits_) {
    if (precision_bits < 128) throw std::invalid_argument("MSetParams: precision_bits must be >= 128");
    frac_bits = precision_bits + 64;
    theta = log2_fixed(5, 1, frac_bits);
    threshold = (Int(1) << frac_bits) - log2_fixed(6, 5, frac_bits);
    assert(threshold > 0 && threshold < Int(1) << frac_bits);
  }
};

// Membership of b in the fractional-part set; throws undecidable_error when
// {b*theta} lands within 2^-(precision_bits/2) of the threshold (or of the
// wrap-around at 0/1, where accumulated drift could flip the fractional part).
inline bool m_set_member(const Int& b, const MSetParams& params = MSetParams()) {
  if (b < 1) throw std::invalid_argument("m_set_member: b must be >= 1");
  unsigned margin_shift = params.frac_bits - params.precision_bits / 2;
  if (b > Int(1) << (margin_shift - 8))
    throw capacity_error("m_set_member: b too large for the configured precision");
  const Int one = Int(1) << params.frac_bits;
  Int frac = (b * params.theta) & (one - 1);
  const Int margin = Int(1) << margin_shift;
  Int dist = frac - params.threshold;
  if (dist < 0) dist = -dist;
  if (dist < margin || frac < margin || one - frac < margin)
    throw undecidable_error("m_set_member: undecidable at precision (b = " + b.get_str() + ")");
  return frac >= params.threshold;
}

// Integer form of the same test: with c the bit length of 5^b,
// b is a member iff 5*2^c <= 6*5^b. Exact; used as a cross-check.
inline bool m_set_member_exact(unsigned long b) {
  if (b < 1) throw std::invalid_argument("m_set_member_exact: b must be >= 1");
  Int p5;
  mpz_pow_ui(p5.get_mpz_t(), Int(5).get_mpz_t(), b);
  std::size_t c = mpz_sizeinbase(p5.get_mpz_t(), 2);
  return 5 * (Int(1) << c) <= 6 * p5;
}

struct DensityEstimate {
  std::uint64_t members;
  std::uint64_t count;
  std::vector<std::uint64_t> undecided;

  double value() const { return count == 0 ? 0.0 : static_cast<double>(members) / static_cast<double>(count); }
};

inline DensityEstimate m_density(std::uint64_t count, const MSetParams& params = MSetParams()) {
  if (count < 1) throw std::invalid_argument("m_density: count must be >= 1");
  DensityEstimate est{0, count, {}};
  for (std::uint64_t b = 1; b <= count; ++b) {
    try {
      if (m_set_member(u64_to_int(b), params)) ++est.members;
    } catch (const undecidable_error&) {
      est.undecided.push_back(b);
    }
  }
  return est;
}

// Image of the k=1 discriminator: {1} plus 2^a*5^b with a >= 1 and b either 0
// or a member of the M set. Sorted ascending.
inline std::vector<Int> image_k1(const Int& limit, const MSetParams& params = MSetParams()) {
  if (limit < 1) throw std::invalid_argument("image_k1: limit must be >= 1");
  std::vector<Int> out{1};
  for (Int p2 = 2; p2 <= limit; p2 <<= 1) out.push_back(p2);
  Int p5 = 1;
  for (std::uint64_t b = 1;; ++b) {
    p5 *= 5;
    if (2 * p5 > limit) break;
    if (!m_set_member(u64_to_int(b), params)) continue;
    for (Int w = 2 * p5; w <= limit; w <<= 1) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Brute discriminator values for n <= n_max that lie outside A_k and B_k:
// the F_k candidates in range. One record per distinct value, ascending.
inline std::vector<DiscriminatorRecord> fk_extract(const LucasParams& params, std::uint64_t n_max,
                                                   unsigned threads = 0,
                                                   std::uint64_t table_cap = 1u << 24) {
  if (params.k() < 2) throw std::invalid_argument("fk_extract: requires k > 1");
  if (n_max < 1) throw std::invalid_argument("fk_extract: n_max must be >= 1");
  std::vector<DiscriminatorRecord> records = disc_brute_range(params, 1, n_max, threads, table_cap);
  std::set<Int> seen;
  std::vector<DiscriminatorRecord> out;
  for (DiscriminatorRecord& rec : records) {
    if (membership_positive(params, rec.value)) continue;
    if (!seen.insert(rec.value).second) continue;
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(),
            [](const DiscriminatorRecord& x, const DiscriminatorRecord& y) { return x.value < y.value; });
  return out;
}

struct ExceptionalInterval {
  unsigned long a;
  std::uint64_t n_lo, n_hi;
  Int value;
};

// The k=1 exceptional plateaus: n in [2^a+1, 2^(a-6)*75] maps to 2^(a-6)*125.
// Each interval is re-verified against the closed form at both endpoints and
// one interior point.
inline std::vector<ExceptionalInterval> exceptional_intervals_k1(const std::vector<unsigned long>& a_list) {
  std::vector<ExceptionalInterval> out;
  for (unsigned long a : a_list) {
    if (a < 7) throw std::invalid_argument("exceptional_intervals_k1: each a must be >= 7");
    if (a > 56) throw capacity_error("exceptional_intervals_k1: exponent too large");
    std::uint64_t lo = (1ull << a) + 1;
    std::uint64_t hi = 75ull << (a - 6);
    Int value = Int(125) << (a - 6);
    for (std::uint64_t n : {lo, (lo + hi) / 2, hi})
      if (disc_closed_k1(n).value != value)
        throw inconsistency_error("exceptional_intervals_k1: closed form disagrees on the plateau");
    out.push_back({a, lo, hi, value});
  }
  return out;
}

}  // namespace disclab
