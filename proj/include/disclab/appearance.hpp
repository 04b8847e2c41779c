#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "disclab/int_util.hpp"
#include "disclab/lucas.hpp"

namespace disclab {

// Smallest n >= 1 with m | U_n. Always <= m; the linear scan enforces that.
inline Int z_brute(const LucasParams& params, const Int& m) {
  if (m < 1) throw std::invalid_argument("z_brute: m must be >= 1");
  if (m == 1) return 1;
  if (m > 100'000'000) throw capacity_error("z_brute: m too large for a linear scan");
  std::uint64_t found = 0;
  std::uint64_t mm = to_u64(m);
  if (mm <= 0xffffffffULL) {
    std::uint64_t c = to_u64(params.coefficient() % m);
    detail::window_scan_u64(c, mm, mm + 1, [&](std::uint64_t i, std::uint64_t r) {
      if (i >= 1 && r == 0) {
        found = i;
        return false;
      }
      return true;
    });
  } else {
    Int c = params.coefficient() % m;
    detail::window_scan_mpz(c, m, mm + 1, [&](std::uint64_t i, const Int& r) {
      if (i >= 1 && r == 0) {
        found = i;
        return false;
      }
      return true;
    });
  }
  if (found == 0) throw inconsistency_error("z_brute: no zero found up to m");
  return u64_to_int(found);
}

// z(p) for odd prime p. Equals p when p | 16k(k+1); otherwise divides
// (p - e)/2 with e the Legendre symbol of k(k+1) at p, and the ascending
// divisor scan finds the minimal annihilating index exactly.
inline Int z_of_prime(const LucasParams& params, const Int& p,
                      std::uint64_t factor_bound = 10'000'000) {
  require_odd_prime(p);
  if (mpz_divisible_p(params.delta().get_mpz_t(), p.get_mpz_t())) return p;
  int e = legendre(params.kk1(), p);
  assert(e == 1 || e == -1);
  Int span = (p - e) / 2;
  for (const Int& t : divisors_ascending(span, factor_bound))
    if (lucas_u_mod(params, t, p) == 0) return t;
  throw inconsistency_error("z_of_prime: no divisor of (p-e)/2 annihilates U mod p");
}

// z(p^b) = p^max(b-c,0) * z(p) for odd p, where c is the valuation of
// U_{z(p)} at p computed mod p^(b+2) and capped at b+1. Returns (z_pb, c).
inline std::pair<Int, unsigned long> z_of_prime_power(const LucasParams& params, const Int& p,
                                                      unsigned long b,
                                                      std::uint64_t factor_bound = 10'000'000) {
  if (p == 2) throw std::invalid_argument("z_of_prime_power: p must be odd (z(2^b) = 2^b)");
  if (b < 1) throw std::invalid_argument("z_of_prime_power: b must be >= 1");
  Int z1 = z_of_prime(params, p, factor_bound);
  Int pb2;
  mpz_pow_ui(pb2.get_mpz_t(), p.get_mpz_t(), b + 2);
  Int r = lucas_u_mod(params, z1, pb2);
  unsigned long c = r == 0 ? b + 1 : std::min<unsigned long>(b + 1, nu_p(r, p));
  assert(c >= 1);
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), p.get_mpz_t(), b > c ? b - c : 0);
  return {scale * z1, c};
}

enum class z_method { formula, brute };

struct PrimePowerLift {
  Int p;
  unsigned long b;
  Int z_pb;                       // z(p^b)
  std::optional<unsigned long> c; // valuation of U_{z(p)} at p, capped at b+1; absent for p = 2
};

struct AppearanceResult {
  Int m;
  Int z;
  std::vector<PrimePowerLift> breakdown;
  z_method method;
  bool factors_certified;
};

// z(m) = lcm of z(p^b) over the prime powers of m; z(2^b) = 2^b directly.
inline AppearanceResult z_of(const LucasParams& params, const Int& m,
                             std::uint64_t factor_bound = 10'000'000) {
  if (m < 1) throw std::invalid_argument("z_of: m must be >= 1");
  AppearanceResult res{m, 1, {}, z_method::formula, true};
  if (m == 1) return res;
  Factorization f = factorize(m, factor_bound);
  res.factors_certified = f.certified;
  for (const PrimePower& pp : f.factors) {
    PrimePowerLift lift{pp.p, pp.e, 0, std::nullopt};
    if (pp.p == 2) {
      lift.z_pb = Int(1) << pp.e;
    } else {
      auto [z_pb, c] = z_of_prime_power(params, pp.p, pp.e, factor_bound);
      lift.z_pb = std::move(z_pb);
      lift.c = c;
    }
    mpz_lcm(res.z.get_mpz_t(), res.z.get_mpz_t(), lift.z_pb.get_mpz_t());
    res.breakdown.push_back(std::move(lift));
  }
  if (res.z > m) throw inconsistency_error("z_of: computed z exceeds m");
  return res;
}

// p is special when p | k(k+1) and p^2 | U_p. Only p = 3 qualifies, exactly
// for k = 2 or 6 mod 9.
inline bool is_special(const LucasParams& params, const Int& p) {
  require_odd_prime(p);
  if (!mpz_divisible_p(params.kk1().get_mpz_t(), p.get_mpz_t())) return false;
  return lucas_u_mod(params, p, p * p) == 0;
}

// --- characteristic sets -----------------------------------------------------

namespace detail {

// true when every prime of m divides base (radical test, no factorization)
inline bool radical_divides(Int m, const Int& base) {
  assert(m >= 1);
  for (;;) {
    if (m == 1) return true;
    Int g = gcd(m, base);
    if (g == 1) return false;
    do {
      m /= g;
      g = gcd(m, g);
    } while (g > 1);
  }
}

}  // namespace detail

namespace detail {

// 3 is special exactly for k = 2, 6 mod 9; multiples of 9 then collide early
// (z(9) = 3) and must be excluded from both characteristic sets. For odd
// members the clause can only bite when 3 | k, i.e. k = 6 mod 9.
inline bool nine_excluded(const LucasParams& params, const Int& m) {
  unsigned long r = mpz_fdiv_ui(params.k().get_mpz_t(), 9);
  return (r == 2 || r == 6) && mpz_divisible_ui_p(m.get_mpz_t(), 9);
}

}  // namespace detail

// odd m whose primes all divide k, minus the 9-exclusion
inline bool in_set_A(const LucasParams& params, const Int& m) {
  if (m < 1 || mpz_even_p(m.get_mpz_t())) return false;
  if (!detail::radical_divides(m, params.k())) return false;
  return !detail::nine_excluded(params, m);
}

// even m whose primes all divide k(k+1), minus the 9-exclusion
inline bool in_set_B(const LucasParams& params, const Int& m) {
  if (m < 2 || mpz_odd_p(m.get_mpz_t())) return false;
  if (!detail::radical_divides(m, params.kk1())) return false;
  return !detail::nine_excluded(params, m);
}

inline bool membership_positive(const LucasParams& params, const Int& m) {
  return in_set_A(params, m) || in_set_B(params, m);
}

enum class membership_clause { none, parity, prime_outside, nine_divides };

struct SetMembership {
  Int m;
  bool in_A;
  bool in_B;
  membership_clause witness;        // why the parity-matched set rejected m
  std::optional<Int> witness_prime; // smallest offending prime, when it factors in bound
};

inline SetMembership membership(const LucasParams& params, const Int& m,
                                std::uint64_t factor_bound = 10'000'000) {
  if (m < 1) throw std::invalid_argument("membership: m must be >= 1");
  SetMembership res{m, in_set_A(params, m), in_set_B(params, m), membership_clause::none, std::nullopt};
  if (res.in_A || res.in_B) return res;
  const Int& base = mpz_odd_p(m.get_mpz_t()) ? params.k() : params.kk1();
  Int leftover = m;
  for (;;) {
    Int g = gcd(leftover, base);
    if (g == 1) break;
    do {
      leftover /= g;
      g = gcd(leftover, g);
    } while (g > 1);
  }
  if (leftover > 1) {
    res.witness = membership_clause::prime_outside;
    try {
      res.witness_prime = factorize(leftover, factor_bound).factors.front().p;
    } catch (const capacity_error&) {
      // leftover certified nontrivial even though its smallest prime is out of reach
    }
  } else {
    res.witness = membership_clause::nine_divides;
  }
  return res;
}

// --- empirical appearance ratio ----------------------------------------------

struct AlphaEstimate {
  Int num, den;                // best ratio z(q)/q found (or the generic 3/5 bound)
  std::optional<Int> witness_q;
  bool bound_only;
};

// Scans odd primes q <= prime_limit for z(q) = (q+1)/2, the extremal case;
// the ratio (q+1)/(2q) for the smallest such q, else the generic 3/5 bound.
inline AlphaEstimate alpha_k_empirical(const LucasParams& params, std::uint64_t prime_limit = 10'000,
                                       std::uint64_t factor_bound = 10'000'000) {
  if (prime_limit < 3) throw std::invalid_argument("alpha_k_empirical: prime_limit must be >= 3");
  for (std::uint64_t q = 3; q <= prime_limit; q += 2) {
    if (!is_prime_u64(q)) continue;
    Int qq = u64_to_int(q);
    if (2 * z_of_prime(params, qq, factor_bound) == qq + 1)
      return {(qq + 1) / 2, qq, qq, false};
  }
  return {3, 5, std::nullopt, true};
}

}  // namespace disclab
