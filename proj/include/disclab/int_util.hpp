#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "disclab/errors.hpp"

namespace disclab {

using Int = mpz_class;

inline bool fits_u64(const Int& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& x) {
  // mpz_get_ui truncates to one limb; assemble from two 32-bit halves instead.
  Int hi = x >> 32;
  Int lo = x - (hi << 32);
  return (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
         static_cast<std::uint64_t>(mpz_get_ui(lo.get_mpz_t()));
}

inline Int u64_to_int(std::uint64_t v) {
  Int hi(static_cast<unsigned long>(v >> 32));
  return (hi << 32) | Int(static_cast<unsigned long>(v & 0xffffffffULL));
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin for all n < 2^64 (fixed witness set).
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

enum class primality { composite, prime, probable_prime };

// Certified below 2^64; larger inputs get a probabilistic answer and the
// caller is expected to surface the "assumed" status.
inline primality check_prime(const Int& n) {
  if (n < 2) return primality::composite;
  if (fits_u64(n)) return is_prime_u64(to_u64(n)) ? primality::prime : primality::composite;
  int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
  if (r == 0) return primality::composite;
  return r == 2 ? primality::prime : primality::probable_prime;
}

inline void require_prime(const Int& p, const char* who = "require_prime") {
  if (check_prime(p) == primality::composite) {
    throw std::invalid_argument(std::string(who) + ": " + p.get_str() + " is not prime");
  }
}

inline void require_odd_prime(const Int& p, const char* who = "require_odd_prime") {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) {
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
  }
  require_prime(p, who);
}

// Legendre symbol (a/p); p must be an odd prime.
inline int legendre(const Int& a, const Int& p) {
  require_odd_prime(p, "legendre");
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// p-adic valuation of x != 0.
inline unsigned long nu_p(const Int& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("nu_p: valuation of 0 is infinite");
  require_prime(p, "nu_p");
  Int q;
  return static_cast<unsigned long>(mpz_remove(q.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

struct PrimePower {
  Int p;
  unsigned long e = 0;
};

struct Factorization {
  std::vector<PrimePower> factors;  // ascending p
  bool certified = true;            // false iff a >64-bit cofactor is only a probable prime
};

// Trial division up to `bound`, then a primality check on the cofactor.
inline Factorization factorize(Int n, std::uint64_t bound = 10'000'000) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;

  auto run_u64 = [&](std::uint64_t m) {
    auto strip = [&](std::uint64_t p) {
      if (p >= 2 && m % p == 0) {
        unsigned long e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        out.factors.push_back({u64_to_int(p), e});
      }
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5;
         d <= bound && static_cast<unsigned __int128>(d) * d <= m; d += 6) {
      strip(d);
      strip(d + 2);
    }
    if (m > 1) {
      if (!is_prime_u64(m)) {
        throw capacity_error("factorize: composite cofactor " + u64_to_int(m).get_str() +
                             " exceeds trial-division bound " + std::to_string(bound));
      }
      out.factors.push_back({u64_to_int(m), 1});
    }
  };

  if (fits_u64(n)) {
    run_u64(to_u64(n));
  } else {
    auto strip_big = [&](unsigned long p) {
      if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
          mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
          ++e;
        }
        out.factors.push_back({Int(p), e});
      }
    };
    strip_big(2);
    strip_big(3);
    std::uint64_t d = 5;
    bool delegated = false;
    while (n > 1 && d <= bound && d + 2 <= 0xffffffffULL) {
      if (fits_u64(n)) {
        // remaining factors are all >= d, so the restarted small strips no-op
        run_u64(to_u64(n));
        delegated = true;
        break;
      }
      strip_big(static_cast<unsigned long>(d));
      strip_big(static_cast<unsigned long>(d + 2));
      d += 6;
    }
    if (!delegated && n > 1) {
      switch (check_prime(n)) {
        case primality::prime:
          out.factors.push_back({n, 1});
          break;
        case primality::probable_prime:
          out.factors.push_back({n, 1});
          out.certified = false;
          break;
        case primality::composite:
          throw capacity_error("factorize: composite cofactor exceeds trial-division bound " +
                               std::to_string(bound));
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
  return out;
}

inline std::vector<Int> divisors_ascending(const Int& n, std::uint64_t bound = 10'000'000) {
  Factorization f = factorize(n, bound);
  std::vector<Int> divs{Int(1)};
  for (const auto& pp : f.factors) {
    std::size_t base = divs.size();
    Int pe(1);
    for (unsigned long e = 1; e <= pp.e; ++e) {
      pe *= pp.p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace disclab
