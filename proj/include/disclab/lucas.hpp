#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "disclab/int_util.hpp"

namespace disclab {

// The family index k plus the derived constants everything else consumes.
class LucasParams {
 public:
  explicit LucasParams(Int k) : k_(std::move(k)) {
    if (k_ < 1) throw std::invalid_argument("LucasParams: k must be >= 1");
    kk1_ = k_ * (k_ + 1);
    delta_ = 16 * kk1_;
    coeff_ = 4 * k_ + 2;
    assert(delta_ > 0);
    assert(mpz_even_p(coeff_.get_mpz_t()) && coeff_ >= 6);
  }

  const Int& k() const { return k_; }
  const Int& kk1() const { return kk1_; }       // k(k+1)
  const Int& delta() const { return delta_; }   // 16k(k+1)
  const Int& coefficient() const { return coeff_; }  // 4k+2

 private:
  Int k_, kk1_, delta_, coeff_;
};

// Exact U_n: U_0=0, U_1=1, U_{n+2}=(4k+2)U_{n+1}-U_n.
inline Int lucas_u(const LucasParams& params, std::uint64_t n) {
  if (n > 5'000'000) throw capacity_error("lucas_u: exact value too large; use lucas_u_mod");
  Int a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    Int next = params.coefficient() * b - a;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

// Exact companion V_n: V_0=2, V_1=4k+2, same recurrence.
inline Int lucas_v(const LucasParams& params, std::uint64_t n) {
  if (n > 5'000'000) throw capacity_error("lucas_v: exact value too large");
  Int a = 2, b = params.coefficient();
  for (std::uint64_t i = 0; i < n; ++i) {
    Int next = params.coefficient() * b - a;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

namespace detail {

// Iterates U_0 mod m, U_1 mod m, ... and feeds each residue to visit(i, r).
// Stops after n terms or when visit returns false. Requires m <= 2^32.
template <class F>
inline void window_scan_u64(std::uint64_t coeff_mod_m, std::uint64_t m, std::uint64_t n, F&& visit) {
  assert(m >= 1 && m <= 0xffffffffULL);
  std::uint64_t a = 0, b = 1 % m;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!visit(i, a)) return;
    std::uint64_t t = coeff_mod_m * b % m;  // coeff, b < m <= 2^32 so no overflow
    t = t >= a ? t - a : t + m - a;
    a = b;
    b = t;
  }
}

template <class F>
inline void window_scan_mpz(const Int& coeff_mod_m, const Int& m, std::uint64_t n, F&& visit) {
  assert(m >= 1);
  Int a = 0, b = Int(1) % m;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!visit(i, a)) return;
    Int t = (coeff_mod_m * b - a) % m;
    if (t < 0) t += m;
    a = b;
    b = std::move(t);
  }
}

// 2x2 matrix [[c,-1],[1,0]] power mod m; U_n is the bottom-left entry of A^n.
struct Mat2 {
  Int a, b, c, d;
};

inline Mat2 mat_mul_mod(const Mat2& x, const Mat2& y, const Int& m) {
  return {(x.a * y.a + x.b * y.c) % m, (x.a * y.b + x.b * y.d) % m,
          (x.c * y.a + x.d * y.c) % m, (x.c * y.b + x.d * y.d) % m};
}

inline Int lucas_u_mod_matrix(const LucasParams& params, const Int& n, const Int& m) {
  Int c = params.coefficient() % m;
  Int neg1 = (m - 1) % m;  // -1 as a canonical residue
  Mat2 acc{Int(1) % m, 0, 0, Int(1) % m};
  Mat2 base{c, neg1, Int(1) % m, 0};
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = mat_mul_mod(acc, acc, m);
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = mat_mul_mod(acc, base, m);
  }
  return acc.c;
}

}  // namespace detail

// U_n mod m; logarithmic in n.
inline Int lucas_u_mod(const LucasParams& params, const Int& n, const Int& m) {
  if (m < 1) throw std::invalid_argument("lucas_u_mod: m must be >= 1");
  if (n < 0) throw std::invalid_argument("lucas_u_mod: n must be >= 0");
  if (m == 1) return 0;
  if (n == 0) return 0;
  return detail::lucas_u_mod_matrix(params, n, m);
}

struct SequenceWindow {
  LucasParams params;
  Int modulus;
  std::vector<Int> terms;  // U_0 mod m ... U_{n-1} mod m
};

// First n residues in one linear pass.
inline SequenceWindow window_mod(const LucasParams& params, std::uint64_t n, const Int& m) {
  if (n < 1) throw std::invalid_argument("window_mod: n must be >= 1");
  if (m < 1) throw std::invalid_argument("window_mod: m must be >= 1");
  if (n > 100'000'000) throw capacity_error("window_mod: window too large");
  SequenceWindow w{params, m, {}};
  w.terms.reserve(static_cast<std::size_t>(n));
  if (fits_u64(m) && to_u64(m) <= 0xffffffffULL) {
    std::uint64_t mm = to_u64(m);
    std::uint64_t c = to_u64(params.coefficient() % m);
    detail::window_scan_u64(c, mm, n, [&](std::uint64_t, std::uint64_t r) {
      w.terms.push_back(u64_to_int(r));
      return true;
    });
  } else {
    Int c = params.coefficient() % m;
    detail::window_scan_mpz(c, m, n, [&](std::uint64_t, const Int& r) {
      w.terms.push_back(r);
      return true;
    });
  }
  return w;
}

}  // namespace disclab
