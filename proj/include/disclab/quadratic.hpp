#pragma once

#include <stdexcept>

#include "disclab/int_util.hpp"
#include "disclab/lucas.hpp"

namespace disclab {

// a + b*sqrt(d) with both coordinates reduced mod m.
struct QuadIntMod {
  Int a, b, d, m;

  QuadIntMod(Int a_, Int b_, Int d_, Int m_)
      : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)), m(std::move(m_)) {
    if (m < 2) throw std::invalid_argument("QuadIntMod: m must be >= 2");
    if (d < 1) throw std::invalid_argument("QuadIntMod: d must be >= 1");
    a %= m;
    if (a < 0) a += m;
    b %= m;
    if (b < 0) b += m;
    d %= m;
  }

  bool operator==(const QuadIntMod& o) const {
    return a == o.a && b == o.b && d == o.d && m == o.m;
  }
};

inline QuadIntMod quad_one(const Int& d, const Int& m) { return QuadIntMod(1, 0, d, m); }

inline QuadIntMod quad_mul(const QuadIntMod& x, const QuadIntMod& y) {
  if (x.d != y.d || x.m != y.m) throw std::invalid_argument("quad_mul: mismatched rings");
  return QuadIntMod(x.a * y.a + x.d * (x.b * y.b), x.a * y.b + x.b * y.a, x.d, x.m);
}

inline QuadIntMod quad_pow_mod(QuadIntMod base, const Int& e) {
  if (e < 0) throw std::invalid_argument("quad_pow_mod: exponent must be >= 0");
  QuadIntMod acc = quad_one(base.d, base.m);
  std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = quad_mul(acc, acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = quad_mul(acc, base);
  }
  return acc;
}

// alpha = (2k+1) + 2*sqrt(k(k+1)), the dominant root; alpha^n = V_n/2 + U_n*sqrt(k(k+1)).
inline QuadIntMod alpha_mod(const LucasParams& params, const Int& m) {
  return QuadIntMod(2 * params.k() + 1, 2, params.kk1(), m);
}

}  // namespace disclab
