#pragma once

#include <cassert>
#include <stdexcept>

#include "disclab/int_util.hpp"

namespace disclab {

// floor-accurate log2(num/den) * 2^frac_bits for num >= den >= 1.
// Digit extraction with 2*frac_bits + 96 working bits; the result is within
// ~1 ulp of the true value (drift stays below 2^-90 of an ulp).
inline Int log2_fixed(const Int& num, const Int& den, unsigned frac_bits) {
  if (den < 1 || num < den) throw std::invalid_argument("log2_fixed: need num >= den >= 1");
  if (frac_bits < 1) throw std::invalid_argument("log2_fixed: frac_bits must be positive");
  if (frac_bits > (1u << 22)) throw capacity_error("log2_fixed: frac_bits too large");
  const unsigned P = 2 * frac_bits + 96;
  Int x = (num << P) / den;
  long e = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)) - 1 - static_cast<long>(P);
  assert(e >= 0);
  if (e > 0) x >>= static_cast<unsigned>(e);
  Int result = e;
  const Int renorm = Int(1) << (P + 1);
  for (unsigned i = 0; i < frac_bits; ++i) {
    x = (x * x) >> P;
    result <<= 1;
    if (x >= renorm) {
      result += 1;
      x >>= 1;
    }
  }
  return result;
}

}  // namespace disclab
