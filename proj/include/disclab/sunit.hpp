#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "disclab/int_util.hpp"
#include "disclab/parallel.hpp"

namespace disclab {

// Values of the form prod p_i^{a_i} with a_i >= min_exponents[i], optionally
// restricted to even values and/or values not divisible by 9.
struct SUnitSpec {
  std::vector<Int> primes;
  std::vector<unsigned long> min_exponents;
  bool require_even;
  bool forbid_nine;

  explicit SUnitSpec(std::vector<Int> primes_, std::vector<unsigned long> min_exponents_ = {},
                     bool require_even_ = false, bool forbid_nine_ = false)
      : primes(std::move(primes_)),
        min_exponents(std::move(min_exponents_)),
        require_even(require_even_),
        forbid_nine(forbid_nine_) {
    if (primes.empty()) throw std::invalid_argument("SUnitSpec: primes must be non-empty");
    if (!std::is_sorted(primes.begin(), primes.end()) ||
        std::adjacent_find(primes.begin(), primes.end()) != primes.end())
      throw std::invalid_argument("SUnitSpec: primes must be strictly increasing");
    for (const Int& p : primes) require_prime(p);
    if (min_exponents.empty()) min_exponents.assign(primes.size(), 0);
    if (min_exponents.size() != primes.size())
      throw std::invalid_argument("SUnitSpec: one minimum exponent per prime");
    if (require_even && std::find(primes.begin(), primes.end(), 2) == primes.end())
      throw std::invalid_argument("SUnitSpec: require_even needs 2 among the primes");
    if (forbid_nine && mpz_divisible_ui_p(seed().get_mpz_t(), 9))
      throw std::invalid_argument("SUnitSpec: mandatory exponents already violate forbid_nine");
  }

  // smallest raw lattice value: prod p_i^{min_i}
  Int seed() const {
    Int s = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), primes[i].get_mpz_t(), min_exponents[i]);
      s *= pw;
    }
    return s;
  }
};

namespace detail {

struct sunit_node {
  Int value;
  std::size_t last;  // children multiply primes[j] for j >= last (canonical, duplicate-free)
};

struct sunit_node_greater {
  bool operator()(const sunit_node& x, const sunit_node& y) const { return x.value > y.value; }
};

// Calls yield(v) for spec-valid v in strictly increasing order until yield
// returns false. forbid_nine prunes whole subtrees (divisibility by 9 is
// inherited); require_even filters only the yield -- every even lattice point
// is generated on the path that multiplies its factors of 2 first, so nothing
// is lost by keeping odd intermediate nodes.
template <class Yield>
inline void sunit_enumerate(const SUnitSpec& spec, Yield&& yield) {
  std::priority_queue<sunit_node, std::vector<sunit_node>, sunit_node_greater> heap;
  heap.push({spec.seed(), 0});  // the ctor rejected seeds that violate forbid_nine
  while (!heap.empty()) {
    sunit_node node = heap.top();
    heap.pop();
    if (!(spec.require_even && mpz_odd_p(node.value.get_mpz_t())))
      if (!yield(node.value)) return;
    for (std::size_t j = node.last; j < spec.primes.size(); ++j) {
      Int child = node.value * spec.primes[j];
      if (spec.forbid_nine && mpz_divisible_ui_p(child.get_mpz_t(), 9)) continue;
      heap.push({std::move(child), j});
    }
  }
}

}  // namespace detail

// Smallest spec-valid S-unit >= x.
inline Int sunit_next(const SUnitSpec& spec, const Int& x) {
  if (x < 1) throw std::invalid_argument("sunit_next: x must be >= 1");
  Int found = 0;
  detail::sunit_enumerate(spec, [&](const Int& v) {
    if (v < x) return true;
    found = v;
    return false;
  });
  if (found == 0) throw std::invalid_argument("sunit_next: spec admits no value >= x");
  return found;
}

// All spec-valid S-units <= limit, ascending.
inline std::vector<Int> sunit_up_to(const SUnitSpec& spec, const Int& limit) {
  std::vector<Int> out;
  detail::sunit_enumerate(spec, [&](const Int& v) {
    if (v > limit) return false;
    out.push_back(v);
    return true;
  });
  return out;
}

struct GapCheck25 {
  bool found;
  Int witness;  // the qualifying 2^a*5^b when found, otherwise 0
};

// Does [5n/3, 37n/19) contain a 2^a*5^b with a,b >= 1? Exact bounds:
// lower ceil(5n/3), upper strict via 19*w < 37*n.
inline GapCheck25 gap_check_25(const Int& n) {
  if (n < 1) throw std::invalid_argument("gap_check_25: n must be >= 1");
  SUnitSpec spec({2, 5}, {1, 1});
  Int lo = (5 * n + 2) / 3;
  Int w = sunit_next(spec, lo);
  if (19 * w < 37 * n) return {true, w};
  return {false, 0};
}

// For each n in [n_from, n_to], does [n, n*ratio) contain an even 2^a*p^b?
// Returns the n for which it does not.
inline std::vector<std::uint64_t> gap_check_general(const Int& p, const Int& ratio_num,
                                                    const Int& ratio_den, std::uint64_t n_from,
                                                    std::uint64_t n_to, unsigned threads = 0) {
  require_odd_prime(p);
  if (ratio_den < 1 || ratio_num <= ratio_den)
    throw std::invalid_argument("gap_check_general: ratio must exceed 1");
  if (n_from < 1 || n_from > n_to) throw std::invalid_argument("gap_check_general: bad range");
  SUnitSpec spec({2, p}, {1, 0});
  Int max_end = (u64_to_int(n_to) * ratio_num) / ratio_den + 1;
  std::vector<Int> units = sunit_up_to(spec, max_end);
  std::vector<char> fail(n_to - n_from + 1, 0);
  parallel_for(n_from, n_to + 1, threads, [&](std::uint64_t n) {
    Int nn = u64_to_int(n);
    auto it = std::lower_bound(units.begin(), units.end(), nn);
    fail[n - n_from] = it == units.end() || *it * ratio_den >= nn * ratio_num;
  });
  std::vector<std::uint64_t> failures;
  for (std::uint64_t n = n_from; n <= n_to; ++n)
    if (fail[n - n_from]) failures.push_back(n);
  return failures;
}

// The unique e_i with 2*37^(i-1)*19 <= 2^(e_i) < 2*37^i, for i = 1..5.
inline std::vector<std::pair<unsigned, unsigned>> thirty_seven_exponents() {
  std::vector<std::pair<unsigned, unsigned>> out;
  Int p37 = 1;
  for (unsigned i = 1; i <= 5; ++i) {
    Int lo = 38 * p37;
    Int hi = 74 * p37;
    unsigned e = 0;
    Int pw = 1;
    while (pw < lo) {
      pw <<= 1;
      ++e;
    }
    if (pw >= hi) throw inconsistency_error("thirty_seven_exponents: no power of two in the window");
    if (2 * pw < hi) throw inconsistency_error("thirty_seven_exponents: exponent not unique");
    out.emplace_back(i, e);
    p37 *= 37;
  }
  return out;
}

struct LeviSolution {
  Int k;
  unsigned long a, b;  // k(k+1) = 2^a * 3^b
};

// All k <= k_max with k(k+1) of the form 2^a*3^b.
inline std::vector<LeviSolution> levi_ben_gerson(std::uint64_t k_max) {
  if (k_max > 2'000'000'000ull) throw capacity_error("levi_ben_gerson: k_max too large");
  std::vector<LeviSolution> out;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    std::uint64_t m = k * (k + 1);
    unsigned long a = static_cast<unsigned long>(std::countr_zero(m));
    m >>= a;
    unsigned long b = 0;
    while (m % 3 == 0) {
      m /= 3;
      ++b;
    }
    if (m == 1) out.push_back({u64_to_int(k), a, b});
  }
  return out;
}

}  // namespace disclab
