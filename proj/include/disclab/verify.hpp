#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "disclab/appearance.hpp"
#include "disclab/discriminator.hpp"
#include "disclab/int_util.hpp"
#include "disclab/lucas.hpp"
#include "disclab/parallel.hpp"
#include "disclab/quadratic.hpp"
#include "disclab/sunit.hpp"

namespace disclab {

struct CriterionResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

namespace detail {

constexpr std::size_t max_reported_failures = 8;

template <class Body>
inline CriterionResult run_criterion(const std::string& name, Body&& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> failures;
  std::string note;
  body(failures, note);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (failures.empty()) return {name, true, note, seconds};
  std::ostringstream out;
  for (std::size_t i = 0; i < failures.size() && i < max_reported_failures; ++i)
    out << (i ? "; " : "") << failures[i];
  if (failures.size() > max_reported_failures)
    out << "; ... " << failures.size() - max_reported_failures << " more";
  return {name, false, out.str(), seconds};
}

// gathers per-index failure messages from a parallel loop, preserving order
class failure_slots {
 public:
  failure_slots(std::uint64_t begin, std::uint64_t end) : begin_(begin), slots_(end - begin) {}

  void set(std::uint64_t i, std::string msg) { slots_[i - begin_] = std::move(msg); }

  void drain_into(std::vector<std::string>& failures) const {
    for (const std::string& s : slots_)
      if (!s.empty()) failures.push_back(s);
  }

 private:
  std::uint64_t begin_;
  std::vector<std::string> slots_;
};

inline std::vector<std::uint64_t> residue_window_u64(const LucasParams& params, std::uint64_t m,
                                                     std::uint64_t n) {
  std::vector<std::uint64_t> w;
  w.reserve(n);
  std::uint64_t c = to_u64(params.coefficient() % u64_to_int(m));
  window_scan_u64(c, m, n, [&](std::uint64_t, std::uint64_t r) {
    w.push_back(r);
    return true;
  });
  return w;
}

}  // namespace detail

// Criterion: the k=1 closed form equals brute force for 2 <= n <= 2048, the
// three exceptional plateaus come out exactly, and every other value up to
// n = 1024 is a power of two.
inline CriterionResult criterion_k1_closed_form(unsigned threads = 0) {
  return detail::run_criterion("k1-closed-form", [&](std::vector<std::string>& fails, std::string& note) {
    LucasParams p1(1);
    std::vector<DiscriminatorRecord> brute = disc_brute_range(p1, 2, 2048, threads);
    auto value_of = [&](std::uint64_t n) -> const Int& { return brute[n - 2].value; };
    for (std::uint64_t n = 2; n <= 2048 && fails.size() < detail::max_reported_failures; ++n) {
      Int closed = disc_closed_k1(n).value;
      if (value_of(n) != closed)
        fails.push_back("n=" + std::to_string(n) + ": brute " + value_of(n).get_str() +
                        " != closed " + closed.get_str());
    }
    struct Plateau {
      std::uint64_t lo, hi;
      unsigned long value;
    };
    const Plateau plateaus[] = {{129, 150, 250}, {257, 300, 500}, {513, 600, 1000}};
    auto in_plateau = [&](std::uint64_t n) {
      for (const Plateau& pl : plateaus)
        if (n >= pl.lo && n <= pl.hi) return true;
      return false;
    };
    for (const Plateau& pl : plateaus)
      for (std::uint64_t n = pl.lo; n <= pl.hi && fails.size() < detail::max_reported_failures; ++n)
        if (value_of(n) != pl.value)
          fails.push_back("plateau n=" + std::to_string(n) + ": got " + value_of(n).get_str() +
                          ", want " + std::to_string(pl.value));
    for (std::uint64_t n = 2; n <= 1024 && fails.size() < detail::max_reported_failures; ++n)
      if (!in_plateau(n) && mpz_popcount(value_of(n).get_mpz_t()) != 1)
        fails.push_back("n=" + std::to_string(n) + ": non-plateau value " + value_of(n).get_str() +
                        " is not a power of two");
    note = "brute = closed for n in [2,2048]; plateaus [129,150]->250 [257,300]->500 "
           "[513,600]->1000; all other n <= 1024 give powers of two";
  });
}

// Criterion: the k=2 closed form equals brute force for 1 <= n <= 4096 and no
// value below 4096 escapes A_2 and B_2.
inline CriterionResult criterion_k2_closed_form(unsigned threads = 0) {
  return detail::run_criterion("k2-closed-form", [&](std::vector<std::string>& fails, std::string& note) {
    LucasParams p2(2);
    std::vector<DiscriminatorRecord> brute = disc_brute_range(p2, 1, 4096, threads);
    for (std::uint64_t n = 1; n <= 4096 && fails.size() < detail::max_reported_failures; ++n) {
      Int closed = disc_closed_k2(n).value;
      if (brute[n - 1].value != closed)
        fails.push_back("n=" + std::to_string(n) + ": brute " + brute[n - 1].value.get_str() +
                        " != closed " + closed.get_str());
    }
    std::vector<DiscriminatorRecord> fk = fk_extract(p2, 4096, threads);
    if (!fk.empty()) {
      std::string list;
      for (const DiscriminatorRecord& r : fk) list += (list.empty() ? "" : ",") + r.value.get_str();
      fails.push_back("values outside A_2 and B_2: {" + list + "}");
    }
    note = "brute = min{2^e, 3*2^f} for n in [1,4096]; no values outside A_2 and B_2";
  });
}

// Criterion: for k = 3..10, brute never exceeds the A/B candidate, matches it
// whenever the candidate < 3n/2 certificate holds (n <= 1500), and the
// fixed-point law D_k(n) = n <=> n in A_k or B_k holds for n <= 800.
inline CriterionResult criterion_general_k(unsigned threads = 0) {
  return detail::run_criterion("general-k", [&](std::vector<std::string>& fails, std::string& note) {
    for (unsigned long k = 3; k <= 10; ++k) {
      LucasParams pk(k);
      std::vector<DiscriminatorRecord> brute = disc_brute_range(pk, 1, 1500, threads);
      for (std::uint64_t n = 1; n <= 1500 && fails.size() < detail::max_reported_failures; ++n) {
        auto [cand, certified] = disc_closed_general(pk, n);
        const Int& bv = brute[n - 1].value;
        if (bv > cand.value)
          fails.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": brute " +
                          bv.get_str() + " exceeds candidate " + cand.value.get_str());
        else if (certified && bv != cand.value)
          fails.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n) +
                          ": certified candidate " + cand.value.get_str() + " != brute " +
                          bv.get_str());
      }
      for (std::uint64_t n = 1; n <= 800 && fails.size() < detail::max_reported_failures; ++n) {
        bool fixed = brute[n - 1].value == u64_to_int(n);
        if (fixed != membership_positive(pk, u64_to_int(n)))
          fails.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n) +
                          ": fixed-point law violated");
      }
    }
    note = "k=3..10: candidate is an upper bound and certified cases match brute (n <= 1500); "
           "fixed points are exactly the A/B members (n <= 800)";
  });
}

// Criterion: the z formula agrees with the linear-scan oracle for k <= 8,
// m <= 5000, and z(m) = m exactly on the characterization set for m <= 3000.
inline CriterionResult criterion_z_equivalence(unsigned threads = 0) {
  return detail::run_criterion("z-equivalence", [&](std::vector<std::string>& fails, std::string& note) {
    for (unsigned long k = 1; k <= 8; ++k) {
      LucasParams pk(k);
      bool nine_clause = is_special(pk, 3);
      detail::failure_slots slots(1, 5001);
      parallel_for(1, 5001, threads, [&](std::uint64_t m) {
        Int mm = u64_to_int(m);
        Int zf = z_of(pk, mm).z;
        Int zb = z_brute(pk, mm);
        if (zf != zb) {
          slots.set(m, "k=" + std::to_string(k) + " m=" + std::to_string(m) + ": formula " +
                           zf.get_str() + " != scan " + zb.get_str());
          return;
        }
        if (m <= 3000) {
          bool fixed = zf == mm;
          bool characterized = detail::radical_divides(mm, pk.kk1()) &&
                               !(nine_clause && mpz_divisible_ui_p(mm.get_mpz_t(), 9));
          if (fixed != characterized)
            slots.set(m, "k=" + std::to_string(k) + " m=" + std::to_string(m) +
                             ": z(m)=m characterization violated");
        }
      });
      slots.drain_into(fails);
      if (fails.size() >= detail::max_reported_failures) break;
    }
    note = "z formula = scan oracle for k <= 8, m <= 5000; z(m)=m exactly on the "
           "characterization set for m <= 3000";
  });
}

// Criterion: pinned scalar values -- z at 29/13/37, the order-7 sign in the
// quadratic ring mod 169, the five power-of-two exponents against 37, the
// special-prime congruence classes, and the 2^a*3^b consecutive-integer
// solutions.
inline CriterionResult criterion_golden_scalars(unsigned /*threads*/ = 0) {
  return detail::run_criterion("golden-scalars", [&](std::vector<std::string>& fails, std::string& note) {
    LucasParams p1(1);
    auto expect_z = [&](unsigned long p, unsigned long want) {
      Int got = z_of_prime(p1, u64_to_int(p));
      if (got != u64_to_int(want))
        fails.push_back("z(" + std::to_string(p) + ") = " + got.get_str() + ", want " +
                        std::to_string(want));
    };
    expect_z(29, 5);
    expect_z(13, 7);
    expect_z(37, 19);

    QuadIntMod pow7 = quad_pow_mod(alpha_mod(p1, 169), 7);
    if (pow7.a != 168 || pow7.b != 0)
      fails.push_back("alpha^7 mod 169 = (" + pow7.a.get_str() + "," + pow7.b.get_str() +
                      "), want (168,0)");

    const std::vector<std::pair<unsigned, unsigned>> want37 = {{1, 6}, {2, 11}, {3, 16}, {4, 21}, {5, 27}};
    if (thirty_seven_exponents() != want37) fails.push_back("37-exponent table mismatch");

    for (unsigned long k = 1; k <= 1000 && fails.size() < detail::max_reported_failures; ++k) {
      bool expected = k % 9 == 2 || k % 9 == 6;
      if (is_special(LucasParams(k), 3) != expected)
        fails.push_back("special-prime test wrong at k=" + std::to_string(k));
    }

    std::vector<LeviSolution> levi = levi_ben_gerson(1'000'000);
    const std::vector<std::tuple<unsigned long, unsigned long, unsigned long>> want_levi = {
        {1, 1, 0}, {2, 1, 1}, {3, 2, 1}, {8, 3, 2}};
    bool levi_ok = levi.size() == want_levi.size();
    for (std::size_t i = 0; levi_ok && i < levi.size(); ++i)
      levi_ok = levi[i].k == u64_to_int(std::get<0>(want_levi[i])) &&
                levi[i].a == std::get<1>(want_levi[i]) && levi[i].b == std::get<2>(want_levi[i]);
    if (!levi_ok) {
      std::string list;
      for (const LeviSolution& s : levi) list += (list.empty() ? "" : ",") + s.k.get_str();
      fails.push_back("2^a*3^b solutions k = {" + list + "}, want {1,2,3,8}");
    }
    note = "z(29)=5, z(13)=7, z(37)=19; alpha^7 = -1 mod 169; exponents {6,11,16,21,27}; "
           "special prime exactly at k = 2,6 mod 9 (k <= 1000); k(k+1)=2^a*3^b only for k in {1,2,3,8}";
  });
}

// Criterion: fractional-part set prefix and non-members up to 21, density at
// 10^5 within 0.01 of 0.263034, zero undecidables at 192 bits, and agreement
// with the exact integer form for b <= 2000.
inline CriterionResult criterion_mset(unsigned /*threads*/ = 0) {
  return detail::run_criterion("m-set", [&](std::vector<std::string>& fails, std::string& note) {
    MSetParams mp(192);
    std::set<std::uint64_t> members;
    for (std::uint64_t b = 1; b <= 21; ++b)
      if (m_set_member(u64_to_int(b), mp)) members.insert(b);
    if (members != std::set<std::uint64_t>{3, 6, 9, 12, 15, 18, 21}) {
      std::string list;
      for (std::uint64_t b : members) list += (list.empty() ? "" : ",") + std::to_string(b);
      fails.push_back("members <= 21 are {" + list + "}, want {3,6,9,12,15,18,21}");
    }
    for (std::uint64_t b = 1; b <= 2000 && fails.size() < detail::max_reported_failures; ++b)
      if (m_set_member(u64_to_int(b), mp) != m_set_member_exact(b))
        fails.push_back("fixed-point and integer forms disagree at b=" + std::to_string(b));
    DensityEstimate density = m_density(100'000, mp);
    if (!density.undecided.empty())
      fails.push_back(std::to_string(density.undecided.size()) +
                      " undecidable b values at 192 bits, first b=" +
                      std::to_string(density.undecided.front()));
    // |members/count - 0.263034| <= 0.01 as exact integers
    Int lhs = Int(density.members) * 1'000'000 - Int(263'034) * Int(density.count);
    if (lhs < 0) lhs = -lhs;
    if (lhs > Int(10'000) * Int(density.count))
      fails.push_back("density at 10^5 is " + std::to_string(density.value()) +
                      ", outside 0.263034 +/- 0.01");
    note = "members <= 21 are {3,6,9,12,15,18,21}; fixed-point = integer form for b <= 2000; "
           "density(10^5) = " + std::to_string(density.value()) + " with no undecidables";
  });
}

// Criterion: every brute k=1 value for n in [2,2048] lies in the image set,
// and every image element in [2,1024] is attained by some n in that range.
inline CriterionResult criterion_image_k1(unsigned threads = 0) {
  return detail::run_criterion("image-k1", [&](std::vector<std::string>& fails, std::string& note) {
    LucasParams p1(1);
    std::vector<DiscriminatorRecord> brute = disc_brute_range(p1, 2, 2048, threads);
    std::set<Int> attained;
    for (const DiscriminatorRecord& r : brute) attained.insert(r.value);
    std::vector<Int> image = image_k1(4096);
    std::set<Int> image_set(image.begin(), image.end());
    for (const Int& v : attained)
      if (!image_set.count(v) && fails.size() < detail::max_reported_failures)
        fails.push_back("brute value " + v.get_str() + " is outside the image set");
    for (const Int& v : image)
      if (v >= 2 && v <= 1024 && !attained.count(v) && fails.size() < detail::max_reported_failures)
        fails.push_back("image element " + v.get_str() + " is never attained for n <= 2048");
    note = "all brute values lie in the image; every image element in [2,1024] is attained";
  });
}

// Criterion: the congruence biconditionals -- power-of-two moduli, odd p | k,
// odd p | k+1 with opposite-parity indices, the full-equivalence law against
// set membership, and the 2^a*5^b first-collision law.
inline CriterionResult criterion_congruences(unsigned /*threads*/ = 0) {
  return detail::run_criterion("congruences", [&](std::vector<std::string>& fails, std::string& note) {
    auto report = [&](std::string msg) {
      if (fails.size() < detail::max_reported_failures) fails.push_back(std::move(msg));
    };

    // mod 2^a: U_i = U_j iff i = j (mod 2^a), for a <= 10 and i < j < 2^a + 32
    for (unsigned long k = 1; k <= 6; ++k) {
      LucasParams pk(k);
      for (unsigned a = 1; a <= 10; ++a) {
        std::uint64_t m = 1ull << a;
        std::uint64_t idx = m + 32;
        std::vector<std::uint64_t> w = detail::residue_window_u64(pk, m, idx);
        for (std::uint64_t j = 1; j < idx; ++j)
          for (std::uint64_t i = 0; i < j; ++i)
            if ((w[i] == w[j]) != ((j - i) % m == 0)) {
              report("mod 2^" + std::to_string(a) + " law fails at k=" + std::to_string(k) +
                     " i=" + std::to_string(i) + " j=" + std::to_string(j));
              goto next_a;
            }
      next_a:;
      }
    }

    // odd p | k: U_i = U_j mod p^b iff i = j mod z(p^b)
    // odd p | k+1, i + j odd: U_i = U_j mod p^b iff i + j = 0 mod z(p^b)
    for (unsigned long k = 1; k <= 6; ++k) {
      LucasParams pk(k);
      for (unsigned long p = 3; p <= 50; p += 2) {
        if (!is_prime_u64(p)) continue;
        bool divides_k = k % p == 0;
        bool divides_k1 = (k + 1) % p == 0;
        if (!divides_k && !divides_k1) continue;
        std::uint64_t pb = 1;
        for (unsigned b = 1; b <= 2; ++b) {
          pb *= p;
          std::uint64_t z = to_u64(z_of(pk, u64_to_int(pb)).z);
          std::vector<std::uint64_t> w = detail::residue_window_u64(pk, pb, 401);
          for (std::uint64_t j = 1; j <= 400; ++j)
            for (std::uint64_t i = 0; i < j; ++i) {
              bool equal = w[i] == w[j];
              if (divides_k && equal != ((j - i) % z == 0))
                report("odd p | k law fails at k=" + std::to_string(k) + " p^b=" +
                       std::to_string(pb) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
              else if (divides_k1 && (i + j) % 2 == 1 && equal != ((i + j) % z == 0))
                report("odd p | k+1 law fails at k=" + std::to_string(k) + " p^b=" +
                       std::to_string(pb) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
        }
      }
    }

    // U_i = U_j mod m iff i = j mod m (all i < j < 2m+8) precisely when m is an A/B member
    for (unsigned long k = 1; k <= 6; ++k) {
      LucasParams pk(k);
      for (std::uint64_t m = 1; m <= 200; ++m) {
        std::uint64_t idx = 2 * m + 8;
        std::vector<std::uint64_t> w = detail::residue_window_u64(pk, m, idx);
        bool law = true;
        for (std::uint64_t j = 1; law && j < idx; ++j)
          for (std::uint64_t i = 0; i < j; ++i)
            if ((w[i] == w[j]) != ((j - i) % m == 0)) {
              law = false;
              break;
            }
        if (law != membership_positive(pk, u64_to_int(m)))
          report("full-equivalence law vs membership fails at k=" + std::to_string(k) +
                 " m=" + std::to_string(m));
      }
    }

    // k=1, m = 2^a*5^b: m discriminates the first n terms iff 3m >= 5n
    LucasParams p1(1);
    for (Int p5 = 5; 2 * p5 <= 4000; p5 *= 5)
      for (Int m = 2 * p5; m <= 4000; m <<= 1) {
        std::uint64_t mm = to_u64(m);
        for (std::uint64_t n = 1; n <= mm + 2; ++n)
          if (discriminates(p1, n, m) != (3 * m >= u64_to_int(5 * n))) {
            report("first-collision law fails at m=" + m.get_str() + " n=" + std::to_string(n));
            break;
          }
      }

    note = "power-of-two, odd p | k, odd p | k+1, full-equivalence, and first-collision "
           "biconditionals hold on their stated ranges";
  });
}

namespace detail {

using criterion_runner = CriterionResult (*)(unsigned);

inline const std::vector<std::pair<std::string, criterion_runner>>& criterion_table() {
  static const std::vector<std::pair<std::string, criterion_runner>> table = {
      {"k1-closed-form", &criterion_k1_closed_form},
      {"k2-closed-form", &criterion_k2_closed_form},
      {"general-k", &criterion_general_k},
      {"z-equivalence", &criterion_z_equivalence},
      {"golden-scalars", &criterion_golden_scalars},
      {"m-set", &criterion_mset},
      {"image-k1", &criterion_image_k1},
      {"congruences", &criterion_congruences}};
  return table;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& entry : detail::criterion_table()) names.push_back(entry.first);
  return names;
}

inline std::vector<CriterionResult> run_suite(const std::string& name, unsigned threads = 0) {
  std::vector<CriterionResult> out;
  for (const auto& entry : detail::criterion_table())
    if (name == "all" || name == entry.first) out.push_back(entry.second(threads));
  if (out.empty()) throw std::invalid_argument("unknown suite: " + name);
  return out;
}

}  // namespace disclab
