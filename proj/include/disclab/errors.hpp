#pragma once

#include <stdexcept>
#include <string>

namespace disclab {

// A configured resource limit was hit (factorization bound, window memory,
// exact-value size). The computation is well-defined but refused at this size.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fixed-point comparison landed too close to its decision boundary for the
// configured precision. Raised instead of guessing.
class undecidable_error : public capacity_error {
 public:
  using capacity_error::capacity_error;
};

// Two routes that must agree (closed form vs oracle, or a theorem-backed
// search window) disagreed. Always reported, never reconciled silently.
class inconsistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace disclab
