#pragma once

#include <stdexcept>

namespace skewq {

// Malformed or out-of-range input: bad indices, non-realizable triple sets,
// dimension mismatches.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard was exceeded (factorial searches, sweep budgets, table caps).
class GuardViolation : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An internal consistency check failed. The message names the offending
// instance so it can be reproduced.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace skewq
