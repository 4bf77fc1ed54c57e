#pragma once

#include <stdexcept>

namespace cosmetic {

/// An internal consistency check failed. Indicates a bug, never bad input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// A continued fraction hit a zero denominator during evaluation.
struct DegenerateExpansion : std::domain_error {
  using std::domain_error::domain_error;
};

} // namespace cosmetic
