#pragma once

// Extended-precision floating point used by the truncated infinite sums.
//
// The working precision is process wide: it is read once from the
// DOBINSKI_PRECISION environment variable (decimal digits, default 60) before
// the first extended-precision evaluation and never changes afterwards, so
// concurrent evaluations observe the same value.

#include <boost/multiprecision/mpfr.hpp>

#include "dobinski/exact.hpp"

namespace dobinski {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultWorkingDigits = 60;

/// Decimal digits carried by Real values. Initializes the MPFR default on first call.
unsigned working_digits();

/// Parses a DOBINSKI_PRECISION value; returns the default for null/garbage and
/// clamps to [20, 10000].
unsigned parse_precision(const char* text);

inline Real to_real(const Rational& value) {
  working_digits();
  return Real(value);
}

inline Real to_real(double value) {
  working_digits();
  return Real(value);
}

}  // namespace dobinski
