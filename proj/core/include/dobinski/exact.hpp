#pragma once

// Arbitrary-precision integers and rationals used for every combinatorial
// coefficient in the library.  Both are GMP-backed Boost.Multiprecision
// numbers; mpq values are kept in canonical form by GMP itself.

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace dobinski {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Exact binary value of a finite double. Throws std::domain_error on NaN/inf.
Rational to_rational(double value);

/// Correctly rounded (nearest-even) conversion to double.
double to_double(const Rational& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Accepts "7", "-3/4", "0.125", "1e-3". Decimal forms are read exactly.
Rational parse_rational(std::string_view text);

/// Comma separated list of parse_rational() items.
std::vector<Rational> parse_rational_list(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_canonical(const Rational& value);

template <class T>
T ipow(T base, unsigned exponent) {
  T result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

// Conversion of exact values into the scalar type used by generic
// (exact-or-floating) evaluators.
template <class T>
T from_rational(const Rational& value) {
  if constexpr (std::is_same_v<T, Rational>) {
    return value;
  } else if constexpr (std::is_same_v<T, double>) {
    return to_double(value);
  } else {
    return T(value);
  }
}

template <class T>
T from_integer(const Integer& value) {
  if constexpr (std::is_same_v<T, double>) {
    return to_double(Rational(value));
  } else {
    return T(value);
  }
}

}  // namespace dobinski
