#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dobinski/exact.hpp"

namespace dobinski {

/// Univariate polynomial with exact rational coefficients, stored densely by
/// ascending power. Trailing zeros are always trimmed, so the zero polynomial
/// has no coefficients and degree -1.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<Rational> coefficients);

  static UniPolynomial constant(Rational c);
  static UniPolynomial monomial(Rational c, std::size_t power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient of x^power; zero beyond the degree.
  Rational coefficient(std::size_t power) const;

  Rational operator()(const Rational& x) const { return evaluate(x); }

  /// Horner evaluation with coefficients converted into T (Rational, double, Real).
  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + from_rational<T>(*it);
    }
    return acc;
  }

  UniPolynomial derivative() const;

  UniPolynomial& operator+=(const UniPolynomial& rhs);
  UniPolynomial& operator-=(const UniPolynomial& rhs);
  UniPolynomial& operator*=(const Rational& scalar);

  friend UniPolynomial operator+(UniPolynomial a, const UniPolynomial& b) { return a += b; }
  friend UniPolynomial operator-(UniPolynomial a, const UniPolynomial& b) { return a -= b; }
  friend UniPolynomial operator*(UniPolynomial a, const Rational& s) { return a *= s; }
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);
  friend bool operator==(const UniPolynomial& a, const UniPolynomial& b) = default;

  /// "1 + 3*x^2 - 1/2*x^3" style rendering; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace dobinski
