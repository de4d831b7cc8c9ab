#pragma once

// Stirling numbers, Bell numbers and polynomials, their generalizations for
// polynomial Hamiltonians H(n) = sum_i alpha_i n^i, and Dobinski-type series.

#include <span>
#include <vector>

#include "dobinski/exact.hpp"
#include "dobinski/polynomial.hpp"
#include "dobinski/real.hpp"

namespace dobinski {

/// Coefficients alpha_1..alpha_N of a number-operator polynomial (no constant
/// term). Invariant: N >= 1 and alpha_N != 0.
class CouplingVector {
 public:
  /// Throws std::invalid_argument if empty or the leading entry is zero.
  explicit CouplingVector(std::vector<Rational> alpha);

  std::size_t degree() const { return alpha_.size(); }
  const std::vector<Rational>& values() const { return alpha_; }
  const Rational& operator[](std::size_t i) const { return alpha_[i]; }

  /// sum_i alpha_i m^i
  Rational evaluate(const Rational& m) const;

 private:
  std::vector<Rational> alpha_;
};

/// S(n,k) from the alternating binomial sum; S(0,0) = 1, zero for k > n.
Integer stirling2(unsigned n, unsigned k);

/// Signed s(n,k): coefficients of the falling factorial x(x-1)...(x-n+1).
Integer stirling1_signed(unsigned n, unsigned k);

/// j(j-1)...(j-l+1); 1 for l = 0 and 0 for l > j.
Integer falling_factorial(unsigned j, unsigned l);

/// B(n,x) = sum_k S(n,k) x^k with B(0,x) = 1.
UniPolynomial bell_polynomial(unsigned n);

Integer bell_number(unsigned n);

/// Coefficients of H in the falling-factorial basis:
/// sum_i alpha_i m^i = sum_l alphabar_l m^(l), alphabar_l = sum_{m>=l} S(m,l) alpha_m.
std::vector<Rational> inverse_stirling_transform(const CouplingVector& alpha);

/// Inverse of inverse_stirling_transform: alpha_i = sum_{l>=i} s(l,i) alphabar_l.
std::vector<Rational> stirling_transform(std::span<const Rational> alphabar);

/// sum_l alphabar_l j^(l)
Rational falling_sum(std::span<const Rational> alphabar, unsigned j);

/// S_alpha(n,k) = 1/k! sum_j C(k,j) (-1)^(k-j) [sum_l alphabar_l j^(l)]^n.
/// Throws std::invalid_argument for empty alphabar.
Rational generalized_stirling(unsigned n, unsigned k, std::span<const Rational> alphabar);

/// B_alpha(n,x) = sum_{k=1}^{nN} S_alpha(n,k) x^k, with B_alpha(0,x) = 1.
UniPolynomial generalized_bell_polynomial(unsigned n, std::span<const Rational> alphabar);

/// Generalized Dobinski sum
///   e^{-x} sum_{m>=0} [sum_l alphabar_l m^(l)]^n x^m / m!
/// evaluated in extended precision and truncated once a geometric tail bound
/// drops below eps (absolute). With alphabar = (1) this is B(n,x).
///
/// Throws std::invalid_argument for eps <= 0, non-finite or negative x, or an
/// empty alphabar; std::range_error if the working precision cannot resolve
/// eps at the magnitude of the result.
Real dobinski_eval(unsigned n, double x, std::span<const Rational> alphabar, double eps);

enum class SaddlePoint {
  /// r solves r e^r = n.
  exact,
  /// r = log n - log log n, the leading term of the exact root.
  leading_order,
};

/// n! exp(e^r - 1) / (r^{n+1} sqrt(2 pi e^r)); a growth diagnostic for B(n).
/// Throws std::invalid_argument for n < 3.
double bell_asymptotic(unsigned n, SaddlePoint saddle = SaddlePoint::exact);

}  // namespace dobinski
