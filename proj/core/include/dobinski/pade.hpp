#pragma once

// [L/M] Pade approximants built from Taylor coefficients with an exact
// rational solve of the denominator (Toeplitz) system.

#include <span>
#include <stdexcept>
#include <vector>

#include "dobinski/exact.hpp"
#include "dobinski/matrix_elements.hpp"
#include "dobinski/polynomial.hpp"

namespace dobinski {

inline constexpr double kDefaultPoleTol = 1e-12;

/// numerator / denominator with deg numerator <= L, deg denominator <= M and
/// denominator(0) = 1.
struct PadeApproximant {
  UniPolynomial numerator;
  UniPolynomial denominator;
  unsigned L = 0;
  unsigned M = 0;

  /// Taylor coefficients of numerator/denominator through x^order.
  std::vector<Rational> taylor(unsigned order) const;
};

/// The M x M denominator system is rank deficient; defect() = M - rank.
/// Retrying with a smaller M is the usual remedy.
class SingularSystem : public std::runtime_error {
 public:
  SingularSystem(unsigned L, unsigned M, unsigned defect);
  unsigned L() const { return L_; }
  unsigned M() const { return M_; }
  unsigned defect() const { return defect_; }

 private:
  unsigned L_, M_, defect_;
};

class PoleNearEvaluation : public std::runtime_error {
 public:
  PoleNearEvaluation(double x, double denominator);
  double x() const { return x_; }
  double denominator() const { return denominator_; }

 private:
  double x_, denominator_;
};

/// Throws std::invalid_argument if c has fewer than L+M+1 entries and
/// SingularSystem if the denominator system is rank deficient.
PadeApproximant pade_from_coeffs(std::span<const Rational> c, unsigned L, unsigned M);

/// Doubles are promoted to their exact binary values before solving; the
/// re-expansion must then reproduce c to 1e-10 relative.
PadeApproximant pade_from_coeffs(std::span<const double> c, unsigned L, unsigned M);

/// numerator(x) / denominator(x), evaluated exactly and rounded once.
/// Throws PoleNearEvaluation if |denominator(x)| < pole_tol (1 + |numerator(x)|).
double pade_eval(const PadeApproximant& p, double x, double pole_tol = kDefaultPoleTol);

/// prefactor * [L/M](t) for the series s.
double resum(const SeriesCoefficients& s, unsigned L, unsigned M, double t);

}  // namespace dobinski
