#pragma once

// Coherent-state matrix elements of exp(-lambda H(n)) for number-operator
// polynomials H, and the two divergent perturbation series of the quadratic
// model H = g (xi n) + G (xi n)^2.
//
// Throughout, the product written z'z in bra-ket form means conj(z') * z.

#include <complex>
#include <string_view>
#include <vector>

#include "dobinski/combinatorics.hpp"

namespace dobinski {

using Complex = std::complex<double>;

inline constexpr double kDefaultEps = 1e-12;

/// Label z of the coherent state |z>. Components are finite.
class CoherentLabel {
 public:
  CoherentLabel() = default;
  CoherentLabel(double re, double im = 0.0);  // NOLINT(google-explicit-constructor)
  CoherentLabel(Complex z);                   // NOLINT(google-explicit-constructor)

  Complex value() const { return z_; }
  double norm2() const { return std::norm(z_); }

 private:
  Complex z_{0.0, 0.0};
};

struct ModelParams {
  double g = 1.0;
  double G = 1.0;
  double xi = 1.0;
  double lambda = 0.0;
  CouplingVector alpha{{Rational(1)}};
  CoherentLabel z{1.0};
  CoherentLabel zprime{1.0};
};

enum class SeriesVariable { xi, G, lambda };

std::string_view to_string(SeriesVariable v);

/// prefactor * sum_k coeffs[k] t^k in the expansion variable t.
struct SeriesCoefficients {
  SeriesVariable variable = SeriesVariable::xi;
  std::vector<double> coeffs;
  double prefactor = 1.0;

  /// prefactor * sum_{k<=m} coeffs[k] t^k
  double partial_sum(double t, unsigned m) const;
};

/// <z'|z> = exp(-(|z'|^2 + |z|^2 - 2 conj(z') z) / 2)
Complex overlap(const CoherentLabel& zprime, const CoherentLabel& z);

/// <l| exp(-lambda H_alpha(n)) |m>, diagonal in the number basis.
double number_state_element(unsigned l, unsigned m, double lambda, const CouplingVector& alpha);

/// <z'| exp(-lambda H_alpha(n)) |z> from the convergent number-state sum, with
/// absolute error at most eps.
///
/// Throws std::invalid_argument for lambda < 0 or eps <= 0, and
/// std::domain_error when lambda > 0 and H is unbounded below faster than
/// linearly (degree >= 2 with negative leading coupling), where the sum diverges.
Complex exact_matrix_element(const ModelParams& p, double eps = kDefaultEps);

/// Closed form for H = n: <z'|z> exp(conj(z') z (e^{-lambda} - 1)).
Complex toy_closed_form(double lambda, const CoherentLabel& zprime, const CoherentLabel& z);

/// <z| exp(-(g (xi n) + G (xi n)^2)) |z> with x = |z|^2, to absolute error eps.
/// Throws std::domain_error for G < 0 with xi != 0 (exponent unbounded below).
double exact_diag_quartic(double g, double G, double xi, double x, double eps = kDefaultEps);

/// Expansion in xi: c_0 = 1, c_n = H_n^(2)(-g,-G) B(n,x) / n!.
SeriesCoefficients series_in_xi(double g, double G, double x, unsigned order);

/// Expansion in G: prefactor exp(x (e^{-g xi} - 1)),
/// c_k = (-1)^k xi^{2k} / k! B(2k, x e^{-g xi}).
SeriesCoefficients series_in_G(double g, double xi, double x, unsigned order);

/// Expansion in lambda of <z'|exp(-lambda H)|z> / <z'|z> with w = conj(z') z real:
/// c_k = (-1)^k B_alpha(k, w) / k!.
SeriesCoefficients general_series_coeffs(const CouplingVector& alpha, double w, unsigned order);

}  // namespace dobinski
