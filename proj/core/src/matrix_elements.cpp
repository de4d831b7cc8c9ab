#include "dobinski/matrix_elements.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dobinski/multivariate_bell.hpp"

namespace dobinski {

CoherentLabel::CoherentLabel(double re, double im) : CoherentLabel(Complex(re, im)) {}

CoherentLabel::CoherentLabel(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("coherent label must be finite");
  }
}

std::string_view to_string(SeriesVariable v) {
  switch (v) {
    case SeriesVariable::xi:
      return "XI";
    case SeriesVariable::G:
      return "G";
    case SeriesVariable::lambda:
      return "LAMBDA";
  }
  return "?";
}

double SeriesCoefficients::partial_sum(double t, unsigned m) const {
  const auto last = std::min<std::size_t>(m, coeffs.size() - 1);
  double acc = 0.0;
  for (std::size_t k = last + 1; k-- > 0;) acc = acc * t + coeffs[k];
  return prefactor * acc;
}

Complex overlap(const CoherentLabel& zprime, const CoherentLabel& z) {
  const Complex w = std::conj(zprime.value()) * z.value();
  return std::exp(-0.5 * (zprime.norm2() + z.norm2()) + w);
}

double number_state_element(unsigned l, unsigned m, double lambda, const CouplingVector& alpha) {
  if (l != m) return 0.0;
  const Real exponent = -to_real(lambda) * to_real(alpha.evaluate(Rational(m)));
  return exp(exponent).convert_to<double>();
}

namespace {

void require_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive and finite");
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
}

// The truncated sums are accumulated in Real; this rejects results whose
// rounding error (relative to the sum of term magnitudes) could exceed eps.
void check_precision(const Real& scaled_abs_sum, double eps) {
  const Real unit = pow(Real(10), -static_cast<int>(working_digits()) + 3);
  if (scaled_abs_sum * unit > eps) {
    throw std::range_error("working precision too low for eps; raise DOBINSKI_PRECISION");
  }
}

// Smallest k0 such that D(k) = P(k+1) - P(k) is nondecreasing for k >= k0,
// given a positive leading coefficient. D' > 0 wherever P'' > 0, which holds
// beyond the Cauchy root bound of P''.
unsigned long difference_monotone_from(const std::vector<Rational>& alpha) {
  const std::size_t degree = alpha.size();
  if (degree <= 2) return 0;
  // P''(k) = sum_{i>=2} i (i-1) alpha_i k^{i-2}
  std::vector<double> second(degree - 1);
  for (std::size_t i = 2; i <= degree; ++i) {
    second[i - 2] = static_cast<double>(i * (i - 1)) * to_double(alpha[i - 1]);
  }
  const double lead = std::abs(second.back());
  double bound = 1.0;
  for (std::size_t j = 0; j + 1 < second.size(); ++j) bound = std::max(bound, 1.0 + std::abs(second[j]) / lead);
  return static_cast<unsigned long>(std::ceil(bound));
}

constexpr unsigned long kMaxTerms = 10'000'000;

}  // namespace

Complex exact_matrix_element(const ModelParams& p, double eps) {
  require_eps(eps);
  require_finite(p.lambda, "lambda");
  if (p.lambda < 0.0) throw std::invalid_argument("lambda must be nonnegative");
  const auto& alpha = p.alpha.values();
  const bool unbounded = alpha.size() >= 2 && alpha.back() < 0;
  if (p.lambda > 0.0 && unbounded) {
    throw std::domain_error("exp(-lambda H) grows super-geometrically: H is unbounded below");
  }
  working_digits();

  const Complex zp = p.zprime.value();
  const Complex z = p.z.value();
  // <z'|z> e^{-w} = exp(-(|z'|^2 + |z|^2) / 2)
  const Real pref = exp(-(to_real(p.zprime.norm2()) + to_real(p.z.norm2())) / 2);
  // w = conj(z') z
  const Real wr = to_real(zp.real()) * to_real(z.real()) + to_real(zp.imag()) * to_real(z.imag());
  const Real wi = to_real(zp.real()) * to_real(z.imag()) - to_real(zp.imag()) * to_real(z.real());
  if (wr == 0 && wi == 0) return {pref.convert_to<double>(), 0.0};

  const Real lambda = to_real(p.lambda);
  const unsigned long k0 = p.lambda == 0.0 ? 0 : difference_monotone_from(alpha);
  auto boltzmann = [&](unsigned long k) {
    if (p.lambda == 0.0) return Real(1);
    return Real(exp(-lambda * to_real(p.alpha.evaluate(Rational(k)))));
  };

  // power = w^k / k!
  Real power_re(1), power_im(0);
  Real sum_re(0), sum_im(0), abs_sum(0);
  Real weight = boltzmann(0);
  for (unsigned long k = 0;; ++k) {
    if (k > kMaxTerms) throw std::range_error("exact_matrix_element: tail bound not reached");
    const Real term_re = power_re * weight;
    const Real term_im = power_im * weight;
    const Real term_abs = sqrt(term_re * term_re + term_im * term_im);
    sum_re += term_re;
    sum_im += term_im;
    abs_sum += term_abs;

    const Real next_re = (power_re * wr - power_im * wi) / (k + 1);
    const Real next_im = (power_re * wi + power_im * wr) / (k + 1);
    const Real next_weight = boltzmann(k + 1);
    const Real next_abs = sqrt(next_re * next_re + next_im * next_im) * next_weight;
    // Past k0 the term ratio |w|/(k+1) e^{-lambda D(k)} is nonincreasing, so
    // the tail is at most twice the next term.
    if (k >= k0 && term_abs > 0 && next_abs * 2 <= term_abs && pref * 2 * next_abs < eps) break;
    power_re = next_re;
    power_im = next_im;
    weight = next_weight;
  }
  check_precision(pref * abs_sum, eps);
  return {Real(pref * sum_re).convert_to<double>(), Real(pref * sum_im).convert_to<double>()};
}

Complex toy_closed_form(double lambda, const CoherentLabel& zprime, const CoherentLabel& z) {
  const Complex w = std::conj(zprime.value()) * z.value();
  return std::exp(-0.5 * (zprime.norm2() + z.norm2()) + w * std::exp(-lambda));
}

double exact_diag_quartic(double g, double G, double xi, double x, double eps) {
  require_eps(eps);
  require_finite(g, "g");
  require_finite(G, "G");
  require_finite(xi, "xi");
  require_finite(x, "x");
  if (x < 0.0) throw std::invalid_argument("x = |z|^2 must be nonnegative");
  if (G < 0.0 && xi != 0.0) throw std::domain_error("G < 0 makes the exponent unbounded below");

  const Real xr = to_real(x);
  const Real a = to_real(g) * to_real(xi);       // linear rate
  const Real b = to_real(G) * to_real(xi) * to_real(xi);  // quadratic rate
  const Real damping = exp(-xr);

  // term_k = x^k / k! exp(-(a k + b k^2)); term_{k+1}/term_k =
  // x/(k+1) exp(-(a + b (2k+1))) is nonincreasing because b >= 0.
  Real term(1), sum(0), abs_sum(0);
  for (unsigned long k = 0;; ++k) {
    if (k > kMaxTerms) throw std::range_error("exact_diag_quartic: tail bound not reached");
    sum += term;
    abs_sum += term;
    const Real next = term * xr / (k + 1) * exp(-(a + b * (2 * k + 1)));
    if (term > 0 && next * 2 <= term && damping * 2 * next < eps) break;
    term = next;
  }
  check_precision(damping * abs_sum, eps);
  return Real(damping * sum).convert_to<double>();
}

SeriesCoefficients series_in_xi(double g, double G, double x, unsigned order) {
  require_finite(g, "g");
  require_finite(G, "G");
  require_finite(x, "x");
  const Rational minus_g = -to_rational(g);
  const Rational minus_G = -to_rational(G);
  const Rational xr = to_rational(x);

  SeriesCoefficients out;
  out.variable = SeriesVariable::xi;
  out.coeffs.reserve(order + 1);
  out.coeffs.push_back(1.0);
  Integer n_factorial(1);
  for (unsigned n = 1; n <= order; ++n) {
    n_factorial *= n;
    const Rational c = hermite_kdf<Rational>(n, 2, minus_g, minus_G) * bell_polynomial(n)(xr) / Rational(n_factorial);
    out.coeffs.push_back(to_double(c));
  }
  return out;
}

SeriesCoefficients series_in_G(double g, double xi, double x, unsigned order) {
  require_finite(g, "g");
  require_finite(xi, "xi");
  require_finite(x, "x");
  const Real shrink = exp(-to_real(g) * to_real(xi));  // e^{-g xi}
  const Real w = to_real(x) * shrink;
  const Rational wr = to_rational(w.convert_to<double>());
  const Rational xi2 = to_rational(xi) * to_rational(xi);

  SeriesCoefficients out;
  out.variable = SeriesVariable::G;
  out.prefactor = Real(exp(to_real(x) * (shrink - 1))).convert_to<double>();
  out.coeffs.reserve(order + 1);
  Integer k_factorial(1);
  Rational xi_power(1);
  for (unsigned k = 0; k <= order; ++k) {
    if (k > 0) {
      k_factorial *= k;
      xi_power *= xi2;
    }
    Rational c = xi_power * bell_polynomial(2 * k)(wr) / Rational(k_factorial);
    if (k % 2 == 1) c = -c;
    out.coeffs.push_back(to_double(c));
  }
  return out;
}

SeriesCoefficients general_series_coeffs(const CouplingVector& alpha, double w, unsigned order) {
  require_finite(w, "w");
  const auto alphabar = inverse_stirling_transform(alpha);
  const Rational wr = to_rational(w);

  SeriesCoefficients out;
  out.variable = SeriesVariable::lambda;
  out.coeffs.reserve(order + 1);
  Integer k_factorial(1);
  for (unsigned k = 0; k <= order; ++k) {
    if (k > 0) k_factorial *= k;
    Rational c = generalized_bell_polynomial(k, alphabar)(wr) / Rational(k_factorial);
    if (k % 2 == 1) c = -c;
    out.coeffs.push_back(to_double(c));
  }
  return out;
}

}  // namespace dobinski
