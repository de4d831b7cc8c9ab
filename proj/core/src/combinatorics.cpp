#include "dobinski/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dobinski {

CouplingVector::CouplingVector(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw std::invalid_argument("coupling vector must have at least one entry");
  if (alpha_.back() == 0) throw std::invalid_argument("leading coupling alpha_N must be nonzero");
}

Rational CouplingVector::evaluate(const Rational& m) const {
  Rational acc(0);
  for (auto it = alpha_.rbegin(); it != alpha_.rend(); ++it) acc = (acc + *it) * m;
  return acc;
}

namespace {

// S(n,0..n) from the alternating binomial sum, sharing the powers j^n.
std::vector<Integer> stirling2_row(unsigned n) {
  std::vector<Integer> powers(n + 1);
  for (unsigned j = 0; j <= n; ++j) powers[j] = ipow(Integer(j), n);
  std::vector<Integer> row(n + 1);
  Integer k_factorial(1);
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) k_factorial *= k;
    Integer acc(0);
    for (unsigned j = 0; j <= k; ++j) {
      const Integer term = binomial(k, j) * powers[j];
      if ((k - j) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    row[k] = acc / k_factorial;
  }
  return row;
}

void validate_alphabar(std::span<const Rational> alphabar) {
  if (alphabar.empty()) throw std::invalid_argument("alphabar must be nonempty");
}

}  // namespace

Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  Integer acc(0);
  for (unsigned j = 0; j <= k; ++j) {
    const Integer term = binomial(k, j) * ipow(Integer(j), n);
    if ((k - j) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc / factorial(k);
}

Integer stirling1_signed(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  // s(m+1,j) = s(m,j-1) - m s(m,j)
  std::vector<Integer> row{Integer(1)};
  for (unsigned m = 0; m < n; ++m) {
    std::vector<Integer> next(m + 2);
    for (unsigned j = 0; j <= m + 1; ++j) {
      if (j > 0) next[j] += row[j - 1];
      if (j <= m) next[j] -= row[j] * m;
    }
    row = std::move(next);
  }
  return row[k];
}

Integer falling_factorial(unsigned j, unsigned l) {
  if (l > j) return Integer(0);
  Integer acc(1);
  for (unsigned i = 0; i < l; ++i) acc *= j - i;
  return acc;
}

UniPolynomial bell_polynomial(unsigned n) {
  const auto row = stirling2_row(n);
  std::vector<Rational> coeffs(row.begin(), row.end());
  return UniPolynomial(std::move(coeffs));
}

Integer bell_number(unsigned n) {
  Integer acc(0);
  for (const auto& s : stirling2_row(n)) acc += s;
  return acc;
}

std::vector<Rational> inverse_stirling_transform(const CouplingVector& alpha) {
  const auto n = static_cast<unsigned>(alpha.degree());
  std::vector<Rational> out(n);
  for (unsigned l = 1; l <= n; ++l) {
    for (unsigned m = l; m <= n; ++m) out[l - 1] += Rational(stirling2(m, l)) * alpha[m - 1];
  }
  return out;
}

std::vector<Rational> stirling_transform(std::span<const Rational> alphabar) {
  const auto n = static_cast<unsigned>(alphabar.size());
  std::vector<Rational> out(n);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned l = i; l <= n; ++l) out[i - 1] += Rational(stirling1_signed(l, i)) * alphabar[l - 1];
  }
  return out;
}

Rational falling_sum(std::span<const Rational> alphabar, unsigned j) {
  Rational acc(0);
  Integer ff(1);
  for (unsigned l = 1; l <= alphabar.size() && l <= j; ++l) {
    ff *= j - l + 1;
    acc += alphabar[l - 1] * Rational(ff);
  }
  return acc;
}

Rational generalized_stirling(unsigned n, unsigned k, std::span<const Rational> alphabar) {
  validate_alphabar(alphabar);
  Rational acc(0);
  for (unsigned j = 0; j <= k; ++j) {
    const Rational term = Rational(binomial(k, j)) * ipow(falling_sum(alphabar, j), n);
    if ((k - j) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc / Rational(factorial(k));
}

UniPolynomial generalized_bell_polynomial(unsigned n, std::span<const Rational> alphabar) {
  validate_alphabar(alphabar);
  if (n == 0) return UniPolynomial::constant(Rational(1));
  const auto top = n * static_cast<unsigned>(alphabar.size());
  std::vector<Rational> powers(top + 1);
  for (unsigned j = 0; j <= top; ++j) powers[j] = ipow(falling_sum(alphabar, j), n);
  std::vector<Rational> coeffs(top + 1);
  Integer k_factorial(1);
  for (unsigned k = 1; k <= top; ++k) {
    k_factorial *= k;
    Rational acc(0);
    for (unsigned j = 0; j <= k; ++j) {
      const Rational term = Rational(binomial(k, j)) * powers[j];
      if ((k - j) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    coeffs[k] = acc / Rational(k_factorial);
  }
  return UniPolynomial(std::move(coeffs));
}

Real dobinski_eval(unsigned n, double x, std::span<const Rational> alphabar, double eps) {
  validate_alphabar(alphabar);
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("dobinski_eval: eps must be positive");
  if (!std::isfinite(x)) throw std::invalid_argument("dobinski_eval: x must be finite");
  if (x < 0.0) throw std::invalid_argument("dobinski_eval: x must be nonnegative");
  const unsigned digits = working_digits();

  // Only the m = 0 term survives at x = 0, and the polynomial vanishes there.
  if (x == 0.0) return Real(n == 0 ? 1 : 0);

  // Power-basis coefficients give a Cauchy bound R on the roots of the
  // polynomial. Past m >= 2R + 1 the ratio |P(m+1)/P(m)| is nonincreasing, and
  // past m >= 2x so is x/(m+1); from there one ratio <= 1/2 bounds the tail by
  // twice the next term.
  auto alpha = stirling_transform(alphabar);
  while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
  if (alpha.empty()) return Real(n == 0 ? 1 : 0);
  const double lead = std::abs(to_double(alpha.back()));
  double cauchy = 1.0;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
    cauchy = std::max(cauchy, 1.0 + std::abs(to_double(alpha[i])) / lead);
  }
  const auto m_min = static_cast<unsigned long>(std::ceil(std::max(2.0 * x, 2.0 * cauchy + 1.0)));

  const Real xr = to_real(x);
  const Real damping = exp(-xr);
  Real weight(1);  // x^m / m!
  Real sum(0);
  Real abs_sum(0);
  Real term = to_real(ipow(falling_sum(alphabar, 0), n));
  constexpr unsigned long kMaxTerms = 10'000'000;
  for (unsigned long m = 0;; ++m) {
    if (m > kMaxTerms) throw std::range_error("dobinski_eval: series did not reach the tail bound");
    sum += term;
    abs_sum += abs(term);
    const Real next_weight = weight * xr / (m + 1);
    const Real next = to_real(ipow(falling_sum(alphabar, static_cast<unsigned>(m + 1)), n)) * next_weight;
    if (m >= m_min && term != 0 && abs(next) * 2 <= abs(term) && damping * 2 * abs(next) < eps) break;
    weight = next_weight;
    term = next;
  }
  const Real result = damping * sum;
  const Real rounding = damping * abs_sum * pow(Real(10), -static_cast<int>(digits) + 3);
  if (rounding > eps) {
    throw std::range_error("dobinski_eval: working precision too low for eps; raise DOBINSKI_PRECISION");
  }
  return result;
}

double bell_asymptotic(unsigned n, SaddlePoint saddle) {
  if (n < 3) throw std::invalid_argument("bell_asymptotic: requires n >= 3");
  const double ln = std::log(static_cast<double>(n));
  double r = ln - std::log(ln);
  if (saddle == SaddlePoint::exact) {
    // Newton on r + log r - log n = 0.
    r = ln;
    for (int it = 0; it < 100; ++it) {
      const double step = (r + std::log(r) - ln) / (1.0 + 1.0 / r);
      r -= step;
      if (std::abs(step) < 1e-15 * r) break;
    }
  }
  const double log_value = std::lgamma(n + 1.0) + std::exp(r) - 1.0 - (n + 1.0) * std::log(r) -
                           0.5 * std::log(2.0 * std::numbers::pi * std::exp(r));
  return std::exp(log_value);
}

}  // namespace dobinski
