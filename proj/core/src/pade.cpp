#include "dobinski/pade.hpp"

#include <cmath>
#include <string>

namespace dobinski {

SingularSystem::SingularSystem(unsigned L, unsigned M, unsigned defect)
    : std::runtime_error("singular Pade system for [" + std::to_string(L) + "/" + std::to_string(M) +
                         "], rank defect " + std::to_string(defect)),
      L_(L),
      M_(M),
      defect_(defect) {}

PoleNearEvaluation::PoleNearEvaluation(double x, double denominator)
    : std::runtime_error("Pade denominator vanishes near x = " + std::to_string(x)),
      x_(x),
      denominator_(denominator) {}

std::vector<Rational> PadeApproximant::taylor(unsigned order) const {
  // r_n = p_n - sum_{j>=1} q_j r_{n-j}, using q_0 = 1.
  std::vector<Rational> r(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    Rational acc = numerator.coefficient(n);
    for (unsigned j = 1; j <= n && static_cast<int>(j) <= denominator.degree(); ++j) {
      acc -= denominator.coefficient(j) * r[n - j];
    }
    r[n] = acc;
  }
  return r;
}

PadeApproximant pade_from_coeffs(std::span<const Rational> c, unsigned L, unsigned M) {
  if (c.size() < static_cast<std::size_t>(L) + M + 1) {
    throw std::invalid_argument("pade_from_coeffs: need at least L+M+1 coefficients");
  }
  auto coef = [&](long i) { return i < 0 ? Rational(0) : c[static_cast<std::size_t>(i)]; };

  // Augmented system: sum_{j=1}^M q_j c_{L+i-j} = -c_{L+i}, i = 1..M.
  std::vector<std::vector<Rational>> a(M, std::vector<Rational>(M + 1));
  for (unsigned i = 0; i < M; ++i) {
    for (unsigned j = 0; j < M; ++j) a[i][j] = coef(static_cast<long>(L) + i - j);
    a[i][M] = -coef(static_cast<long>(L) + i + 1);
  }

  unsigned rank = 0;
  std::vector<unsigned> pivot_col;
  for (unsigned col = 0; col < M && rank < M; ++col) {
    unsigned pivot = rank;
    while (pivot < M && a[pivot][col] == 0) ++pivot;
    if (pivot == M) continue;
    std::swap(a[pivot], a[rank]);
    for (unsigned row = 0; row < M; ++row) {
      if (row == rank || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[rank][col];
      for (unsigned k = col; k <= M; ++k) a[row][k] -= factor * a[rank][k];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < M) throw SingularSystem(L, M, M - rank);

  std::vector<Rational> q(M + 1);
  q[0] = 1;
  for (unsigned i = 0; i < M; ++i) q[pivot_col[i] + 1] = a[i][M] / a[i][pivot_col[i]];

  std::vector<Rational> p(L + 1);
  for (unsigned k = 0; k <= L; ++k) {
    for (unsigned j = 0; j <= std::min(k, M); ++j) p[k] += q[j] * c[k - j];
  }
  return PadeApproximant{UniPolynomial(std::move(p)), UniPolynomial(std::move(q)), L, M};
}

PadeApproximant pade_from_coeffs(std::span<const double> c, unsigned L, unsigned M) {
  std::vector<Rational> exact;
  exact.reserve(c.size());
  for (double v : c) exact.push_back(to_rational(v));
  auto approximant = pade_from_coeffs(std::span<const Rational>(exact), L, M);

  const auto re = approximant.taylor(L + M);
  for (unsigned n = 0; n <= L + M; ++n) {
    const double got = to_double(re[n]);
    if (std::abs(got - c[n]) > 1e-10 * std::max(1.0, std::abs(c[n]))) {
      throw std::runtime_error("pade_from_coeffs: re-expansion residual check failed at order " +
                               std::to_string(n));
    }
  }
  return approximant;
}

double pade_eval(const PadeApproximant& p, double x, double pole_tol) {
  const Rational xr = to_rational(x);
  const Rational num = p.numerator(xr);
  const Rational den = p.denominator(xr);
  const double num_d = to_double(num);
  const double den_d = to_double(den);
  if (std::abs(den_d) < pole_tol * (1.0 + std::abs(num_d))) throw PoleNearEvaluation(x, den_d);
  return to_double(num / den);
}

double resum(const SeriesCoefficients& s, unsigned L, unsigned M, double t) {
  return s.prefactor * pade_eval(pade_from_coeffs(std::span<const double>(s.coeffs), L, M), t);
}

}  // namespace dobinski
