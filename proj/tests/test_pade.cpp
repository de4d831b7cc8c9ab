#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dobinski/matrix_elements.hpp"
#include "dobinski/pade.hpp"
#include "oracles.hpp"

using namespace dobinski;

namespace {

// q * c - p must vanish through x^{L+M}.
bool matches_through(const PadeApproximant& pa, const std::vector<Rational>& c) {
  const auto qc = oracle::cauchy_product(pa.denominator.coefficients(), c, pa.L + pa.M);
  for (unsigned n = 0; n <= pa.L + pa.M; ++n) {
    if (qc[n] != pa.numerator.coefficient(n)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("[L/0] is the Taylor polynomial") {
  const std::vector<Rational> c{1, 2, 3, 4};
  const auto pa = pade_from_coeffs(std::span<const Rational>(c), 3, 0);
  CHECK(pa.numerator == UniPolynomial(c));
  CHECK(pa.denominator == UniPolynomial::constant(1));
  SeriesCoefficients s{SeriesVariable::G, {1.0, -0.5, 0.25, 3.0}, 2.0};
  for (double t : {-1.0, 0.3, 2.0}) CHECK(resum(s, 3, 0, t) == Catch::Approx(s.partial_sum(t, 3)).epsilon(1e-15));
}

TEST_CASE("[1/1] of exp") {
  const std::vector<Rational> c{1, 1, Rational(1, 2)};
  const auto pa = pade_from_coeffs(std::span<const Rational>(c), 1, 1);
  CHECK(pa.numerator == UniPolynomial({1, Rational(1, 2)}));
  CHECK(pa.denominator == UniPolynomial({1, Rational(-1, 2)}));
  CHECK(pade_eval(pa, 1.0) == 3.0);
  CHECK(pade_eval(pa, 0.0) == 1.0);
}

TEST_CASE("[0/1] recovers the geometric series exactly") {
  const std::vector<double> c{1.0, 1.0, 1.0, 1.0};
  const auto pa = pade_from_coeffs(std::span<const double>(c), 0, 1);
  CHECK(pade_eval(pa, 0.5) == 2.0);
  CHECK_THROWS_AS(pade_eval(pa, 1.0), PoleNearEvaluation);
}

TEST_CASE("re-expansion reproduces random rational input") {
  std::mt19937_64 rng(2024);
  int built = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned L = trial % 6;
    const unsigned M = (trial / 6) % 6;
    std::vector<Rational> c;
    for (unsigned i = 0; i <= L + M; ++i) c.push_back(oracle::random_rational(rng));
    try {
      const auto pa = pade_from_coeffs(std::span<const Rational>(c), L, M);
      ++built;
      CHECK(pa.denominator.coefficient(0) == 1);
      CHECK(pa.numerator.degree() <= static_cast<int>(L));
      CHECK(pa.denominator.degree() <= static_cast<int>(M));
      CHECK(matches_through(pa, c));
      const auto re = pa.taylor(L + M);
      CHECK(std::equal(re.begin(), re.end(), c.begin()));
    } catch (const SingularSystem&) {
    }
  }
  CHECK(built > 150);
}

TEST_CASE("rank-deficient systems are reported") {
  // The geometric series is already [0/1]; [2/2] has a singular system.
  const std::vector<Rational> c{1, 1, 1, 1, 1};
  try {
    pade_from_coeffs(std::span<const Rational>(c), 2, 2);
    FAIL("expected SingularSystem");
  } catch (const SingularSystem& e) {
    CHECK(e.defect() == 1);
    CHECK(e.L() == 2);
    CHECK(e.M() == 2);
  }
  const std::vector<Rational> zeros{1, 0, 0, 0, 0};
  try {
    pade_from_coeffs(std::span<const Rational>(zeros), 2, 2);
    FAIL("expected SingularSystem");
  } catch (const SingularSystem& e) {
    CHECK(e.defect() == 2);
  }
  CHECK_THROWS_AS(pade_from_coeffs(std::span<const Rational>(c), 3, 2), std::invalid_argument);
}

TEST_CASE("float coefficients are solved exactly") {
  const auto s = series_in_G(1.0, 1.0, 1.0, 9);
  const auto pa = pade_from_coeffs(std::span<const double>(s.coeffs), 4, 5);
  std::vector<Rational> exact;
  for (double v : s.coeffs) exact.push_back(to_rational(v));
  CHECK(matches_through(pa, exact));
}

TEST_CASE("scale covariance") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> c, scaled;
    const double a = trial % 2 == 0 ? 0.5 : -2.0;
    for (unsigned k = 0; k <= 7; ++k) {
      const double v = to_double(oracle::random_rational(rng));
      c.push_back(v);
      scaled.push_back(v * std::pow(a, k));
    }
    const double t = 0.37;
    try {
      const double lhs = resum({SeriesVariable::G, scaled, 1.0}, 3, 4, t);
      const double rhs = resum({SeriesVariable::G, c, 1.0}, 3, 4, a * t);
      CHECK(lhs == Catch::Approx(rhs).epsilon(1e-13));
    } catch (const std::runtime_error&) {
    }
  }
}

TEST_CASE("resummation of the quadratic model") {
  const auto sg = series_in_G(1.0, 1.0, 1.0, 7);
  CHECK(resum(sg, 3, 4, 0.0) == Catch::Approx(exact_diag_quartic(1.0, 0.0, 1.0, 1.0, 1e-16)).epsilon(1e-14));

  const double exact = exact_diag_quartic(1.0, 1.0, 1.0, 1.0);
  const double err_g = std::abs(resum(sg, 3, 4, 1.0) - exact) / exact;
  const double err_xi = std::abs(resum(series_in_xi(1.0, 1.0, 1.0, 7), 3, 4, 1.0) - exact) / exact;
  CHECK(err_g <= 1e-2);
  CHECK(err_xi > err_g);
  CHECK(std::isfinite(err_xi));

  // Pade orders [2/3], [3/4], [4/5] agree with each other.
  const auto long_series = series_in_G(1.0, 1.0, 1.0, 9);
  for (double G : {0.25, 0.5, 1.0}) {
    const double a = resum(long_series, 2, 3, G);
    const double b = resum(long_series, 3, 4, G);
    const double c = resum(long_series, 4, 5, G);
    CHECK(std::abs(a - b) / std::abs(b) <= 1e-2);
    CHECK(std::abs(b - c) / std::abs(c) <= 1e-2);
    CHECK(std::abs(a - c) / std::abs(c) <= 1e-2);
  }
  CHECK_THROWS_AS(resum(sg, 4, 4, 1.0), std::invalid_argument);
}
