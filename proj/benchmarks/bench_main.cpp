#include <benchmark/benchmark.h>

#include "dobinski/combinatorics.hpp"
#include "dobinski/matrix_elements.hpp"
#include "dobinski/multivariate_bell.hpp"
#include "dobinski/pade.hpp"

using namespace dobinski;

static void BM_Stirling2Row(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    for (unsigned k = 0; k <= n; ++k) benchmark::DoNotOptimize(stirling2(n, k));
  }
}
BENCHMARK(BM_Stirling2Row)->Arg(16)->Arg(32)->Arg(64);

static void BM_BellPolynomial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bell_polynomial(n));
}
BENCHMARK(BM_BellPolynomial)->Arg(16)->Arg(64);

static void BM_DobinskiSum(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const std::vector<Rational> abar{Rational(1)};
  for (auto _ : state) benchmark::DoNotOptimize(dobinski_eval(n, 2.0, abar, 1e-12));
}
BENCHMARK(BM_DobinskiSum)->Arg(5)->Arg(15);

static void BM_MultivariateBell(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const std::vector<Rational> g(n, Rational(1));
  for (auto _ : state) {
    for (unsigned k = 1; k <= n; ++k) benchmark::DoNotOptimize(multivariate_bell<Rational>(n, k, g));
  }
}
BENCHMARK(BM_MultivariateBell)->Arg(8)->Arg(14);

static void BM_SeriesInG(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_in_G(1.0, 1.0, 1.0, order));
}
BENCHMARK(BM_SeriesInG)->Arg(7)->Arg(26);

static void BM_ExactQuartic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exact_diag_quartic(1.0, 1.0, 1.0, 1.0, 1e-15));
}
BENCHMARK(BM_ExactQuartic);

static void BM_PadeFromSeries(benchmark::State& state) {
  const auto M = static_cast<unsigned>(state.range(0));
  const auto s = series_in_G(1.0, 1.0, 1.0, 2 * M - 1);
  for (auto _ : state) benchmark::DoNotOptimize(resum(s, M - 1, M, 1.0));
}
BENCHMARK(BM_PadeFromSeries)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK_MAIN();
