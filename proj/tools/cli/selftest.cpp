#include "cli/selftest.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "cli/output.hpp"
#include "dobinski/combinatorics.hpp"
#include "dobinski/matrix_elements.hpp"
#include "dobinski/pade.hpp"

namespace dobinski::cli {

namespace {

double abs_double(const Rational& r) { return std::abs(to_double(r)); }

SelftestCheck check_orthogonality() {
  SelftestCheck c{"stirling_orthogonality", 0.0, 0.0, "sum_k s(n,k) S(k,m) = delta_nm, n,m <= 12"};
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned m = 0; m <= 12; ++m) {
      Integer sum = 0;
      for (unsigned k = 0; k <= 12; ++k) sum += stirling1_signed(n, k) * stirling2(k, m);
      const Integer delta = n == m ? 1 : 0;
      c.max_residual = std::max(c.max_residual, std::abs(to_double(Rational(sum - delta))));
    }
  }
  return c;
}

SelftestCheck check_dobinski() {
  SelftestCheck c{"dobinski", 0.0, 1e-10, "series sums vs exact Bell polynomials, n <= 15, x in {0.5,1,2}"};
  const std::vector<Rational> unit{Rational(1)};
  const std::vector<Rational> pair{Rational(1), Rational(1)};
  for (double x : {0.5, 1.0, 2.0}) {
    const Rational xr = to_rational(x);
    for (unsigned n = 0; n <= 15; ++n) {
      const double series = static_cast<double>(dobinski_eval(n, x, unit, 1e-14));
      const double exact = to_double(bell_polynomial(n)(xr));
      c.max_residual = std::max(c.max_residual, std::abs(series - exact));
      if (n >= 1 && n <= 10) {
        const double gseries = static_cast<double>(dobinski_eval(n, x, pair, 1e-14));
        const double gexact = to_double(generalized_bell_polynomial(n, pair)(xr));
        c.max_residual = std::max(c.max_residual, std::abs(gseries - gexact) / std::max(1.0, std::abs(gexact)));
      }
    }
  }
  return c;
}

SelftestCheck check_toy_model() {
  SelftestCheck c{"toy_model", 0.0, 1e-12, "number-state sum vs closed form, 5x5 (lambda, z) grid"};
  const std::vector<double> lambdas{0.0, 0.25, 0.5, 1.0, 2.0};
  const std::vector<Complex> zs{{0.3, 0.0}, {1.0, 0.0}, {1.0, 0.5}, {-0.7, 1.2}, {2.0, -0.4}};
  ModelParams p;
  p.alpha = CouplingVector({Rational(1)});
  p.zprime = CoherentLabel(Complex{0.8, 0.1});
  for (double lam : lambdas) {
    for (const Complex& z : zs) {
      p.lambda = lam;
      p.z = CoherentLabel(z);
      const Complex closed = toy_closed_form(lam, p.zprime, p.z);
      const Complex sum = exact_matrix_element(p, 1e-16 * std::abs(closed));
      c.max_residual = std::max(c.max_residual, std::abs(sum - closed) / std::abs(closed));
    }
  }
  return c;
}

SelftestCheck check_pade(std::uint64_t seed, bool inject_fault) {
  SelftestCheck c{"pade_reexpansion", 0.0, 0.0, ""};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> order(0, 5);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  unsigned built = 0;
  unsigned singular = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned L = order(rng);
    const unsigned M = order(rng);
    std::vector<Rational> coeffs;
    for (unsigned i = 0; i <= L + M; ++i) coeffs.emplace_back(Integer(num(rng)), Integer(den(rng)));
    PadeApproximant p;
    try {
      p = pade_from_coeffs(std::span<const Rational>(coeffs), L, M);
    } catch (const SingularSystem&) {
      ++singular;
      continue;
    }
    ++built;
    if (inject_fault && built == 1) coeffs.back() += Rational(Integer(1), Integer(1000));
    const auto back = p.taylor(L + M);
    for (unsigned i = 0; i <= L + M; ++i) c.max_residual = std::max(c.max_residual, abs_double(back[i] - coeffs[i]));
  }
  c.detail = fmt::format("seed {}, {} approximants rebuilt exactly, {} singular skipped{}", seed, built, singular,
                         inject_fault ? ", fault injected" : "");
  return c;
}

SelftestCheck summary_check(const std::string& name, const SweepSummary& a, const SweepSummary& b,
                            const std::string& detail) {
  SelftestCheck c{name, 0.0, 0.0, detail};
  if (a.size() != b.size()) {
    c.max_residual = HUGE_VAL;
    return c;
  }
  for (const auto& [col, sa] : a) {
    const auto it = b.find(col);
    if (it == b.end() || it->second.finite_points != sa.finite_points ||
        it->second.failed_points != sa.failed_points) {
      c.max_residual = HUGE_VAL;
      return c;
    }
    c.max_residual = std::max(c.max_residual, std::abs(it->second.max_rel_error - sa.max_rel_error));
  }
  return c;
}

SelftestCheck check_sweep_roundtrip(const SweepSpec& spec) {
  const SweepTable t = run_sweep(spec);
  std::stringstream csv;
  write_sweep(csv, t, "csv");
  const SweepTable back = read_sweep_csv(csv);
  return summary_check("sweep_csv_roundtrip", summarize(t), summarize(back),
                       "summary of a sweep equals the summary of its CSV");
}

SelftestCheck check_ingest(const std::string& path, const SweepSpec& spec) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  const SweepTable ingested = read_sweep_csv(in);
  return summary_check("sweep_ingest", summarize(run_sweep(spec)), summarize(ingested),
                       "summary of " + path + " equals a fresh sweep");
}

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

SelftestReport run_selftest(const SelftestOptions& opt) {
  SelftestReport r;
  r.checks.push_back(check_orthogonality());
  r.checks.push_back(check_dobinski());
  r.checks.push_back(check_toy_model());
  r.checks.push_back(check_pade(opt.seed, opt.inject_fault));
  r.checks.push_back(check_sweep_roundtrip(opt.sweep_spec));
  if (opt.ingest_path) r.checks.push_back(check_ingest(*opt.ingest_path, opt.sweep_spec));
  return r;
}

void print_report(std::ostream& os, const SelftestReport& r) {
  for (const auto& c : r.checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << " max_residual=" << format_double(c.max_residual)
       << " tolerance=" << format_double(c.tolerance) << "  (" << c.detail << ")\n";
  }
  const auto ok = std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.passed(); });
  os << "selftest: " << ok << "/" << r.checks.size() << " checks passed\n";
}

}  // namespace dobinski::cli
