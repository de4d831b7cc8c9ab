#include "cli/app.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "cli/output.hpp"
#include "cli/selftest.hpp"
#include "cli/sweep.hpp"
#include "dobinski/combinatorics.hpp"
#include "dobinski/matrix_elements.hpp"
#include "dobinski/multivariate_bell.hpp"
#include "dobinski/pade.hpp"

namespace dobinski::cli {

namespace {

constexpr unsigned kMaxTableN = 64;
constexpr unsigned kMaxPartitionN = 30;
constexpr unsigned kMaxSeriesOrder = 40;

struct Options {
  double g = 1.0, G = 1.0, xi = 1.0, x = 1.0, lambda = 0.0, eps = kDefaultEps;
  std::string alpha = "1";
  std::string z = "1", zprime = "1";
  unsigned order = 10;
  unsigned L = 3, M = 4;
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 1;

  std::string kind;
  unsigned n_max = 10;
  unsigned n = 5;
  unsigned hermite_M = 2;
  std::string args, f, gser;

  std::string variable = "G";
  std::string coeffs, series;
  double at = 0.0;
  CLI::Option* at_opt = nullptr;

  std::string range = "0:2:41";
  std::string pade_orders = "3/4";
  std::string partial;
  std::string series_choice = "G";
  bool inject_fault = false;
  std::string ingest;
};

Cell cell(const Integer& v) { return v.str(); }
Cell cell(const Rational& v) { return dobinski::to_string(v); }
Cell cell(unsigned v) { return std::to_string(v); }

std::vector<Rational> rationals(const std::string& text, const char* what) {
  try {
    return parse_rational_list(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(fmt::format("--{}: {}", what, e.what()));
  }
}

CouplingVector coupling(const Options& o) { return CouplingVector(rationals(o.alpha, "alpha")); }

CoherentLabel parse_label(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  try {
    const double re = std::stod(text.substr(0, comma));
    const double im = comma == std::string::npos ? 0.0 : std::stod(text.substr(comma + 1));
    return CoherentLabel(re, im);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(fmt::format("--{} expects re[,im], got '{}'", what, text));
  }
}

// Writes to --out when given, else to the command's output stream.
void emit(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (o.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + o.out_path);
  write(file);
}

void emit_table(const Options& o, std::ostream& out, const Table& t) {
  emit(o, out, [&](std::ostream& os) { write_table(os, t, o.format); });
}

// ---- table ---------------------------------------------------------------

Table table_triangle(unsigned n_max, Integer (*f)(unsigned, unsigned)) {
  Table t{{"n", "k", "value"}, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) t.add({cell(n), cell(k), cell(f(n, k))});
  }
  return t;
}

using TableHandler = std::function<Table(const Options&)>;

const std::map<std::string, TableHandler>& table_kinds() {
  static const std::map<std::string, TableHandler> kinds{
      {"stirling2", [](const Options& o) { return table_triangle(o.n_max, stirling2); }},
      {"stirling1", [](const Options& o) { return table_triangle(o.n_max, stirling1_signed); }},
      {"falling",
       [](const Options& o) {
         Table t{{"j", "l", "value"}, {}};
         for (unsigned j = 0; j <= o.n_max; ++j) {
           for (unsigned l = 0; l <= o.n_max; ++l) t.add({cell(j), cell(l), cell(falling_factorial(j, l))});
         }
         return t;
       }},
      {"bell",
       [](const Options& o) {
         Table t{{"n", "bell_number", "bell_polynomial"}, {}};
         for (unsigned n = 0; n <= o.n_max; ++n) {
           t.add({cell(n), cell(bell_number(n)), bell_polynomial(n).to_string()});
         }
         return t;
       }},
      {"transform",
       [](const Options& o) {
         const CouplingVector a = coupling(o);
         const auto abar = inverse_stirling_transform(a);
         Table t{{"l", "alpha", "alphabar"}, {}};
         for (unsigned l = 1; l <= a.degree(); ++l) t.add({cell(l), cell(a[l - 1]), cell(abar[l - 1])});
         return t;
       }},
      {"genstirling",
       [](const Options& o) {
         const auto abar = inverse_stirling_transform(coupling(o));
         Table t{{"n", "k", "value"}, {}};
         const auto N = static_cast<unsigned>(abar.size());
         for (unsigned n = 1; n <= o.n_max; ++n) {
           for (unsigned k = 0; k <= n * N; ++k) t.add({cell(n), cell(k), cell(generalized_stirling(n, k, abar))});
         }
         return t;
       }},
      {"genbell",
       [](const Options& o) {
         const auto abar = inverse_stirling_transform(coupling(o));
         Table t{{"n", "polynomial"}, {}};
         for (unsigned n = 0; n <= o.n_max; ++n) t.add({cell(n), generalized_bell_polynomial(n, abar).to_string()});
         return t;
       }},
      {"asymptotic",
       [](const Options& o) {
         Table t{{"n", "bell_number", "asymptotic", "ratio"}, {}};
         for (unsigned n = 3; n <= o.n_max; ++n) {
           const double exact = to_double(Rational(bell_number(n)));
           const double approx = bell_asymptotic(n);
           t.add({cell(n), exact, approx, approx / exact});
         }
         return t;
       }},
      {"partitions",
       [](const Options& o) {
         if (o.n_max < 1 || o.n_max > kMaxPartitionN) {
           throw std::invalid_argument(fmt::format("partitions: --n-max must be in 1..{}", kMaxPartitionN));
         }
         Table t{{"n", "k", "multiplicities", "weight"}, {}};
         for (unsigned k = 1; k <= o.n_max; ++k) {
           for (const auto& mv : partitions_n_into_k(o.n_max, k)) {
             std::string nu;
             for (std::size_t j = 0; j < mv.nu.size(); ++j) nu += (j ? ";" : "") + std::to_string(mv.nu[j]);
             t.add({cell(o.n_max), cell(k), nu, cell(partition_weight(mv))});
           }
         }
         return t;
       }},
      {"mbell",
       [](const Options& o) {
         std::vector<Rational> g =
             o.args.empty() ? std::vector<Rational>(o.n_max, Rational(1)) : rationals(o.args, "args");
         if (g.size() < o.n_max) throw std::invalid_argument("mbell: --args needs at least n-max values g_1, g_2, ...");
         Table t{{"n", "k", "value"}, {}};
         for (unsigned n = 1; n <= o.n_max; ++n) {
           for (unsigned k = 1; k <= n; ++k) t.add({cell(n), cell(k), cell(multivariate_bell<Rational>(n, k, g))});
         }
         return t;
       }},
      {"compose",
       [](const Options& o) {
         TruncatedSeries<Rational> f{rationals(o.f, "f")};
         TruncatedSeries<Rational> g{rationals(o.gser, "gser")};
         const auto h = compose_series(f, g, o.order);
         Table t{{"n", "coefficient", "taylor"}, {}};
         for (unsigned n = 0; n <= o.order; ++n) t.add({cell(n), cell(h.coeffs[n]), cell(h.taylor(n))});
         return t;
       }},
      {"hermite",
       [](const Options& o) {
         const auto a = rationals(o.args, "args");
         if (a.size() != 2) throw std::invalid_argument("hermite: --args expects g1,gM");
         Table t{{"n", "M", "value"}, {}};
         for (unsigned n = 0; n <= o.n_max; ++n) {
           t.add({cell(n), cell(o.hermite_M), cell(hermite_kdf<Rational>(n, o.hermite_M, a[0], a[1]))});
         }
         return t;
       }},
      {"hermite3",
       [](const Options& o) {
         const auto a = rationals(o.args, "args");
         if (a.size() != 3) throw std::invalid_argument("hermite3: --args expects a,b,c");
         Table t{{"n", "value"}, {}};
         for (unsigned n = 0; n <= o.n_max; ++n) t.add({cell(n), cell(hermite3<Rational>(n, a[0], a[1], a[2]))});
         return t;
       }},
  };
  return kinds;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto& kinds = table_kinds();
  const auto it = kinds.find(o.kind);
  if (it == kinds.end()) throw std::invalid_argument("unknown table kind '" + o.kind + "'");
  if (o.n_max > kMaxTableN) throw std::invalid_argument(fmt::format("--n-max must be at most {}", kMaxTableN));
  emit_table(o, out, it->second(o));
  return kOk;
}

// ---- exact ---------------------------------------------------------------

int cmd_exact(const Options& o, std::ostream& out) {
  Table t;
  if (o.kind == "quartic") {
    t.columns = {"g", "G", "xi", "x", "value"};
    t.add({o.g, o.G, o.xi, o.x, exact_diag_quartic(o.g, o.G, o.xi, o.x, o.eps)});
  } else if (o.kind == "matrix" || o.kind == "toy") {
    ModelParams p;
    p.lambda = o.lambda;
    p.alpha = o.kind == "toy" ? CouplingVector({Rational(1)}) : coupling(o);
    p.z = parse_label(o.z, "z");
    p.zprime = parse_label(o.zprime, "zprime");
    const Complex v = exact_matrix_element(p, o.eps);
    t.columns = {"lambda", "re", "im"};
    t.add({o.lambda, v.real(), v.imag()});
    if (o.kind == "toy") {
      const Complex c = toy_closed_form(o.lambda, p.zprime, p.z);
      t.columns = {"lambda", "re", "im", "closed_re", "closed_im"};
      t.rows.back().insert(t.rows.back().end(), {c.real(), c.imag()});
    }
  } else if (o.kind == "overlap") {
    const Complex v = overlap(parse_label(o.zprime, "zprime"), parse_label(o.z, "z"));
    t.columns = {"re", "im"};
    t.add({v.real(), v.imag()});
  } else if (o.kind == "dobinski") {
    const auto abar = inverse_stirling_transform(coupling(o));
    const double series = static_cast<double>(dobinski_eval(o.n, o.x, abar, o.eps));
    const double poly = to_double(generalized_bell_polynomial(o.n, abar)(to_rational(o.x)));
    t.columns = {"n", "x", "series", "polynomial"};
    t.add({cell(o.n), o.x, series, poly});
  } else {
    throw std::invalid_argument("unknown exact kind '" + o.kind + "' (quartic, matrix, toy, overlap, dobinski)");
  }
  emit_table(o, out, t);
  return kOk;
}

// ---- series --------------------------------------------------------------

SeriesCoefficients make_series(const std::string& variable, const Options& o, unsigned order) {
  if (order > kMaxSeriesOrder) throw std::invalid_argument(fmt::format("--order must be at most {}", kMaxSeriesOrder));
  if (variable == "G") return series_in_G(o.g, o.xi, o.x, order);
  if (variable == "xi" || variable == "XI") return series_in_xi(o.g, o.G, o.x, order);
  if (variable == "lambda" || variable == "LAMBDA") return general_series_coeffs(coupling(o), o.x, order);
  throw std::invalid_argument("unknown series variable '" + variable + "' (xi, G, lambda)");
}

int cmd_series(const Options& o, std::ostream& out) {
  const SeriesCoefficients s = make_series(o.variable, o, o.order);
  Table t{{"variable", "k", "coefficient", "prefactor"}, {}};
  for (unsigned k = 0; k < s.coeffs.size(); ++k) {
    t.add({std::string(dobinski::to_string(s.variable)), cell(k), s.coeffs[k], s.prefactor});
  }
  emit_table(o, out, t);
  return kOk;
}

// ---- pade ----------------------------------------------------------------

int cmd_pade(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.coeffs.empty() == o.series.empty()) {
    throw std::invalid_argument("pade: give exactly one of --coeffs or --series");
  }
  std::vector<Rational> c;
  double prefactor = 1.0;
  if (!o.coeffs.empty()) {
    c = rationals(o.coeffs, "coeffs");
  } else {
    const SeriesCoefficients s = make_series(o.series, o, o.L + o.M);
    for (double v : s.coeffs) c.push_back(to_rational(v));
    prefactor = s.prefactor;
  }

  PadeApproximant p;
  for (unsigned M = o.M;; --M) {
    try {
      p = pade_from_coeffs(std::span<const Rational>(c), o.L, M);
      break;
    } catch (const SingularSystem& e) {
      err << fmt::format("note: [{}/{}] denominator system is singular (defect {})", o.L, M, e.defect());
      if (M == 0) {
        err << '\n';
        throw;
      }
      err << fmt::format(", retrying with [{}/{}]\n", o.L, M - 1);
    }
  }

  Table t{{"L", "M", "numerator", "denominator", "prefactor"}, {}};
  t.add({cell(p.L), cell(p.M), p.numerator.to_string(), p.denominator.to_string(), prefactor});
  if (o.at_opt->count() > 0) {
    t.columns.insert(t.columns.end(), {"at", "value"});
    t.rows.back().insert(t.rows.back().end(), {o.at, prefactor * pade_eval(p, o.at)});
    if (!o.series.empty()) {
      // same number through the library's one-call path
      const SeriesCoefficients s = make_series(o.series, o, o.L + o.M);
      if (p.M == o.M) {
        t.columns.push_back("resum");
        t.rows.back().emplace_back(resum(s, o.L, o.M, o.at));
      }
    }
  }
  emit_table(o, out, t);
  return kOk;
}

// ---- sweep ---------------------------------------------------------------

SweepSpec sweep_spec(const Options& o) {
  SweepSpec spec;
  spec.variable = parse_sweep_variable(o.variable);
  parse_range(o.range, spec);
  spec.fixed = {o.g, o.G, o.xi, o.x};
  spec.pade_orders = parse_pade_orders(o.pade_orders);
  spec.partial_orders.clear();
  if (!o.partial.empty()) {
    for (const auto& r : rationals(o.partial, "partial")) {
      if (denominator(r) != 1 || r < 0) throw std::invalid_argument("--partial expects non-negative integers");
      spec.partial_orders.push_back(numerator(r).convert_to<unsigned>());
    }
  }
  spec.series = parse_series_choice(o.series_choice);
  spec.eps = o.eps;
  spec.validate();
  return spec;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const SweepTable t = run_sweep(sweep_spec(o));
  emit(o, out, [&](std::ostream& os) { write_sweep(os, t, o.format); });
  if (!o.out_path.empty()) write_summary(out, summarize(t));
  return kOk;
}

// ---- selftest ------------------------------------------------------------

int cmd_selftest(const Options& o, std::ostream& out) {
  SelftestOptions opt;
  opt.seed = o.seed;
  opt.inject_fault = o.inject_fault;
  opt.sweep_spec = sweep_spec(o);
  if (!o.ingest.empty()) opt.ingest_path = o.ingest;
  const SelftestReport r = run_selftest(opt);
  print_report(out, r);
  return r.passed() ? kOk : kFailure;
}

// ---- option wiring -------------------------------------------------------

void add_model_flags(CLI::App* sub, Options& o) {
  sub->add_option("--g", o.g, "linear coupling g");
  sub->add_option("--G", o.G, "quadratic coupling G");
  sub->add_option("--xi", o.xi, "scale xi");
  sub->add_option("--x", o.x, "|z|^2 (for the lambda series: conj(z') z)");
  sub->add_option("--eps", o.eps, "absolute error target of exact sums");
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", o.out_path, "write data to this file");
}

void add_sweep_flags(CLI::App* sub, Options& o) {
  sub->add_option("--variable", o.variable, "swept variable: G, XI or X");
  sub->add_option("--range", o.range, "min:max:steps");
  sub->add_option("--pade", o.pade_orders, "Pade orders, e.g. 3/4,2/3");
  sub->add_option("--partial", o.partial, "partial-sum orders, e.g. 7");
  sub->add_option("--series", o.series_choice, "G, XI or BOTH");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bell/Stirling combinatorics, perturbation series and Pade resummation"};
  app.name("dobinski");
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "exact combinatorial tables");
  table->add_option("--kind", o.kind, "stirling2, stirling1, falling, bell, transform, genstirling, genbell, "
                                      "asymptotic, partitions, mbell, compose, hermite, hermite3")
      ->required();
  table->add_option("--n-max", o.n_max, "largest n (at most 64)");
  table->add_option("--alpha", o.alpha, "alpha_1,...,alpha_N of H(n) = sum alpha_i n^i");
  table->add_option("--args", o.args, "polynomial arguments (mbell: g_1..; hermite: g1,gM; hermite3: a,b,c)");
  table->add_option("--M", o.hermite_M, "order M of the Hermite-Kampe de Feriet polynomial");
  table->add_option("--f", o.f, "outer series coefficients (compose)");
  table->add_option("--gser", o.gser, "inner series coefficients, constant term 0 (compose)");
  table->add_option("--order", o.order, "composition order");
  add_output_flags(table, o);

  auto* exact = app.add_subcommand("exact", "convergent sums and closed forms");
  exact->add_option("--kind", o.kind, "quartic, matrix, toy, overlap, dobinski")->required();
  add_model_flags(exact, o);
  exact->add_option("--lambda", o.lambda, "lambda >= 0");
  exact->add_option("--alpha", o.alpha, "alpha_1,...,alpha_N");
  exact->add_option("--z", o.z, "ket label re[,im]");
  exact->add_option("--zprime", o.zprime, "bra label re[,im]");
  exact->add_option("--n", o.n, "Bell index (dobinski)");
  add_output_flags(exact, o);

  auto* series = app.add_subcommand("series", "perturbation series coefficients");
  series->add_option("--variable", o.variable, "xi, G or lambda");
  series->add_option("--order", o.order, "highest coefficient (at most 40)");
  series->add_option("--alpha", o.alpha, "alpha_1,...,alpha_N (lambda series)");
  add_model_flags(series, o);
  add_output_flags(series, o);

  auto* pade = app.add_subcommand("pade", "Pade approximants");
  pade->add_option("--coeffs", o.coeffs, "Taylor coefficients c_0,c_1,...");
  pade->add_option("--series", o.series, "build coefficients from a series: xi, G or lambda");
  pade->add_option("--L", o.L, "numerator degree");
  pade->add_option("--M", o.M, "denominator degree");
  o.at_opt = pade->add_option("--at", o.at, "evaluation point");
  pade->add_option("--alpha", o.alpha, "alpha_1,...,alpha_N (lambda series)");
  add_model_flags(pade, o);
  add_output_flags(pade, o);

  auto* sweep = app.add_subcommand("sweep", "exact vs resummed values on a grid");
  add_sweep_flags(sweep, o);
  add_model_flags(sweep, o);
  add_output_flags(sweep, o);

  auto* selftest = app.add_subcommand("selftest", "cross-module consistency checks");
  selftest->add_option("--seed", o.seed, "seed of the randomized checks");
  selftest->add_flag("--inject-fault", o.inject_fault, "perturb one coefficient (negative control)");
  selftest->add_option("--ingest", o.ingest, "sweep CSV to compare against a fresh sweep");
  add_sweep_flags(selftest, o);
  add_model_flags(selftest, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*table) return cmd_table(o, out);
    if (*exact) return cmd_exact(o, out);
    if (*series) return cmd_series(o, out);
    if (*pade) return cmd_pade(o, out, err);
    if (*sweep) return cmd_sweep(o, out);
    if (*selftest) return cmd_selftest(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace dobinski::cli
