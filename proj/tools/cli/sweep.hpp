#pragma once

// Exact-vs-resummed sweeps of the diagonal quadratic model over one of G, xi
// or x = |z|^2, plus CSV re-ingestion and error summaries.

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "dobinski/matrix_elements.hpp"

namespace dobinski::cli {

enum class SweepVariable { G, XI, X };
enum class SeriesChoice { xi_series, g_series, both };

struct PadeOrder {
  unsigned L = 3;
  unsigned M = 4;
  bool operator==(const PadeOrder&) const = default;
};

/// The swept variable is not part of `fixed`; only the two other model
/// quantities are read from it.
struct FixedParams {
  double g = 1.0;
  double G = 1.0;
  double xi = 1.0;
  double x = 1.0;
};

struct SweepSpec {
  SweepVariable variable = SweepVariable::G;
  double min = 0.0;
  double max = 2.0;
  unsigned steps = 41;
  FixedParams fixed;
  std::vector<PadeOrder> pade_orders{{3, 4}};
  std::vector<unsigned> partial_orders;
  SeriesChoice series = SeriesChoice::g_series;
  double eps = kDefaultEps;

  /// Throws std::invalid_argument unless min < max, steps >= 2 and the
  /// remaining parameters are finite.
  void validate() const;
  double grid_point(unsigned i) const;
};

SweepVariable parse_sweep_variable(const std::string& s);
SeriesChoice parse_series_choice(const std::string& s);
/// "min:max:steps"
void parse_range(const std::string& s, SweepSpec& spec);
/// "3/4,2/3"
std::vector<PadeOrder> parse_pade_orders(const std::string& s);
std::string to_string(SweepVariable v);

/// Numeric columns first (swept value, exact, partial sums, Pade values),
/// status strings kept separately.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;
  std::vector<std::string> status;
};

SweepTable run_sweep(const SweepSpec& spec);

void write_sweep(std::ostream& os, const SweepTable& t, const std::string& format);
SweepTable read_sweep_csv(std::istream& is);

/// Max relative deviation from the exact column for every approximation
/// column, over rows where both are finite. Non-finite cells are counted.
struct ColumnSummary {
  double max_rel_error = 0.0;
  unsigned finite_points = 0;
  unsigned failed_points = 0;
  bool operator==(const ColumnSummary&) const = default;
};

using SweepSummary = std::map<std::string, ColumnSummary>;

SweepSummary summarize(const SweepTable& t);
void write_summary(std::ostream& os, const SweepSummary& s);

}  // namespace dobinski::cli
