#include "cli/sweep.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cli/output.hpp"
#include "dobinski/pade.hpp"

namespace dobinski::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

unsigned parse_unsigned(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a non-negative integer: '" + s + "'");
  }
  return static_cast<unsigned>(std::stoul(s));
}

struct Point {
  double g, G, xi, x;
};

Point model_at(const SweepSpec& spec, double t) {
  Point p{spec.fixed.g, spec.fixed.G, spec.fixed.xi, spec.fixed.x};
  switch (spec.variable) {
    case SweepVariable::G: p.G = t; break;
    case SweepVariable::XI: p.xi = t; break;
    case SweepVariable::X: p.x = t; break;
  }
  return p;
}

// Which series carry the sweep, with their column tags.
std::vector<std::pair<SeriesVariable, std::string>> chosen_series(SeriesChoice c) {
  switch (c) {
    case SeriesChoice::g_series: return {{SeriesVariable::G, "G"}};
    case SeriesChoice::xi_series: return {{SeriesVariable::xi, "XI"}};
    case SeriesChoice::both: return {{SeriesVariable::G, "G"}, {SeriesVariable::xi, "XI"}};
  }
  return {};
}

unsigned needed_order(const SweepSpec& spec) {
  unsigned k = 0;
  for (const auto& o : spec.pade_orders) k = std::max(k, o.L + o.M);
  for (unsigned m : spec.partial_orders) k = std::max(k, m);
  return k;
}

void append_status(std::string& status, const std::string& tag) {
  if (!status.empty()) status += ';';
  status += tag;
}

// Pade value with the order-reduction retry for rank-deficient systems.
double pade_value(const SeriesCoefficients& s, PadeOrder o, double t, const std::string& col,
                  std::string& status) {
  for (unsigned M = o.M;; --M) {
    try {
      const double v = resum(s, o.L, M, t);
      if (M != o.M) append_status(status, fmt::format("singular:{}->[{}/{}]", col, o.L, M));
      return v;
    } catch (const SingularSystem&) {
      if (M == 0) break;
    } catch (const PoleNearEvaluation&) {
      append_status(status, "pole:" + col);
      return kNaN;
    } catch (const std::exception&) {
      append_status(status, "error:" + col);
      return kNaN;
    }
  }
  append_status(status, "singular:" + col);
  return kNaN;
}

}  // namespace

void SweepSpec::validate() const {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw std::invalid_argument("sweep range needs finite min < max");
  }
  if (steps < 2) throw std::invalid_argument("sweep range needs at least 2 steps");
  if (!std::isfinite(fixed.g) || !std::isfinite(fixed.G) || !std::isfinite(fixed.xi) ||
      !std::isfinite(fixed.x)) {
    throw std::invalid_argument("model parameters must be finite");
  }
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (pade_orders.empty() && partial_orders.empty()) {
    throw std::invalid_argument("sweep needs at least one Pade order or partial sum");
  }
  if (needed_order(*this) > 40) throw std::invalid_argument("series order above 40");
}

double SweepSpec::grid_point(unsigned i) const {
  if (i + 1 == steps) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

SweepVariable parse_sweep_variable(const std::string& s) {
  if (s == "G") return SweepVariable::G;
  if (s == "XI" || s == "xi") return SweepVariable::XI;
  if (s == "X" || s == "x") return SweepVariable::X;
  throw std::invalid_argument("unknown sweep variable '" + s + "' (G, XI or X)");
}

SeriesChoice parse_series_choice(const std::string& s) {
  if (s == "G" || s == "G_SERIES") return SeriesChoice::g_series;
  if (s == "XI" || s == "xi" || s == "XI_SERIES") return SeriesChoice::xi_series;
  if (s == "BOTH") return SeriesChoice::both;
  throw std::invalid_argument("unknown series choice '" + s + "' (G, XI or BOTH)");
}

void parse_range(const std::string& s, SweepSpec& spec) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw std::invalid_argument("range must be min:max:steps");
  spec.min = parse_number(parts[0]);
  spec.max = parse_number(parts[1]);
  spec.steps = parse_unsigned(parts[2]);
}

std::vector<PadeOrder> parse_pade_orders(const std::string& s) {
  std::vector<PadeOrder> orders;
  if (s.empty()) return orders;
  for (const auto& item : split(s, ',')) {
    const auto lm = split(item, '/');
    if (lm.size() != 2) throw std::invalid_argument("Pade order must look like L/M: '" + item + "'");
    orders.push_back({parse_unsigned(lm[0]), parse_unsigned(lm[1])});
  }
  return orders;
}

std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::G: return "G";
    case SweepVariable::XI: return "xi";
    case SweepVariable::X: return "x";
  }
  return "?";
}

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto series = chosen_series(spec.series);
  const unsigned order = needed_order(spec);

  SweepTable t;
  t.columns.push_back(to_string(spec.variable));
  t.columns.push_back("exact");
  for (const auto& [var, tag] : series) {
    for (unsigned m : spec.partial_orders) t.columns.push_back(fmt::format("partial_{}_{}", tag, m));
    for (const auto& o : spec.pade_orders) t.columns.push_back(fmt::format("pade_{}_{}_{}", tag, o.L, o.M));
  }

  for (unsigned i = 0; i < spec.steps; ++i) {
    const double v = spec.grid_point(i);
    const Point p = model_at(spec, v);
    std::vector<double> row{v};
    std::string status;
    try {
      row.push_back(exact_diag_quartic(p.g, p.G, p.xi, p.x, spec.eps));
    } catch (const std::exception&) {
      row.push_back(kNaN);
      append_status(status, "error:exact");
    }
    for (const auto& [var, tag] : series) {
      const std::size_t width = spec.partial_orders.size() + spec.pade_orders.size();
      SeriesCoefficients s;
      double t_eval = 0.0;
      try {
        if (var == SeriesVariable::G) {
          s = series_in_G(p.g, p.xi, p.x, order);
          t_eval = p.G;
        } else {
          s = series_in_xi(p.g, p.G, p.x, order);
          t_eval = p.xi;
        }
      } catch (const std::exception&) {
        append_status(status, "error:series_" + tag);
        row.insert(row.end(), width, kNaN);
        continue;
      }
      for (unsigned m : spec.partial_orders) row.push_back(s.partial_sum(t_eval, m));
      for (const auto& o : spec.pade_orders) {
        row.push_back(pade_value(s, o, t_eval, fmt::format("pade_{}_{}_{}", tag, o.L, o.M), status));
      }
    }
    t.values.push_back(std::move(row));
    t.status.push_back(status.empty() ? "ok" : status);
  }
  return t;
}

void write_sweep(std::ostream& os, const SweepTable& t, const std::string& format) {
  Table out;
  out.columns = t.columns;
  out.columns.push_back("status");
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    std::vector<Cell> row(t.values[r].begin(), t.values[r].end());
    row.emplace_back(t.status[r]);
    out.add(std::move(row));
  }
  write_table(os, out, format);
}

SweepTable read_sweep_csv(std::istream& is) {
  SweepTable t;
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty sweep file");
  auto header = split(line, ',');
  if (header.size() < 3 || header.back() != "status" || header[1] != "exact") {
    throw std::invalid_argument("not a sweep CSV header: " + line);
  }
  header.pop_back();
  t.columns = header;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (cells.size() != header.size() + 1) throw std::invalid_argument("ragged sweep row: " + line);
    std::vector<double> row;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      const auto& c = cells[i];
      if (c == "nan") {
        row.push_back(kNaN);
      } else if (c == "inf" || c == "-inf") {
        row.push_back(c[0] == '-' ? -HUGE_VAL : HUGE_VAL);
      } else {
        row.push_back(parse_number(c));
      }
    }
    t.values.push_back(std::move(row));
    t.status.push_back(cells.back());
  }
  return t;
}

SweepSummary summarize(const SweepTable& t) {
  SweepSummary out;
  for (std::size_t c = 2; c < t.columns.size(); ++c) {
    ColumnSummary cs;
    for (const auto& row : t.values) {
      const double exact = row[1];
      const double v = row[c];
      if (!std::isfinite(exact) || !std::isfinite(v)) {
        ++cs.failed_points;
        continue;
      }
      ++cs.finite_points;
      const double rel = exact != 0.0 ? std::abs(v - exact) / std::abs(exact) : std::abs(v);
      cs.max_rel_error = std::max(cs.max_rel_error, rel);
    }
    out[t.columns[c]] = cs;
  }
  return out;
}

void write_summary(std::ostream& os, const SweepSummary& s) {
  for (const auto& [col, cs] : s) {
    os << col << " max_rel_error=" << format_double(cs.max_rel_error) << " finite=" << cs.finite_points
       << " failed=" << cs.failed_points << '\n';
  }
}

}  // namespace dobinski::cli
