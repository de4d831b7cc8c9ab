#include "cli/output.hpp"

#include <fmt/format.h>

#include <cmath>
#include <nlohmann/json.hpp>

namespace dobinski::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

namespace {

std::string render(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  return format_double(std::get<double>(cell));
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      if (const auto* s = std::get_if<std::string>(&row[i])) {
        obj[table.columns[i]] = *s;
      } else {
        const double v = std::get<double>(row[i]);
        // JSON has no NaN/inf; keep the CSV spelling as a string.
        if (std::isfinite(v)) {
          obj[table.columns[i]] = v;
        } else {
          obj[table.columns[i]] = format_double(v);
        }
      }
    }
    rows.push_back(std::move(obj));
  }
  os << rows.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& table, const std::string& format) {
  if (format == "json") {
    write_json(os, table);
  } else {
    write_csv(os, table);
  }
}

}  // namespace dobinski::cli
