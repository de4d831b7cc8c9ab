#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace dobinski::cli {

/// Fixed 17-significant-digit rendering; "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double v);

using Cell = std::variant<std::string, double>;

/// Column-oriented result written as CSV (header row) or JSON (array of
/// objects with the same keys).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table);
void write_table(std::ostream& os, const Table& table, const std::string& format);

}  // namespace dobinski::cli
