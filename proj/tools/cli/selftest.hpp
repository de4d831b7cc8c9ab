#pragma once

// Cross-module consistency checks run by `dobinski selftest`.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/sweep.hpp"

namespace dobinski::cli {

struct SelftestCheck {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string detail;

  bool passed() const { return max_residual <= tolerance; }
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  /// Negative control: perturbs one Pade input coefficient before the
  /// re-expansion comparison, so that check must fail.
  bool inject_fault = false;
  /// CSV written earlier by `sweep`; its summary is compared with a fresh run
  /// of `sweep_spec`.
  std::optional<std::string> ingest_path;
  SweepSpec sweep_spec;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool passed() const;
};

SelftestReport run_selftest(const SelftestOptions& opt);
void print_report(std::ostream& os, const SelftestReport& r);

}  // namespace dobinski::cli
