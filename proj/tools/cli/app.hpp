#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dobinski::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dobinski::cli
