#pragma once

// Which subcommand invocation reaches which library operation. The coverage
// test runs every entry and checks that the union covers library_operations().

#include <string>
#include <vector>

namespace dobinski::cli {

struct RegistryEntry {
  std::vector<std::string> args;
  std::vector<std::string> operations;
};

const std::vector<std::string>& library_operations();
const std::vector<RegistryEntry>& command_registry();

}  // namespace dobinski::cli
