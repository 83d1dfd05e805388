#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace setsys::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kAnomaly = 3,
  kBudget = 4,
};

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace setsys::cli
