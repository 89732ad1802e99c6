#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plectic6 {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitUnsupported = 3,
};

// Runs one CLI invocation. `args` excludes the program name. The grid cap
// comes from PLECTIC6_GRID_CAP when set.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace plectic6
