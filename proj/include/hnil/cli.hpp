#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hnil {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,  ///< parse or validation failure
  kExitUsage = 2,
  kExitViolated = 3,  ///< theorem violated or internal invariant broken
};

/// Runs the `hnil` command line. `args` excludes the program name; a FILE
/// argument of "-" reads the model from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hnil
