#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypertrees {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitUsage = 2,
  kExitSelftestFailed = 3,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace hypertrees
