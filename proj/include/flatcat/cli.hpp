#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flatcat {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitUsageError = 2,
  kExitVerificationFailure = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to `out`,
/// diagnostics and help for bad invocations to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatcat
