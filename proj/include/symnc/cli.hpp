#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symnc {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainFailure = 1,  ///< condition unsatisfied, verification failed, bad input file
  kExitUsage = 2,
  kExitInternal = 3,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symnc
