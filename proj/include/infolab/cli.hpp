#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infolab {

/// Exit codes of the `lab` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,          // I/O and other unexpected failures
  kExitParse = 2,          // bad command line or scenario file
  kExitNumeric = 3,        // domain or solver error
  kExitCertification = 4,  // a certification found counterexamples
};

/// lab solve|sweep|simulate|certify <scenario.json> [--out DIR] [--seed N]
///     [--n-samples N] [--tol X]
///
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infolab
