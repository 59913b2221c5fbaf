#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmb::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kMathFailure = 2,
  kUsage = 64,
};

/// Runs the `pmb` command line. `args` excludes the program name. Reports go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmb::cli
