#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmdc::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsageOrInvalid = 1,  // usage, parse or validation failure
  kInfeasible = 2,
  kBudgetExceeded = 3,
};

/// Entry point for `mmdc solve|gen|bench|verify|oracle`. `args` excludes the
/// program name. Trace records go to `err`; everything else to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmdc::cli
