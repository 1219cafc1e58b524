#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tverberg::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
  kNoCertifiedPartition = 4,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace tverberg::cli
