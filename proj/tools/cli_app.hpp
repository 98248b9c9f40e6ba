#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace susy::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailed = 1,
  kBadParameters = 2,
  kIndexOutOfRange = 3,
};

/// Output directory used when --out is absent.
inline constexpr const char* kOutputDirVariable = "SUSY_OUTPUT_DIR";

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Results go to `out` unless redirected to a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace susy::cli
