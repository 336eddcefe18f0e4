#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quartic::cli {

enum ExitCode : int {
  kSuccess = 0,
  kViolation = 1,
  kInputError = 2,
  kDescentFailed = 3,
  kDistinct = 4,
  kUndecided = 5,
};

/// Runs one subcommand. `args` excludes the program name.
/// The JSON document goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace quartic::cli
