#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fractalis::cli {

enum ExitCode : int {
  ok = 0,
  input_error = 2,
  numeric_failure = 3,
  precondition_failure = 4,
  usage_error = 64,
};

/// Runs one invocation. `args` excludes the program name. The JSON report
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace fractalis::cli
