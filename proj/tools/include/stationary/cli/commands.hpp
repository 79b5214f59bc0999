#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stationary::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 2,
  kReducible = 3,
  kSolverFailure = 4,
  kIoOrParseError = 5,
};

/// Environment variable overriding the default simulation seed.
inline constexpr const char* kSeedEnvVar = "STATIONARY_SEED";

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` as one JSON object per line, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stationary::cli
