#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace maplab::cli {

/// Exit codes: 0 success, 1 bound violation, 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Reports and
/// traces go to `out` unless --out names a file; diagnostics and the verify
/// summary go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maplab::cli
