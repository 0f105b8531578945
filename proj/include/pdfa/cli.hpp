#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdfa::cli {

// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kViolation = 3;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdfa::cli
