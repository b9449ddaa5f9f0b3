#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hsc::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kViolated = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsageError = 3;

/// Runs one invocation (`args` excludes the program name) and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsc::cli
