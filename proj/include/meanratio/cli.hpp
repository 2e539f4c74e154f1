#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace meanratio::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInfeasible = 2,
  kUsage = 64,
  kOutputError = 73,
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace meanratio::cli
