#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opbianchi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line given without the program name. Output goes to out
/// (or to --out FILE), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opbianchi::cli
