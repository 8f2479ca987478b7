#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace casimir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputationError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args excludes the program name. Results go to out
/// (or to --out FILE), diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Values are printed with 9 significant digits.
std::string format_number(double value);

}  // namespace casimir::cli
