#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace leapcycles::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNegative = 2;

/// Runs the command line. args[0] is the program name. Exit codes: 0 success,
/// 1 usage or input error, 2 negative mathematical result (infeasible, no
/// cycle, invalid cycle).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace leapcycles::cli
