#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpld::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSolver = 3;

/// Parses args (without the program name), validates them and runs one
/// subcommand: eig, curve, jab, minjab, const, sweep or oracle.
/// Returns 0 on success, 2 on a usage/validation error and 3 on a solver error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cpld::cli
