#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycss::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// Runs one invocation; `args` excludes the program name. Primary output goes to `out`,
// diagnostics and the derived seed to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycss::cli
