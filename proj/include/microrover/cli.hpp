#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace microrover {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name. Subcommands: table2, table4, gamma,
// sweep, feasibility, campaign, bodies, config.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace microrover
