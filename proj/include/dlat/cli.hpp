#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dlat {

// Exit codes for run_cli.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_domain = 2;
inline constexpr int exit_verification = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlat
