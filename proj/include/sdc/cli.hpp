#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdc {

/// Exit codes of the sdcodes tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the sdcodes command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdc
