#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shgauge::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Subcommands: verify, spectrum, curvature, conductivity,
/// iqhe, sweep.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shgauge::cli
