#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shgauge_cli/config.hpp"

namespace shgauge::cli {

struct VerifyCheck {
    std::string name;
    bool passed;
    std::string detail;
};

/// Runs the invariant suite against the configured parameters. Random draws
/// come from a generator seeded with cfg.seed. Checks that need λ_R = B = 0
/// run on a copy of the parameters with both set to zero.
[[nodiscard]] std::vector<VerifyCheck> run_verify(const RunConfig& cfg);

/// `# seed = ...` header, one `PASS name: detail` / `FAIL name: detail` line per
/// check and a summary line. Returns true iff every check passed.
bool report_verify(const std::vector<VerifyCheck>& checks, std::uint64_t seed, std::ostream& out);

}  // namespace shgauge::cli
