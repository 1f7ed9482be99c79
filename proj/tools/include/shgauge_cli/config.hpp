#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "shgauge/conductivity.hpp"
#include "shgauge/params.hpp"

namespace shgauge::cli {

enum class SweepVariable { kFermiEnergy, kDeltaSo, kLambdaR };

/// Column name used for the swept value: E_F (in units of Δ), delta_so, lambda_R.
[[nodiscard]] std::string_view sweep_variable_name(SweepVariable v) noexcept;
[[nodiscard]] std::optional<SweepVariable> parse_sweep_variable(std::string_view name) noexcept;

struct SweepSpec {
    SweepVariable variable = SweepVariable::kFermiEnergy;
    double start = 1.0;
    double stop = 2.0;
    int steps = 2;

    /// Throws std::invalid_argument unless steps ≥ 2 and start < stop.
    void validate() const;
    [[nodiscard]] double value(int i) const noexcept;
};

struct RunConfig {
    PhysParams params;
    QuadratureSpec quad;
    std::optional<SweepSpec> sweep;
    std::optional<std::filesystem::path> output_path;
    std::uint64_t seed = 20240917;
    double fd_step = 1e-5;  ///< relative finite-difference step for verify
};

enum class ConfigErrorKind { kMissingFile, kMalformedLine, kUnknownKey, kNonNumeric, kInvalidValue };

class ConfigError : public std::runtime_error {
public:
    ConfigError(ConfigErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ConfigErrorKind kind() const noexcept { return kind_; }

private:
    ConfigErrorKind kind_;
};

/// Raw `key -> text` overrides, applied after the file.
using ConfigOverrides = std::map<std::string, std::string>;

/// The recognised keys, in file order.
[[nodiscard]] const std::vector<std::string>& config_keys();

/// Parses `key = value` lines with `#` comments. A missing path means defaults.
/// Overrides use the same keys and take precedence over file values.
[[nodiscard]] RunConfig load_config(const std::optional<std::filesystem::path>& path,
                                    const ConfigOverrides& overrides = {});

/// Same as load_config but from in-memory text; `origin` names the source in
/// diagnostics.
[[nodiscard]] RunConfig parse_config(std::string_view text, std::string_view origin,
                                     const ConfigOverrides& overrides = {});

}  // namespace shgauge::cli
