#include "shgauge_cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace shgauge::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view text, const std::string& where) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError(ConfigErrorKind::kNonNumeric,
                          where + ": value for '" + std::string(key) + "' is not a number: '" +
                              std::string(text) + "'");
    }
    if (!std::isfinite(value)) {
        throw ConfigError(ConfigErrorKind::kInvalidValue,
                          where + ": value for '" + std::string(key) + "' is not finite");
    }
    return value;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text, const std::string& where) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError(ConfigErrorKind::kNonNumeric,
                          where + ": value for '" + std::string(key) +
                              "' is not a non-negative integer: '" + std::string(text) + "'");
    }
    return value;
}

void assign(RunConfig& cfg, std::string_view key, std::string_view text, const std::string& where) {
    auto num = [&] { return parse_number(key, text, where); };
    if (key == "v_f") cfg.params.v_f = num();
    else if (key == "delta_so") cfg.params.delta_so = num();
    else if (key == "lambda_r") cfg.params.lambda_r = num();
    else if (key == "b_field") cfg.params.b_field = num();
    else if (key == "hbar") cfg.params.hbar = num();
    else if (key == "e_charge") cfg.params.e_charge = num();
    else if (key == "mass") cfg.params.mass = num();
    else if (key == "c_light") cfg.params.c_light = num();
    else if (key == "e_cut_factor") cfg.quad.e_cut_factor = num();
    else if (key == "rel_tol") cfg.quad.rel_tol = num();
    else if (key == "grid_n") {
        const auto n = parse_unsigned(key, text, where);
        if (n > 1u << 16) {
            throw ConfigError(ConfigErrorKind::kInvalidValue, where + ": grid_n is too large");
        }
        cfg.quad.grid_n = static_cast<int>(n);
    } else if (key == "fd_step") cfg.fd_step = num();
    else if (key == "seed") cfg.seed = parse_unsigned(key, text, where);
    else {
        throw ConfigError(ConfigErrorKind::kUnknownKey, where + ": unknown key '" + std::string(key) + "'");
    }
}

void validate(const RunConfig& cfg, std::string_view origin) {
    try {
        cfg.params.validate();
        cfg.quad.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(ConfigErrorKind::kInvalidValue, std::string(origin) + ": " + e.what());
    }
    if (!(cfg.fd_step > 0.0 && cfg.fd_step < 1e-1)) {
        throw ConfigError(ConfigErrorKind::kInvalidValue,
                          std::string(origin) + ": fd_step must lie in (0, 0.1)");
    }
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{"v_f",     "delta_so", "lambda_r",     "b_field",
                                               "hbar",    "e_charge", "mass",         "c_light",
                                               "e_cut_factor", "rel_tol", "grid_n", "fd_step",
                                               "seed"};
    return keys;
}

std::string_view sweep_variable_name(SweepVariable v) noexcept {
    switch (v) {
        case SweepVariable::kFermiEnergy: return "E_F";
        case SweepVariable::kDeltaSo: return "delta_so";
        case SweepVariable::kLambdaR: return "lambda_R";
    }
    return "unknown";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) noexcept {
    for (auto v : {SweepVariable::kFermiEnergy, SweepVariable::kDeltaSo, SweepVariable::kLambdaR}) {
        if (name == sweep_variable_name(v)) return v;
    }
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!(std::isfinite(start) && std::isfinite(stop) && start < stop)) {
        throw std::invalid_argument("sweep: requires start < stop");
    }
}

double SweepSpec::value(int i) const noexcept {
    if (i == steps - 1) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

RunConfig parse_config(std::string_view text, std::string_view origin, const ConfigOverrides& overrides) {
    RunConfig cfg;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        auto line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = std::string(origin) + ":" + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(ConfigErrorKind::kMalformedLine,
                              where + ": expected 'key = value', got '" + std::string(line) + "'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(ConfigErrorKind::kMalformedLine, where + ": missing key before '='");
        }
        assign(cfg, key, value, where);
    }
    for (const auto& [key, value] : overrides) assign(cfg, key, trim(value), "flag --" + key);
    validate(cfg, origin);
    return cfg;
}

RunConfig load_config(const std::optional<std::filesystem::path>& path, const ConfigOverrides& overrides) {
    if (!path) return parse_config({}, "defaults", overrides);
    std::ifstream in(*path);
    if (!in) {
        throw ConfigError(ConfigErrorKind::kMissingFile,
                          "config file not found or unreadable: " + path->string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path->string(), overrides);
}

}  // namespace shgauge::cli
