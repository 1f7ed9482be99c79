#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "shgauge/conductivity.hpp"
#include "shgauge_cli/config.hpp"

namespace shgauge::cli {

struct SweepRow {
    double variable_value;
    Method method;
    double ef_over_delta;
    double sigma_total;
    std::optional<PerBlock<double>> blocks;
    double quad_error;
};

/// Sweep header for the given variable, without the trailing newline.
[[nodiscard]] std::string sweep_csv_header(SweepVariable variable);

/// Rows for one point: berry, kubo and, at E_F = Δ, force_balance.
[[nodiscard]] std::vector<SweepRow> conductivity_rows(double variable_value, double ef_over_delta,
                                                      const PhysParams& params,
                                                      const QuadratureSpec& quad);

/// Evaluates every sweep point concurrently; rows come back in point order.
/// For delta_so and lambda_R sweeps E_F is held at ef_over_delta·Δ.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepSpec& sweep, const RunConfig& cfg,
                                              double ef_over_delta = 1.0);

/// Writes the header and one line per row; throws std::invalid_argument for
/// an empty row set.
void write_sweep_csv(std::span<const SweepRow> rows, SweepVariable variable, std::ostream& out);

/// File version; throws std::runtime_error if the path cannot be written.
void write_sweep_csv(std::span<const SweepRow> rows, SweepVariable variable,
                     const std::filesystem::path& path);

}  // namespace shgauge::cli
