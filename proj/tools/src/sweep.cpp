#include "shgauge_cli/sweep.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "shgauge/format.hpp"
#include "shgauge/parallel.hpp"

namespace shgauge::cli {

std::string sweep_csv_header(SweepVariable variable) {
    return std::string(sweep_variable_name(variable)) +
           ",method,E_F_over_delta,sigma_total,sigma_block_up_K,sigma_block_up_Kp,"
           "sigma_block_down_K,sigma_block_down_Kp,quad_error";
}

std::vector<SweepRow> conductivity_rows(double variable_value, double ef_over_delta,
                                        const PhysParams& params, const QuadratureSpec& quad) {
    const auto report = compare_methods(ef_over_delta * params.delta_so, params, quad);
    std::vector<SweepRow> rows;
    for (const auto& r : report.results) {
        rows.push_back({variable_value, r.method, report.fermi_over_delta, r.total, r.per_block,
                        r.quadrature_error});
    }
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& sweep, const RunConfig& cfg, double ef_over_delta) {
    sweep.validate();
    const auto n = static_cast<std::size_t>(sweep.steps);
    std::vector<std::vector<SweepRow>> slots(n);
    parallel_for(n, [&](std::size_t i) {
        const double value = sweep.value(static_cast<int>(i));
        PhysParams params = cfg.params;
        double ef = ef_over_delta;
        switch (sweep.variable) {
            case SweepVariable::kFermiEnergy: ef = value; break;
            case SweepVariable::kDeltaSo: params.delta_so = value; break;
            case SweepVariable::kLambdaR: params.lambda_r = value; break;
        }
        slots[i] = conductivity_rows(value, ef, params, cfg.quad);
    });

    std::vector<SweepRow> rows;
    for (auto& s : slots) rows.insert(rows.end(), s.begin(), s.end());
    return rows;
}

void write_sweep_csv(std::span<const SweepRow> rows, SweepVariable variable, std::ostream& out) {
    if (rows.empty()) throw std::invalid_argument("write_sweep_csv: no rows");
    out << sweep_csv_header(variable) << '\n';
    for (const auto& r : rows) {
        out << format_decimal(r.variable_value) << ',' << method_name(r.method) << ','
            << format_decimal(r.ef_over_delta) << ',' << format_decimal(r.sigma_total);
        for (std::size_t b = 0; b < 4; ++b) {
            out << ',';
            if (r.blocks) out << format_decimal((*r.blocks)[b]);
        }
        out << ',' << format_decimal(r.quad_error) << '\n';
    }
}

void write_sweep_csv(std::span<const SweepRow> rows, SweepVariable variable,
                     const std::filesystem::path& path) {
    if (rows.empty()) throw std::invalid_argument("write_sweep_csv: no rows");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    write_sweep_csv(rows, variable, out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing output file: " + path.string());
}

}  // namespace shgauge::cli
