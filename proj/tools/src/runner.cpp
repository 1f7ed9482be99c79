#include "shgauge_cli/runner.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "shgauge/conductivity.hpp"
#include "shgauge/eigensolver.hpp"
#include "shgauge/format.hpp"
#include "shgauge/gauge_fields.hpp"
#include "shgauge/hamiltonians.hpp"
#include "shgauge/spectra.hpp"
#include "shgauge_cli/config.hpp"
#include "shgauge_cli/sweep.hpp"
#include "shgauge_cli/verify.hpp"

namespace shgauge::cli {

namespace {

struct CommonFlags {
    std::optional<std::string> config;
    std::optional<std::string> output;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
};

std::string kebab(std::string key) {
    std::replace(key.begin(), key.end(), '_', '-');
    return key;
}

void add_common(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--config", flags.config, "key = value configuration file");
    sub->add_option("--output", flags.output, "output file (default: stdout)");
    for (const auto& key : config_keys()) {
        flags.options[key] = sub->add_option("--" + kebab(key), flags.values[key], "overrides " + key);
    }
}

RunConfig resolve(const CommonFlags& flags) {
    ConfigOverrides overrides;
    for (const auto& [key, opt] : flags.options) {
        if (opt->count() > 0) overrides[key] = flags.values.at(key);
    }
    std::optional<std::filesystem::path> path;
    if (flags.config) path = *flags.config;
    auto cfg = load_config(path, overrides);
    if (flags.output) cfg.output_path = *flags.output;
    return cfg;
}

// Writes through `emit` into the configured file, or into `out` when none.
template <class Emit>
void with_output(const RunConfig& cfg, std::ostream& out, Emit&& emit) {
    if (!cfg.output_path) {
        emit(out);
        return;
    }
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + cfg.output_path->string());
    emit(file);
    file.flush();
    if (!file) throw std::runtime_error("failed writing output file: " + cfg.output_path->string());
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto checks = run_verify(cfg);
    bool ok = false;
    with_output(cfg, out, [&](std::ostream& o) { ok = report_verify(checks, cfg.seed, o); });
    if (cfg.output_path) out << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
    return ok ? kExitSuccess : kExitVerifyFailed;
}

int cmd_spectrum(const RunConfig& cfg, std::optional<double> p_max, int points, std::ostream& out) {
    if (points < 2) throw std::invalid_argument("spectrum: --points must be >= 2");
    const auto& p = cfg.params;
    const double top = p_max.value_or(3.0 * std::abs(p.delta_so) / p.v_f + (p.delta_so == 0.0 ? 3.0 : 0.0));
    if (!(top > 0.0)) throw std::invalid_argument("spectrum: --p-max must be positive");
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < points; ++i) {
        const MomentumPoint mom{top * i / (points - 1), 0.0};
        const auto bands = dispersion(mom, p);
        std::vector<double> row{mom.px, bands.plus, bands.minus};
        const auto eig = hermitian_eigenvalues(build_km_hamiltonian(p, mom));
        row.insert(row.end(), eig.begin(), eig.end());
        rows.push_back(std::move(row));
    }
    with_output(cfg, out, [&](std::ostream& o) {
        o << "p,E_plus,E_minus";
        for (int i = 1; i <= 8; ++i) o << ",eig_" << i;
        o << '\n';
        for (const auto& row : rows) {
            for (std::size_t j = 0; j < row.size(); ++j) o << (j ? "," : "") << format_decimal(row[j]);
            o << '\n';
        }
    });
    return kExitSuccess;
}

int cmd_curvature(const RunConfig& cfg, std::optional<double> half_width, int points,
                  const std::string& method, std::ostream& out) {
    PhysParams p = cfg.params;
    require_positive_gap(p, "curvature");
    require_spin_conserving(p, "curvature");
    const MomentumGrid grid{half_width.value_or(5.0 * p.delta_so / p.v_f), points};
    if (!(grid.half_width > 0.0)) throw std::invalid_argument("curvature: --half-width must be positive");

    std::vector<CurvatureSample> samples;
    std::optional<PerBlock<double>> integrated;
    if (method == "plaquette") {
        auto lattice = plaquette_curvature(grid, p);
        samples = std::move(lattice.samples);
        integrated = lattice.integrated;
    } else if (method == "analytic") {
        samples = analytic_curvature_grid(grid, p);
    } else {
        throw std::invalid_argument("curvature: --method must be analytic or plaquette");
    }
    with_output(cfg, out, [&](std::ostream& o) { write_curvature_csv(samples, o); });
    if (cfg.output_path && integrated) {
        for (auto label : kAllBlocks) {
            out << "integrated " << label.name() << " = " << format_decimal((*integrated)[label.index()])
                << '\n';
        }
    }
    return kExitSuccess;
}

int cmd_conductivity(const RunConfig& cfg, double ef_over_delta, std::ostream& out) {
    const auto& p = cfg.params;
    require_positive_gap(p, "conductivity");
    const auto report = compare_methods(ef_over_delta * p.delta_so, p, cfg.quad);
    std::vector<SweepRow> rows;
    for (const auto& r : report.results) {
        rows.push_back({report.fermi_over_delta, r.method, report.fermi_over_delta, r.total, r.per_block,
                        r.quadrature_error});
    }
    with_output(cfg, out, [&](std::ostream& o) { write_sweep_csv(rows, SweepVariable::kFermiEnergy, o); });
    for (const auto& d : report.differences) {
        out << "# " << method_name(d.a) << " vs " << method_name(d.b)
            << ": relative difference " << format_decimal(d.relative) << '\n';
    }
    if (!report.force_balance_applicable) out << "# force_balance: not applicable (E_F != delta_so)\n";
    return kExitSuccess;
}

int cmd_iqhe(const RunConfig& cfg, int n_max, std::ostream& out) {
    if (n_max < 1) throw std::invalid_argument("iqhe: --n-max must be >= 1");
    PhysParams p = cfg.params;
    if (p.b_field == 0.0) p.b_field = 1.0;
    with_output(cfg, out, [&](std::ostream& o) {
        o << "N,b_field,omega_c,E_F,kappa,sigma_e2_over_h\n";
        for (int n = 1; n <= n_max; ++n) {
            const auto ladder = landau_ladder(p, n);
            const auto sigma = sigma_iqhe(n, p);
            o << n << ',' << format_decimal(p.b_field) << ',' << format_decimal(ladder.omega_c) << ','
              << format_decimal(ladder.fermi_energy) << ',' << format_decimal(ladder.kappa) << ','
              << format_decimal(sigma.total) << '\n';
        }
    });
    return kExitSuccess;
}

int cmd_sweep(const RunConfig& cfg, const SweepSpec& sweep, double ef_over_delta, std::ostream& out) {
    if (sweep.variable == SweepVariable::kLambdaR) {
        throw std::invalid_argument(
            "sweep: lambda_R sweeps are not supported; the conductivity engines require lambda_r = 0");
    }
    const auto rows = run_sweep(sweep, cfg, ef_over_delta);
    with_output(cfg, out, [&](std::ostream& o) { write_sweep_csv(rows, sweep.variable, o); });
    return kExitSuccess;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spin Hall conductivity of gapped graphene: gauge-field, Berry and Kubo routes"};
    app.name("shgauge");
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    auto* spectrum = app.add_subcommand("spectrum", "dispersion table along p_x");
    auto* curvature = app.add_subcommand("curvature", "Berry curvature CSV over a momentum grid");
    auto* conductivity = app.add_subcommand("conductivity", "compare methods at one Fermi level");
    auto* iqhe = app.add_subcommand("iqhe", "Landau ladder and Hall conductivity table");
    auto* sweep = app.add_subcommand("sweep", "conductivity sweep as CSV");
    const std::array<CLI::App*, 6> subs{verify, spectrum, curvature, conductivity, iqhe, sweep};
    std::array<CommonFlags, 6> flags;
    for (std::size_t i = 0; i < subs.size(); ++i) add_common(subs[i], flags[i]);

    std::optional<double> p_max;
    int spectrum_points = 13;
    spectrum->add_option("--p-max", p_max, "largest |p| (default 3 delta_so / v_f)");
    spectrum->add_option("--points", spectrum_points, "number of momenta");

    std::optional<double> half_width;
    int grid_points = 64;
    std::string curvature_method = "plaquette";
    curvature->add_option("--half-width", half_width, "grid half width (default 5 delta_so / v_f)");
    curvature->add_option("--points", grid_points, "points per side");
    curvature->add_option("--method", curvature_method, "analytic or plaquette");

    double ef_over_delta = 1.0;
    conductivity->add_option("--ef-over-delta", ef_over_delta, "Fermi energy in units of delta_so");

    int n_max = 10;
    iqhe->add_option("--n-max", n_max, "largest filling index");

    std::string variable;
    SweepSpec spec;
    double sweep_ef = 1.0;
    sweep->add_option("--variable", variable, "E_F, delta_so or lambda_R")->required();
    sweep->add_option("--start", spec.start, "first value")->required();
    sweep->add_option("--stop", spec.stop, "last value")->required();
    sweep->add_option("--steps", spec.steps, "number of points (>= 2)")->required();
    sweep->add_option("--ef-over-delta", sweep_ef, "Fermi energy in units of delta_so for delta_so sweeps");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        const auto active = std::find_if(subs.begin(), subs.end(), [](CLI::App* a) { return a->parsed(); });
        const auto cfg = resolve(flags[static_cast<std::size_t>(active - subs.begin())]);
        if (*verify) return cmd_verify(cfg, out);
        if (*spectrum) return cmd_spectrum(cfg, p_max, spectrum_points, out);
        if (*curvature) return cmd_curvature(cfg, half_width, grid_points, curvature_method, out);
        if (*conductivity) return cmd_conductivity(cfg, ef_over_delta, out);
        if (*iqhe) return cmd_iqhe(cfg, n_max, out);
        if (*sweep) {
            const auto v = parse_sweep_variable(variable);
            if (!v) throw std::invalid_argument("sweep: unknown variable '" + variable + "'");
            spec.variable = *v;
            spec.validate();
            return cmd_sweep(cfg, spec, sweep_ef, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace shgauge::cli
