#include "shgauge_cli/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "shgauge/conductivity.hpp"
#include "shgauge/eigensolver.hpp"
#include "shgauge/gauge_fields.hpp"
#include "shgauge/hamiltonians.hpp"
#include "shgauge/spectra.hpp"

namespace shgauge::cli {

namespace {

using namespace std::complex_literals;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string bound(double value, double tol) { return sci(value) + " (tol " + sci(tol) + ")"; }

VerifyCheck check(std::string name, double value, double tol, std::string what = "max deviation") {
    const bool ok = std::isfinite(value) && value <= tol;
    return {std::move(name), ok, what + " " + bound(value, tol)};
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    MomentumPoint momentum(double radius) {
        const double r = radius * std::sqrt(uniform(0.0, 1.0));
        const double phi = uniform(0.0, 2.0 * std::numbers::pi);
        return {r * std::cos(phi), r * std::sin(phi)};
    }

private:
    std::mt19937_64 rng_;
};

PhysParams spin_conserving(PhysParams p) {
    p.lambda_r = 0.0;
    p.b_field = 0.0;
    return p;
}

double momentum_scale(const PhysParams& p) { return p.delta_so / p.v_f; }

VerifyCheck pauli_algebra() {
    double worst = 0.0;
    const auto id = ops::identity8();
    for (auto space : {Space::kSigma, Space::kSpin}) {
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                const auto pa = pauli_operator({space, static_cast<Axis>(a)});
                const auto pb = pauli_operator({space, static_cast<Axis>(b)});
                auto expected = (a == b ? 1.0 : 0.0) * id;
                if (a != b) {
                    const int c = 3 - a - b;
                    const double eps = ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
                    expected = (1i * eps) * pauli_operator({space, static_cast<Axis>(c)});
                }
                worst = std::max(worst, max_abs_diff(pa * pb, expected));
            }
        }
    }
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const auto sa = ops::sigma(static_cast<Axis>(a));
            const auto sb = ops::spin(static_cast<Axis>(b));
            worst = std::max(worst, commutator(sa, sb).max_abs());
            worst = std::max(worst, commutator(sb, ops::tau_z()).max_abs());
        }
    }
    return check("pauli_algebra", worst, 1e-15);
}

VerifyCheck hamiltonian_blocks(const PhysParams& p, Sampler& rng) {
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const auto mom = rng.momentum(3.0 * momentum_scale(p));
        std::vector<OperatorMatrix> blocks;
        for (auto label : kAllBlocks) blocks.push_back(block_hamiltonian(label, mom, p));
        worst = std::max(worst, max_abs_diff(build_km_hamiltonian(p, mom), block_diagonal(blocks)));
    }
    return check("hamiltonian_block_structure", worst, 1e-12);
}

VerifyCheck hamiltonian_hermitian(const PhysParams& full, Sampler& rng) {
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const auto mom = rng.momentum(3.0 * momentum_scale(full));
        const auto h = build_km_hamiltonian(full, mom, MagneticTerm::kExcluded);
        worst = std::max(worst, max_abs_diff(h, h.adjoint()));
    }
    return check("hamiltonian_hermitian", worst, 1e-12);
}

VerifyCheck dispersion_check(const PhysParams& p, Sampler& rng) {
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const auto mom = rng.momentum(3.0 * momentum_scale(p));
        const auto eig = hermitian_eigenvalues(build_km_hamiltonian(p, mom));
        const auto bands = dispersion(mom, p);
        for (std::size_t i = 0; i < 8; ++i) {
            const double expected = i < 4 ? bands.minus : bands.plus;
            worst = std::max(worst, std::abs(eig[i] - expected) / bands.plus);
        }
    }
    return check("dispersion_eigenvalues", worst, 1e-12, "max relative deviation");
}

VerifyCheck eigenspinor_check(const PhysParams& p, Sampler& rng) {
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const auto mom = rng.momentum(3.0 * momentum_scale(p));
        const WaveVector k{mom.px / p.hbar, mom.py / p.hbar};
        const double e = band_energy(mom, p);
        for (auto label : kAllBlocks) {
            const auto sp = block_eigenspinors(label, k, p);
            const auto h = block_hamiltonian(label, mom, p);
            auto apply = [&](const Spinor& v) {
                return Spinor{h(0, 0) * v[0] + h(0, 1) * v[1], h(1, 0) * v[0] + h(1, 1) * v[1]};
            };
            const auto hp = apply(sp.particle);
            const auto ha = apply(sp.antiparticle);
            for (int i = 0; i < 2; ++i) {
                worst = std::max(worst, std::abs(hp[i] - e * sp.particle[i]) / e);
                worst = std::max(worst, std::abs(ha[i] + e * sp.antiparticle[i]) / e);
            }
            const Complex pp = std::norm(sp.particle[0]) + std::norm(sp.particle[1]);
            const Complex aa = std::norm(sp.antiparticle[0]) + std::norm(sp.antiparticle[1]);
            const Complex pa = std::conj(sp.particle[0]) * sp.antiparticle[0] +
                               std::conj(sp.particle[1]) * sp.antiparticle[1];
            worst = std::max({worst, std::abs(pp - 1.0), std::abs(aa - 1.0), std::abs(pa)});
        }
    }
    return check("eigenspinor_residuals", worst, 1e-12);
}

VerifyCheck concentration_check(const PhysParams& p) {
    const CarrierDensities dens{1.25, 0.5};
    const std::array<OperatorMatrix, 4> expected{
        OperatorMatrix::diagonal({dens.n_p, dens.n_a}), OperatorMatrix::diagonal({dens.n_a, dens.n_p}),
        OperatorMatrix::diagonal({dens.n_a, dens.n_p}), OperatorMatrix::diagonal({dens.n_p, dens.n_a})};
    double worst = 0.0;
    for (auto label : kAllBlocks) {
        worst = std::max(worst, max_abs_diff(concentration_matrix(label, dens, p), expected[label.index()]));
    }
    return check("concentration_matrices", worst, 0.0);
}

VerifyCheck fw_check(const PhysParams& p, Sampler& rng) {
    double worst = max_abs_diff(fw_unitary({0.0, 0.0}, p), OperatorMatrix::identity(8));
    const auto chiral = ops::sigma(Axis::kZ) * ops::tau_z() * ops::spin(Axis::kZ);
    for (int n = 0; n < 50; ++n) {
        const auto mom = rng.momentum(3.0 * momentum_scale(p));
        const auto u = fw_unitary(mom, p);
        const double e = band_energy(mom, p);
        worst = std::max(worst, max_abs_diff(u * u.adjoint(), OperatorMatrix::identity(8)));
        const auto d = u * build_km_hamiltonian(p, mom) * u.adjoint();
        worst = std::max(worst, max_abs_diff(d, e * chiral) / e);
    }
    return check("fw_identities", worst, 1e-12);
}

VerifyCheck pure_gauge_check(const PhysParams& p, double fd_step, Sampler& rng) {
    const MomentumGaugeField field = [&](MomentumPoint q) { return fw_gauge_field(q, p); };
    const double unit = p.hbar * p.v_f * p.v_f / (p.delta_so * p.delta_so);
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const auto mom = rng.momentum(3.0 * momentum_scale(p));
        const double h = default_fd_step(mom, p, fd_step);
        worst = std::max(worst, momentum_curvature_residual(field, mom, h, p.hbar).max_abs() / unit);
    }
    return check("pure_gauge_residual", worst, 1e-8, "max scaled residual");
}

VerifyCheck fw_gauge_consistency(const PhysParams& p, double fd_step, Sampler& rng) {
    double worst = 0.0;
    const double unit = p.hbar / momentum_scale(p);
    for (int n = 0; n < 20; ++n) {
        const auto mom = rng.momentum(3.0 * momentum_scale(p));
        const auto a = fw_gauge_field(mom, p, FwMethod::kAnalytic);
        const auto d = fw_gauge_field(mom, p, FwMethod::kDifferential, default_fd_step(mom, p, fd_step));
        for (int i = 0; i < 2; ++i) worst = std::max(worst, max_abs_diff(a[i], d[i]) / unit);
    }
    return check("fw_gauge_field_analytic_vs_differential", worst, 1e-7);
}

VerifyCheck field_strength_check(const PhysParams& full) {
    const auto f = field_strength(km_gauge_field(full), full);
    const auto closed = field_strength_closed_form(full);
    return check("field_strength_identity", max_abs_diff(f, closed), 1e-12);
}

VerifyCheck gauge_reconstruction(const PhysParams& full, Sampler& rng) {
    const auto field = km_gauge_field(full);
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const auto mom = rng.momentum(3.0 * momentum_scale(full));
        const double x = rng.uniform(-2.0, 2.0);
        const double y = rng.uniform(-2.0, 2.0);
        const auto h = kinematic_hamiltonian(field, full, mom, x, y);
        worst = std::max(worst, max_abs_diff(h, h.adjoint()));
        if (full.b_field == 0.0) {
            worst = std::max(worst, max_abs_diff(h, build_km_hamiltonian(full, mom)));
        }
    }
    return check("gauge_hamiltonian_reconstruction", worst, 1e-12);
}

VerifyCheck zero_momentum_check(const PhysParams& p) {
    const auto r = zero_momentum_limit_check(p);
    return check("zero_momentum_limit", std::max(r.x.max_abs(), r.y.max_abs()), 1e-12);
}

VerifyCheck curvature_fd_check(const PhysParams& p, double fd_step, Sampler& rng) {
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const auto mom = rng.momentum(3.0 * momentum_scale(p));
        const auto exact = berry_curvature(mom, p, CurvatureMethod::kAnalytic);
        const auto fd = berry_curvature(mom, p, CurvatureMethod::kCurlFd, default_fd_step(mom, p, fd_step));
        for (std::size_t b = 0; b < 4; ++b) worst = std::max(worst, std::abs(fd[b] - exact[b]) / std::abs(exact[b]));
    }
    return check("curvature_curl_fd", worst, 1e-6, "max relative deviation");
}

VerifyCheck curvature_plaquette_check(const PhysParams& p) {
    const double half = 5.0 * momentum_scale(p);
    const auto lattice = plaquette_curvature({half, 256}, p);
    // Square integral of (q² + Δ²)^{-3/2} over [−a, a]², q = v_F p.
    const double a = p.v_f * half;
    const double d = p.delta_so;
    const double square = 4.0 / d * std::atan(a * a / (d * std::sqrt(2.0 * a * a + d * d)));
    double worst = 0.0;
    for (auto label : kAllBlocks) {
        const double expected = -label.spin_sign() * 0.5 * p.hbar * p.hbar * d * square;
        worst = std::max(worst, std::abs(lattice.integrated[label.index()] - expected) / std::abs(expected));
    }
    return check("curvature_plaquette_256", worst, 1e-3, "max relative deviation");
}

VerifyCheck kubo_berry_check(const PhysParams& p, Sampler& rng) {
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
        const auto mom = rng.momentum(5.0 * momentum_scale(p));
        const WaveVector k{mom.px / p.hbar, mom.py / p.hbar};
        for (auto label : kAllBlocks) {
            const double kubo = kubo_density(label, k, p);
            const double berry = p.hbar * p.hbar * berry_density(label, mom, p);
            worst = std::max(worst, std::abs(kubo - berry) / std::abs(berry));
        }
    }
    return check("kubo_berry_pointwise", worst, 1e-10, "max relative deviation");
}

VerifyCheck efield_check(const PhysParams& p, Sampler& rng) {
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const EFieldVector e{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const auto r = efield_cancellation_residual(e, p);
        worst = std::max({worst, r[0].max_abs(), r[1].max_abs()});
    }
    return check("efield_cancellation", worst, 1e-12);
}

VerifyCheck force_balance_check(const PhysParams& p) {
    const auto r = sigma_force_balance(p);
    const auto& b = *r.per_block;
    const double antisym = std::abs((b[0] + b[1]) + (b[2] + b[3]));
    return check("force_balance_gap_edge", std::max(std::abs(r.total + 1.0), antisym), 1e-12,
                 "|sigma + 1| and block antisymmetry");
}

VerifyCheck gap_edge_check(const PhysParams& p, const QuadratureSpec& quad) {
    const auto report = compare_methods(p.delta_so, p, quad);
    double worst = 0.0;
    for (const auto& r : report.results) worst = std::max(worst, std::abs(r.total + 1.0));
    for (const auto& d : report.differences) worst = std::max(worst, d.relative);
    return check("gap_edge_three_methods", worst, 1e-6);
}

VerifyCheck fermi_dependence_check(const PhysParams& p, const QuadratureSpec& quad) {
    double worst = 0.0;
    for (double x : {1.0, 1.5, 2.0, 4.0, 10.0}) {
        const double expected = -1.0 / x;
        const auto b = sigma_berry(x * p.delta_so, p, quad);
        const auto k = sigma_kubo(x * p.delta_so, p, quad);
        worst = std::max({worst, std::abs(b.total - expected) / std::abs(expected),
                          std::abs(k.total - expected) / std::abs(expected)});
        const auto& blocks = *k.per_block;
        for (auto label : kAllBlocks) {
            const double cf = -label.spin_sign() * 0.25 / x;
            worst = std::max(worst, std::abs(blocks[label.index()] - cf) / std::abs(cf));
        }
    }
    return check("fermi_level_dependence", worst, 1e-8, "max relative deviation");
}

VerifyCheck iqhe_check(const PhysParams& base) {
    PhysParams p = base;
    p.lambda_r = 0.0;
    if (!(p.b_field > 0.0)) p.b_field = 1.0;
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) worst = std::max(worst, std::abs(sigma_iqhe(n, p).total + n));
    return check("iqhe_quantization", worst, 1e-12);
}

VerifyCheck scale_check(const PhysParams& p, const QuadratureSpec& quad) {
    PhysParams s = p;
    s.hbar *= 2.0;
    s.v_f *= 3.0;
    s.delta_so *= 5.0;
    double worst = std::abs(sigma_force_balance(s).total - sigma_force_balance(p).total);
    for (double x : {1.0, 1.5, 2.0, 4.0, 10.0}) {
        worst = std::max(worst, std::abs(sigma_berry(x * s.delta_so, s, quad).total -
                                         sigma_berry(x * p.delta_so, p, quad).total));
        worst = std::max(worst, std::abs(sigma_kubo(x * s.delta_so, s, quad).total -
                                         sigma_kubo(x * p.delta_so, p, quad).total));
    }
    return check("scale_invariance", worst, 1e-12);
}

}  // namespace

std::vector<VerifyCheck> run_verify(const RunConfig& cfg) {
    Sampler rng(cfg.seed);
    const PhysParams full = cfg.params;
    const PhysParams p = spin_conserving(cfg.params);

    std::vector<std::function<VerifyCheck()>> suite{
        [&] { return pauli_algebra(); },
        [&] { return hamiltonian_blocks(p, rng); },
        [&] { return hamiltonian_hermitian(full, rng); },
        [&] { return dispersion_check(p, rng); },
        [&] { return eigenspinor_check(p, rng); },
        [&] { return concentration_check(p); },
        [&] { return fw_check(p, rng); },
        [&] { return pure_gauge_check(p, cfg.fd_step, rng); },
        [&] { return fw_gauge_consistency(p, cfg.fd_step, rng); },
        [&] { return field_strength_check(full); },
        [&] { return gauge_reconstruction(full, rng); },
        [&] { return zero_momentum_check(p); },
        [&] { return curvature_fd_check(p, cfg.fd_step, rng); },
        [&] { return curvature_plaquette_check(p); },
        [&] { return kubo_berry_check(p, rng); },
        [&] { return efield_check(p, rng); },
        [&] { return force_balance_check(p); },
        [&] { return gap_edge_check(p, cfg.quad); },
        [&] { return fermi_dependence_check(p, cfg.quad); },
        [&] { return iqhe_check(full); },
        [&] { return scale_check(p, cfg.quad); },
    };
    const std::vector<std::string> names{
        "pauli_algebra", "hamiltonian_block_structure", "hamiltonian_hermitian",
        "dispersion_eigenvalues", "eigenspinor_residuals", "concentration_matrices",
        "fw_identities", "pure_gauge_residual", "fw_gauge_field_analytic_vs_differential",
        "field_strength_identity", "gauge_hamiltonian_reconstruction", "zero_momentum_limit",
        "curvature_curl_fd", "curvature_plaquette_256", "kubo_berry_pointwise",
        "efield_cancellation", "force_balance_gap_edge", "gap_edge_three_methods",
        "fermi_level_dependence", "iqhe_quantization", "scale_invariance"};

    std::vector<VerifyCheck> out;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        try {
            out.push_back(suite[i]());
        } catch (const std::exception& e) {
            out.push_back({names[i], false, std::string("error: ") + e.what()});
        }
    }
    return out;
}

bool report_verify(const std::vector<VerifyCheck>& checks, std::uint64_t seed, std::ostream& out) {
    out << "# seed = " << seed << '\n';
    std::size_t passed = 0;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        if (c.passed) ++passed;
    }
    out << passed << '/' << checks.size() << " checks passed\n";
    return passed == checks.size();
}

}  // namespace shgauge::cli
