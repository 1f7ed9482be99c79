#include "shgauge/conductivity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "shgauge/gauge_fields.hpp"
#include "shgauge/hamiltonians.hpp"
#include "shgauge/quadrature.hpp"
#include "shgauge/spectra.hpp"

namespace shgauge {

using namespace std::complex_literals;
using std::numbers::pi;

namespace {

// Orientation of the spin Hall response. Integrating the curvature (with the
// −e/2 prefactor) or the Kubo factor (with +eħ²/2) over E ≥ E_F gives
// +(e/2π)Δ/E_F; reported conductivities are fixed to −(e/2π)Δ/E_F at the gap
// edge, so both densities carry this sign.
constexpr double kHallOrientation = -1.0;

double e_over_2pi(const PhysParams& params) { return params.e_charge / (2.0 * pi); }

void require_fermi_above_gap(double fermi_energy, const PhysParams& params, const char* where) {
    require_positive_gap(params, where);
    require_spin_conserving(params, where);
    if (!std::isfinite(fermi_energy) || fermi_energy < params.delta_so) {
        throw std::invalid_argument(std::string(where) + ": requires E_F >= delta_so");
    }
}

}  // namespace

std::string_view method_name(Method m) noexcept {
    switch (m) {
        case Method::kForceBalance: return "force_balance";
        case Method::kBerry: return "berry";
        case Method::kKubo: return "kubo";
        case Method::kIqhe: return "iqhe";
    }
    return "unknown";
}

void QuadratureSpec::validate() const {
    if (!(e_cut_factor >= 10.0)) throw std::invalid_argument("QuadratureSpec: e_cut_factor must be >= 10");
    if (!(rel_tol > 0.0 && rel_tol <= 1e-3)) {
        throw std::invalid_argument("QuadratureSpec: rel_tol must lie in (0, 1e-3]");
    }
    if (grid_n < 8) throw std::invalid_argument("QuadratureSpec: grid_n must be >= 8");
    if (!(grid_extent > 0.0)) throw std::invalid_argument("QuadratureSpec: grid_extent must be positive");
}

// ---------------------------------------------------------------------------

ConductivityResult sigma_iqhe(int filled_index, const PhysParams& params) {
    if (filled_index < 1) throw std::invalid_argument("sigma_iqhe: requires N >= 1");
    const auto ladder = landau_ladder(params, filled_index);

    // Undeflected drift v_i = (c/B) ε_ij E_j for a unit field along x.
    const EFieldVector efield{1.0, 0.0};
    const double c_over_b = params.c_light / params.b_field;
    const std::array<double, 2> v{c_over_b * rotated_field(efield, 0),
                                  c_over_b * rotated_field(efield, 1)};
    // j = −eκv, and j_i = σ ε_ij E_j.
    const double j_y = -params.e_charge * ladder.kappa * v[1];
    const double sigma = j_y / rotated_field(efield, 1);

    const double quantum = params.e_charge * params.e_charge / params.planck();
    return {Method::kIqhe, std::nullopt, sigma / quantum, Units::kE2OverH, 0.0, sigma};
}

// ---------------------------------------------------------------------------

ForceOperators::ForceOperators(const PhysParams& params, EFieldVector efield)
    : params_(params),
      efield_(efield),
      velocity_{params.v_f * alpha(0), params.v_f * alpha(1)},
      gauge_{OperatorMatrix::zero(8), OperatorMatrix::zero(8)} {
    params_.validate();
    require_spin_conserving(params_, "force_operators");
    const auto field = km_gauge_field(params_);
    gauge_ = field.constant;
}

OperatorMatrix ForceOperators::kinematic_momentum(int i, MomentumPoint p) const {
    return p.component(i) * OperatorMatrix::identity(8) - gauge_[static_cast<std::size_t>(i)];
}

OperatorMatrix ForceOperators::rotation_term(int i, MomentumPoint p) const {
    const auto chiral = ops::sigma(Axis::kZ) * ops::tau_z() * ops::spin(Axis::kZ);
    return (1i * params_.delta_so / params_.hbar) * (chiral * kinematic_momentum(i, p));
}

OperatorMatrix ForceOperators::curvature_term(int i) const {
    const double coeff = params_.delta_so * params_.delta_so /
                         (2.0 * params_.hbar * params_.v_f * params_.v_f);
    const auto sz_tz = ops::sigma(Axis::kZ) * ops::tau_z();
    auto sum = OperatorMatrix::zero(8);
    for (int j = 0; j < 2; ++j) sum = sum + levi_civita(i, j) * velocity(j);
    return -coeff * (sum * sz_tz);
}

OperatorMatrix ForceOperators::electric_term(int i) const {
    return params_.e_charge * efield_.component(i) * OperatorMatrix::identity(8);
}

OperatorMatrix ForceOperators::force(int i, MomentumPoint p) const {
    return rotation_term(i, p) + curvature_term(i) + electric_term(i);
}

ForceOperators force_operators(const PhysParams& params, EFieldVector efield) {
    return ForceOperators(params, efield);
}

std::array<OperatorMatrix, 2> hall_velocity_operator(EFieldVector efield, const PhysParams& params) {
    require_positive_gap(params, "hall_velocity");
    const double d = params.delta_so;
    const double coeff = 2.0 * params.e_charge * params.hbar * params.v_f * params.v_f / (d * d);
    const auto sz_tz = ops::sigma(Axis::kZ) * ops::tau_z();
    return {-coeff * rotated_field(efield, 0) * sz_tz, -coeff * rotated_field(efield, 1) * sz_tz};
}

std::array<OperatorMatrix, 2> hall_velocity(BlockLabel label, EFieldVector efield,
                                            const PhysParams& params) {
    const auto full = hall_velocity_operator(efield, params);
    return {full[0].diagonal_block(label.index(), 2), full[1].diagonal_block(label.index(), 2)};
}

std::array<OperatorMatrix, 2> efield_cancellation_residual(EFieldVector efield,
                                                           const PhysParams& params,
                                                           double hall_sign) {
    const auto rdot = hall_velocity_operator(efield, params);
    const double coeff = params.delta_so * params.delta_so /
                         (2.0 * params.hbar * params.v_f * params.v_f);
    const auto sz_tz = ops::sigma(Axis::kZ) * ops::tau_z();
    const auto one = OperatorMatrix::identity(8);
    auto residual = [&](int i) {
        auto sum = OperatorMatrix::zero(8);
        for (int j = 0; j < 2; ++j) {
            sum = sum + levi_civita(i, j) * (hall_sign * rdot[static_cast<std::size_t>(j)]);
        }
        return params.e_charge * efield.component(i) * one - coeff * (sum * sz_tz);
    };
    return {residual(0), residual(1)};
}

SpinHallCurrent spin_hall_current(EFieldVector efield, const PhysParams& params) {
    require_positive_gap(params, "spin_hall_current");
    require_spin_conserving(params, "spin_hall_current");
    if (efield.ex == 0.0 && efield.ey == 0.0) {
        throw std::invalid_argument("spin_hall_current: electric field must be nonzero");
    }

    const double n = gap_carrier_density(params);
    const CarrierDensities dens{n, 0.0};
    const double half_hbar = 0.5 * params.hbar;

    // Component used to read off the coefficient of ε_ij E_j.
    const int lead = std::abs(rotated_field(efield, 0)) >= std::abs(rotated_field(efield, 1)) ? 0 : 1;

    SpinHallCurrent out{};
    out.carrier_density = n;
    std::array<OperatorMatrix, 2> spin_current{OperatorMatrix::zero(2), OperatorMatrix::zero(2)};
    for (const auto label : kAllBlocks) {
        const auto conc = concentration_matrix(label, dens, params);
        const auto vel = hall_velocity(label, efield, params);
        for (std::size_t i = 0; i < 2; ++i) {
            const auto block_current = conc * vel[i];
            spin_current[i] = spin_current[i] + (half_hbar * label.spin_sign()) * block_current;
            if (static_cast<int>(i) == lead) {
                out.block_coefficient[label.index()] =
                    half_hbar * 0.5 * block_current.trace().real() / rotated_field(efield, lead);
            }
        }
    }

    for (std::size_t i = 0; i < 2; ++i) {
        const auto& m = spin_current[i];
        const double scalar = 0.5 * m.trace().real();
        const double scale = std::max(1.0, std::abs(scalar));
        if (max_abs_diff(m, scalar * OperatorMatrix::identity(2)) > 1e-12 * scale) {
            throw std::domain_error("spin_hall_current: spin current is not proportional to identity");
        }
        out.current[i] = scalar;
    }
    out.coefficient = out.current[static_cast<std::size_t>(lead)] / rotated_field(efield, lead);
    const double d = params.delta_so;
    out.prefactor_times_n =
        -2.0 * params.e_charge * params.hbar * params.hbar * params.v_f * params.v_f * n / (d * d);
    return out;
}

ConductivityResult sigma_force_balance(const PhysParams& params) {
    const auto current = spin_hall_current(EFieldVector{1.0, 0.0}, params);
    const double unit = e_over_2pi(params);
    PerBlock<double> blocks{};
    for (std::size_t b = 0; b < 4; ++b) blocks[b] = current.block_coefficient[b] / unit;
    return {Method::kForceBalance, blocks, current.coefficient / unit, Units::kEOver2Pi, 0.0,
            current.coefficient};
}

// ---------------------------------------------------------------------------

namespace {

Complex matrix_element(const Spinor& bra, const OperatorMatrix& m, const Spinor& ket) {
    const Complex m0 = m(0, 0) * ket[0] + m(0, 1) * ket[1];
    const Complex m1 = m(1, 0) * ket[0] + m(1, 1) * ket[1];
    return std::conj(bra[0]) * m0 + std::conj(bra[1]) * m1;
}

}  // namespace

double kubo_integrand(BlockLabel label, WaveVector k, const PhysParams& params) {
    const auto sp = block_eigenspinors(label, k, params);
    const auto vx = block_velocity(label, 0, params);
    const auto vy = block_velocity(label, 1, params);
    const Complex product = matrix_element(sp.antiparticle, vy, sp.particle) *
                            matrix_element(sp.particle, vx, sp.antiparticle);
    const double e = band_energy(k.momentum(params.hbar), params);
    return kHallOrientation * 2.0 * product.imag() / (4.0 * e * e);
}

double kubo_density(BlockLabel label, WaveVector k, const PhysParams& params) {
    const double hb = params.hbar;
    return 0.5 * params.e_charge * hb * hb / (4.0 * pi * pi) * kubo_integrand(label, k, params);
}

double berry_density(BlockLabel label, MomentumPoint p, const PhysParams& params) {
    const auto curvature = berry_curvature(p, params, CurvatureMethod::kAnalytic);
    const double two_pi_hbar = 2.0 * pi * params.hbar;
    return kHallOrientation * (-0.5 * params.e_charge) * curvature[label.index()] /
           (two_pi_hbar * two_pi_hbar);
}

double closed_form_block(BlockLabel label, double fermi_energy, const PhysParams& params) {
    return -label.spin_sign() * 0.25 * params.delta_so / fermi_energy;
}

double spin_difference(const PerBlock<double>& b) noexcept {
    return (b[0] + b[1]) - (b[2] + b[3]);
}

namespace {

// Density per d²p of one block; the integrands here are isotropic, so the
// radial scheme samples along p_y = 0.
using BlockDensity = double (*)(BlockLabel, MomentumPoint, const PhysParams&);

double kubo_density_p(BlockLabel label, MomentumPoint p, const PhysParams& params) {
    const double hb = params.hbar;
    return kubo_density(label, WaveVector{p.px / hb, p.py / hb}, params) / (hb * hb);
}

struct BlockIntegral {
    double value;  // units e/2π
    double error;
};

double momentum_at_energy(double energy, const PhysParams& params) {
    const double d = params.delta_so;
    return std::sqrt(std::max(0.0, (energy - d) * (energy + d))) / params.v_f;
}

// σ = 2π ∫ E/v_F² · density(p(E)) dE over [E_F, E_cut] in x = E/Δ, plus the
// exact closed-form tail above E_cut.
BlockIntegral integrate_radial(BlockDensity density, BlockLabel label, double fermi_energy,
                               const PhysParams& params, const QuadratureSpec& quad) {
    const double d = params.delta_so;
    const double unit = e_over_2pi(params);
    const double x_f = fermi_energy / d;
    const double x_cut = std::max(quad.e_cut_factor, x_f);
    auto integrand = [&](double x) {
        const double energy = x * d;
        const MomentumPoint p{momentum_at_energy(energy, params), 0.0};
        return 2.0 * pi * energy * d / (params.v_f * params.v_f) * density(label, p, params) / unit;
    };
    const auto est = adaptive_simpson(integrand, x_f, x_cut, quad.rel_tol);
    return {est.value + closed_form_block(label, x_cut * d, params), est.error};
}

double polar_grid_sum(BlockDensity density, BlockLabel label, double p_lo, double p_hi, int n,
                      const PhysParams& params) {
    const double dp = (p_hi - p_lo) / n;
    const double dphi = 2.0 * pi / n;
    double sum = 0.0;
    for (int ir = 0; ir < n; ++ir) {
        const double r = p_lo + (ir + 0.5) * dp;
        double ring = 0.0;
        for (int ia = 0; ia < n; ++ia) {
            const double phi = (ia + 0.5) * dphi;
            ring += density(label, MomentumPoint{r * std::cos(phi), r * std::sin(phi)}, params);
        }
        sum += ring * r;
    }
    return sum * dp * dphi;
}

// Midpoint rule on an n×n (|p|, φ) grid between the Fermi momentum and
// grid_extent·Δ/v_F, plus the closed-form tail. The error estimate is the
// Richardson difference against the n/2 grid.
BlockIntegral integrate_polar(BlockDensity density, BlockLabel label, double fermi_energy,
                              const PhysParams& params, const QuadratureSpec& quad) {
    const double unit = e_over_2pi(params);
    const double p_lo = momentum_at_energy(fermi_energy, params);
    const double p_hi = quad.grid_extent * params.delta_so / params.v_f;
    if (p_hi <= p_lo) return {closed_form_block(label, fermi_energy, params), 0.0};
    const double e_hi = band_energy(MomentumPoint{p_hi, 0.0}, params);
    const double fine = polar_grid_sum(density, label, p_lo, p_hi, quad.grid_n, params) / unit;
    const double coarse = polar_grid_sum(density, label, p_lo, p_hi, quad.grid_n / 2, params) / unit;
    return {fine + closed_form_block(label, e_hi, params), std::abs(fine - coarse) / 3.0};
}

ConductivityResult integrate_engine(Method method, BlockDensity density, double fermi_energy,
                                    const PhysParams& params, const QuadratureSpec& quad) {
    quad.validate();
    PerBlock<double> blocks{};
    double error = 0.0;
    for (const auto label : kAllBlocks) {
        const auto r = quad.scheme == QuadratureScheme::kAdaptiveRadial
                           ? integrate_radial(density, label, fermi_energy, params, quad)
                           : integrate_polar(density, label, fermi_energy, params, quad);
        blocks[label.index()] = r.value;
        error += r.error;
    }
    const double total = spin_difference(blocks);
    return {method, blocks, total, Units::kEOver2Pi, error, total * e_over_2pi(params)};
}

}  // namespace

ConductivityResult sigma_kubo(double fermi_energy, const PhysParams& params,
                              const QuadratureSpec& quad) {
    require_fermi_above_gap(fermi_energy, params, "sigma_kubo");
    return integrate_engine(Method::kKubo, &kubo_density_p, fermi_energy, params, quad);
}

ConductivityResult sigma_berry(double fermi_energy, const PhysParams& params,
                               const QuadratureSpec& quad) {
    require_fermi_above_gap(fermi_energy, params, "sigma_berry");
    return integrate_engine(Method::kBerry, &berry_density, fermi_energy, params, quad);
}

MethodComparison compare_methods(double fermi_energy, const PhysParams& params,
                                 const QuadratureSpec& quad) {
    require_fermi_above_gap(fermi_energy, params, "compare_methods");
    MethodComparison out{};
    out.fermi_over_delta = fermi_energy / params.delta_so;
    out.force_balance_applicable = std::abs(out.fermi_over_delta - 1.0) <= 1e-12;
    out.results.push_back(sigma_berry(fermi_energy, params, quad));
    out.results.push_back(sigma_kubo(fermi_energy, params, quad));
    if (out.force_balance_applicable) out.results.push_back(sigma_force_balance(params));

    for (std::size_t i = 0; i < out.results.size(); ++i) {
        for (std::size_t j = i + 1; j < out.results.size(); ++j) {
            const double a = out.results[i].total;
            const double b = out.results[j].total;
            const double rel = std::abs(a - b) / std::max(std::abs(a), std::abs(b));
            out.differences.push_back({out.results[i].method, out.results[j].method, rel});
        }
    }
    return out;
}

}  // namespace shgauge
