#include "shgauge/spectra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shgauge {

BlockSpinor block_eigenspinors(BlockLabel label, WaveVector k, const PhysParams& params) {
    require_positive_gap(params, "block_eigenspinors");
    const double kn = k.norm();
    const double theta = std::atan2(params.v_f * params.hbar * kn, params.delta_so);
    const double phi = kn > 0.0 ? std::atan2(k.ky, k.kx) : 0.0;
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Complex ph = std::polar(1.0, phi);
    const Complex phc = std::conj(ph);

    BlockSpinor out{label, theta, phi, {}, {}};
    switch (label.index()) {
        case 0:  // ↑K
            out.particle = {c, s * ph};
            out.antiparticle = {s, -c * ph};
            break;
        case 1:  // ↑K′
            out.particle = {s, -c * phc};
            out.antiparticle = {c, s * phc};
            break;
        case 2:  // ↓K
            out.particle = {s, c * ph};
            out.antiparticle = {c, -s * ph};
            break;
        default:  // ↓K′
            out.particle = {c, -s * phc};
            out.antiparticle = {s, c * phc};
            break;
    }
    return out;
}

namespace {

OperatorMatrix outer(const Spinor& v) {
    return OperatorMatrix::from_rows({{v[0] * std::conj(v[0]), v[0] * std::conj(v[1])},
                                      {v[1] * std::conj(v[0]), v[1] * std::conj(v[1])}});
}

}  // namespace

OperatorMatrix number_operator(BlockLabel label, WaveVector k, CarrierDensities dens,
                               const PhysParams& params) {
    const auto sp = block_eigenspinors(label, k, params);
    return dens.n_p * outer(sp.particle) + dens.n_a * outer(sp.antiparticle);
}

OperatorMatrix concentration_matrix(BlockLabel label, CarrierDensities dens,
                                    const PhysParams& params) {
    return number_operator(label, WaveVector{}, dens, params);
}

double dos_dirac(double energy, const PhysParams& params) {
    const double vh = params.v_f * params.hbar;
    return std::abs(energy) / (2.0 * std::numbers::pi * vh * vh);
}

double gap_carrier_density(const PhysParams& params) {
    require_positive_gap(params, "gap_carrier_density");
    const double vh = params.v_f * params.hbar;
    return std::abs(params.delta_so) * params.delta_so / (4.0 * std::numbers::pi * vh * vh);
}

LandauLadder landau_ladder(const PhysParams& params, int filled_index, FermiPlacement placement) {
    params.validate();
    if (!(params.b_field > 0.0)) throw std::invalid_argument("landau_ladder: requires b_field > 0");
    if (filled_index < 1) throw std::invalid_argument("landau_ladder: requires N >= 1");

    LandauLadder ladder{};
    ladder.omega_c = params.e_charge * params.b_field / (params.mass * params.c_light);
    const double quantum = params.hbar * ladder.omega_c;
    for (int n = 0; n <= filled_index + 1; ++n) ladder.levels.push_back(quantum * (n + 0.5));
    ladder.filled_index = filled_index;
    ladder.rho_l = params.mass / (2.0 * std::numbers::pi * params.hbar * params.hbar);
    ladder.ground_energy = ladder.levels.front();
    const auto n = static_cast<std::size_t>(filled_index);
    ladder.fermi_energy = placement == FermiPlacement::kAtLevel
                              ? ladder.levels[n]
                              : 0.5 * (ladder.levels[n] + ladder.levels[n + 1]);
    // Each level carries ρ_L·ħω_c = eB/hc states, so κ counts the N levels
    // between E₀ and E_F regardless of where E_F sits in the next gap.
    const double filled_top = ladder.levels[n];
    ladder.kappa = ladder.rho_l * (filled_top - ladder.ground_energy);
    return ladder;
}

}  // namespace shgauge
