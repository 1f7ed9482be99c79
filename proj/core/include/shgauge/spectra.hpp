#pragma once

#include <array>
#include <vector>

#include "shgauge/operator_matrix.hpp"
#include "shgauge/params.hpp"

namespace shgauge {

using Spinor = std::array<Complex, 2>;

/// Positive- and negative-energy eigenspinors of a 2×2 block in the chiral
/// basis, cos θ = Δ/E and tan φ = k_y/k_x.
struct BlockSpinor {
    BlockLabel label;
    double theta;
    double phi;
    Spinor particle;      ///< |p⟩, energy +E
    Spinor antiparticle;  ///< |a⟩, energy −E
};

/// Closed-form eigenspinors for each block:
///   ↑K : |p⟩ = (c,  s e^{iφ}),   |a⟩ = (s, −c e^{iφ})
///   ↑K′: |p⟩ = (s, −c e^{−iφ}),  |a⟩ = (c,  s e^{−iφ})
///   ↓K : |p⟩ = (s,  c e^{iφ}),   |a⟩ = (c, −s e^{iφ})
///   ↓K′: |p⟩ = (c, −s e^{−iφ}),  |a⟩ = (s,  c e^{−iφ})
/// with c = cos(θ/2), s = sin(θ/2). θ = atan2(v_F ħ|k|, Δ); φ = 0 at k = 0.
[[nodiscard]] BlockSpinor block_eigenspinors(BlockLabel label, WaveVector k,
                                             const PhysParams& params);

/// Particle and antiparticle (hole) concentrations, per area.
struct CarrierDensities {
    double n_p = 0.0;
    double n_a = 0.0;
};

/// N = n_p |p⟩⟨p| + n_a |a⟩⟨a| for the block at wave vector k.
[[nodiscard]] OperatorMatrix number_operator(BlockLabel label, WaveVector k,
                                             CarrierDensities dens, const PhysParams& params);

/// Gap-edge (k → 0) limit of number_operator.
[[nodiscard]] OperatorMatrix concentration_matrix(BlockLabel label, CarrierDensities dens,
                                                  const PhysParams& params);

/// Dirac density of states |E| / (2π v_F² ħ²), per block.
[[nodiscard]] double dos_dirac(double energy, const PhysParams& params);

/// Carriers below the gap edge: ∫₀^Δ ρ(E) dE = Δ² / (4π ħ² v_F²).
[[nodiscard]] double gap_carrier_density(const PhysParams& params);

enum class FermiPlacement {
    kAtLevel,  ///< E_F sits on level N
    kBetween,  ///< E_F strictly between levels N and N+1
};

/// Landau quantization of a 2D electron gas in a perpendicular field.
struct LandauLadder {
    double omega_c;              ///< eB/mc
    std::vector<double> levels;  ///< ħω_c(n + 1/2), n = 0..N+1
    int filled_index;            ///< N
    double rho_l;                ///< m / (2πħ²)
    double ground_energy;        ///< E₀ = ħω_c/2
    double fermi_energy;         ///< E_F
    double kappa;                ///< carrier concentration
};

/// Throws std::invalid_argument for b_field ≤ 0 or filled_index < 1.
[[nodiscard]] LandauLadder landau_ladder(const PhysParams& params, int filled_index,
                                         FermiPlacement placement = FermiPlacement::kAtLevel);

}  // namespace shgauge
