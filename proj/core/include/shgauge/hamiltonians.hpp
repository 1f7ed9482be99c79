#pragma once

#include "shgauge/operator_matrix.hpp"
#include "shgauge/params.hpp"

namespace shgauge {

/// α = (σ_x τ_z, σ_y).
[[nodiscard]] OperatorMatrix alpha(int component);

/// Massless Dirac Hamiltonian v_F α·p.
[[nodiscard]] OperatorMatrix build_h0(const PhysParams& params, MomentumPoint p);

/// How build_km_hamiltonian treats the position-dependent magnetic term.
enum class MagneticTerm {
    kMustVanish,  ///< b_field must be zero
    kExcluded,    ///< caller knows the B term lives in the affine gauge field
};

/// H₀ + Δσ_zτ_z s_z + λ_R(σ_xτ_z s_y − σ_y s_x) in momentum space.
///
/// The −(eB/2)(yσ_x − xσ_yτ_z) term depends on position and is only available
/// through AffineGaugeField. Throws if b_field ≠ 0 unless `magnetic` is
/// kExcluded.
[[nodiscard]] OperatorMatrix build_km_hamiltonian(const PhysParams& params, MomentumPoint p,
                                                  MagneticTerm magnetic = MagneticTerm::kMustVanish);

/// 2×2 block Hamiltonian of a (spin, valley) sector with λ_R = B = 0:
///   ↑K : v_F( σ_x p_x + σ_y p_y) + Δσ_z      ↑K′: v_F(−σ_x p_x + σ_y p_y) − Δσ_z
///   ↓K : v_F( σ_x p_x + σ_y p_y) − Δσ_z      ↓K′: v_F(−σ_x p_x + σ_y p_y) + Δσ_z
[[nodiscard]] OperatorMatrix block_hamiltonian(BlockLabel label, MomentumPoint p,
                                               const PhysParams& params);

/// Block velocity ∂H_block/∂p_i: (±v_F σ_x, v_F σ_y), sign + for valley K.
[[nodiscard]] OperatorMatrix block_velocity(BlockLabel label, int component,
                                            const PhysParams& params);

struct BandPair {
    double plus;
    double minus;
};

/// ±√(v_F²|p|² + Δ²).
[[nodiscard]] BandPair dispersion(MomentumPoint p, const PhysParams& params);

}  // namespace shgauge
