#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "shgauge/operator_matrix.hpp"
#include "shgauge/params.hpp"

namespace shgauge {

// ---------------------------------------------------------------------------
// Position-space gauge potential of the Kane–Mele Hamiltonian.
// ---------------------------------------------------------------------------

/// Matrix-valued potential affine in position: A_i(r) = C_i + S_ix·x + S_iy·y.
struct AffineGaugeField {
    std::array<OperatorMatrix, 2> constant;               ///< C_x, C_y
    std::array<std::array<OperatorMatrix, 2>, 2> slope;   ///< slope[i][j] = ∂A_i/∂r_j

    [[nodiscard]] OperatorMatrix at(int component, double x, double y) const;
};

/// Gauge potential with v_F α·(p − A(r)) equal to the full Kane–Mele
/// Hamiltonian including the symmetric-gauge magnetic term:
///   A_x = (iΔ/2v_F)σ_y s_z − (λ_R/v_F)s_y + (eB/2v_F)τ_z y
///   A_y = −(iΔ/2v_F)σ_xτ_z s_z + (λ_R/v_F)s_x − (eB/2v_F)τ_z x
/// The Δ terms are anti-Hermitian; only the product α·A is Hermitian.
[[nodiscard]] AffineGaugeField km_gauge_field(const PhysParams& params);

/// v_F Σ_i α_i (p_i − A_i(r)), with α to the left of A.
[[nodiscard]] OperatorMatrix kinematic_hamiltonian(const AffineGaugeField& field,
                                                   const PhysParams& params, MomentumPoint p,
                                                   double x, double y);

/// F_xy = ∂_x A_y − ∂_y A_x − (i/ħ)[A_x, A_y], with x and y commuting scalars.
///
/// The commutator is expanded in the affine coefficients; every x, y, x², xy,
/// y² coefficient must vanish or std::domain_error is thrown.
[[nodiscard]] OperatorMatrix field_strength(const AffineGaugeField& field,
                                            const PhysParams& params);

/// Four-term closed form of F_xy:
///   (eB/v_F)τ_z − (Δ²/2ħv_F²)σ_zτ_z + (iΔλ_R/ħv_F²)(σ_y s_y + σ_xτ_z s_x) + (2λ_R²/ħv_F²)s_z
/// The sign of the first term disagrees with field_strength(km_gauge_field)
/// whenever B ≠ 0: the curl of the symmetric-gauge term is −(eB/v_F)τ_z.
[[nodiscard]] OperatorMatrix field_strength_closed_form(const PhysParams& params);

// ---------------------------------------------------------------------------
// Momentum-space Foldy–Wouthuysen gauge field and its Berry projection.
// ---------------------------------------------------------------------------

/// Block-diagonal FW unitary with blocks
/// (σ_zH^{↑K} + E, −σ_zH^{↑K′} + E, −σ_zH^{↓K} + E, σ_zH^{↓K′} + E) / √(2E(E+Δ)),
/// so that U H U† = E σ_zτ_z s_z. Requires Δ > 0.
[[nodiscard]] OperatorMatrix fw_unitary(MomentumPoint p, const PhysParams& params);

struct GaugePair {
    OperatorMatrix x;
    OperatorMatrix y;

    [[nodiscard]] const OperatorMatrix& operator[](int i) const { return i == 0 ? x : y; }
};

enum class FwMethod {
    kAnalytic,      ///< closed-form expression
    kDifferential,  ///< iħ U ∂U† with central differences
};

/// Default finite-difference step: rel·max(|p|, Δ/v_F).
[[nodiscard]] double default_fd_step(MomentumPoint p, const PhysParams& params,
                                     double rel = 1e-5);

/// Pure gauge field 𝒜 = iħ U ∂U†/∂p. `step` applies to kDifferential only and
/// defaults to default_fd_step.
[[nodiscard]] GaugePair fw_gauge_field(MomentumPoint p, const PhysParams& params,
                                       FwMethod method = FwMethod::kAnalytic,
                                       std::optional<double> step = std::nullopt);

using MomentumGaugeField = std::function<GaugePair(MomentumPoint)>;

/// ∂_{p_x}𝒜_y − ∂_{p_y}𝒜_x − (i/ħ)[𝒜_x, 𝒜_y] by central differences. The
/// divisor is the realized step (p+h) − (p−h), not 2h.
[[nodiscard]] OperatorMatrix momentum_curvature_residual(const MomentumGaugeField& field,
                                                         MomentumPoint p, double h, double hbar);

/// P = diag(1,0,0,1,0,1,1,0): the positive eigenvalues of σ_zτ_z s_z.
[[nodiscard]] OperatorMatrix positive_projector();

/// P·m·P.
[[nodiscard]] OperatorMatrix project_positive(const OperatorMatrix& m);

/// Abelian Berry connection per block: spin_sign·ħv_F²/(2E(E+Δ))·(p_y, −p_x).
using BerryConnection = PerBlock<std::array<double, 2>>;
[[nodiscard]] BerryConnection berry_connection(MomentumPoint p, const PhysParams& params);

enum class CurvatureMethod {
    kAnalytic,   ///< −spin_sign·ħ²v_F²Δ/(2E³)
    kCurlFd,     ///< ħ·curl of berry_connection by central differences
    kPlaquette,  ///< link-variable flux through a small plaquette centered at p
};

/// Berry curvature per block. `step` is the difference step (kCurlFd) or the
/// plaquette side (kPlaquette), defaulting to 1e-5 and 1e-3 times
/// max(|p|, Δ/v_F) respectively.
[[nodiscard]] PerBlock<double> berry_curvature(MomentumPoint p, const PhysParams& params,
                                               CurvatureMethod method = CurvatureMethod::kAnalytic,
                                               std::optional<double> step = std::nullopt);

/// Square momentum grid [−half_width, half_width]² with points_per_side points.
struct MomentumGrid {
    double half_width;
    int points_per_side;
};

struct CurvatureSample {
    double px;
    double py;
    BlockLabel block;
    double value;
};

struct PlaquetteCurvature {
    std::vector<CurvatureSample> samples;  ///< one per plaquette center and block
    PerBlock<double> integrated;           ///< Σ ℱ·area over the grid
    double plaquette_area;
};

/// Lattice Berry curvature from the positive-energy block spinors: the phase
/// of the product of normalized overlaps around each plaquette, divided by
/// the plaquette area. Rejects grids with fewer than 8 points per side.
/// Plaquettes are evaluated in parallel and summed in a fixed order.
[[nodiscard]] PlaquetteCurvature plaquette_curvature(const MomentumGrid& grid,
                                                     const PhysParams& params);

/// Analytic curvature on the plaquette centers of `grid`, same sample layout
/// as plaquette_curvature.
[[nodiscard]] std::vector<CurvatureSample> analytic_curvature_grid(const MomentumGrid& grid,
                                                                   const PhysParams& params);

/// CSV with header `p_x,p_y,block,value`; 12 significant digits.
void write_curvature_csv(std::span<const CurvatureSample> samples, std::ostream& out);

/// C_i − prefactor·𝒜_i(p = 0), C from km_gauge_field with λ_R = B = 0.
[[nodiscard]] GaugePair zero_momentum_limit_residual(const PhysParams& params, Complex prefactor);

/// zero_momentum_limit_residual with prefactor iΔ²/(ħv_F²); vanishes identically.
[[nodiscard]] GaugePair zero_momentum_limit_check(const PhysParams& params);

}  // namespace shgauge
