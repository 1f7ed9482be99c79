#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "shgauge/operator_matrix.hpp"
#include "shgauge/params.hpp"

namespace shgauge {

struct EFieldVector {
    double ex = 0.0;
    double ey = 0.0;

    [[nodiscard]] double component(int i) const noexcept { return i == 0 ? ex : ey; }
};

/// (ε E)_i = Σ_j ε_ij E_j.
[[nodiscard]] inline double rotated_field(EFieldVector e, int i) noexcept {
    return i == 0 ? e.ey : -e.ex;
}

enum class Method { kForceBalance, kBerry, kKubo, kIqhe };
enum class Units { kEOver2Pi, kE2OverH };

[[nodiscard]] std::string_view method_name(Method m) noexcept;

struct ConductivityResult {
    Method method;
    std::optional<PerBlock<double>> per_block;  ///< spin methods only, in `units`
    double total;                               ///< in `units`
    Units units;
    double quadrature_error;                    ///< ≥ 0, in `units`
    double raw_total;                           ///< total × (e/2π) or × (e²/h)
};

enum class QuadratureScheme { kAdaptiveRadial, kPolarGrid };

struct QuadratureSpec {
    double e_cut_factor = 1e4;  ///< cutoff E_cut = e_cut_factor·Δ
    double rel_tol = 1e-10;
    QuadratureScheme scheme = QuadratureScheme::kAdaptiveRadial;
    int grid_n = 512;            ///< polar grid points per axis
    double grid_extent = 50.0;   ///< polar grid covers |p| ≤ grid_extent·Δ/v_F

    /// Throws std::invalid_argument unless e_cut_factor ≥ 10, rel_tol ∈ (0, 1e-3]
    /// and the polar grid has at least 8 points and a positive extent.
    void validate() const;
};

// ---------------------------------------------------------------------------
// Integer quantum Hall effect.
// ---------------------------------------------------------------------------

/// σ_H from force balance v_i = (c/B)ε_ij E_j, current j = −eκv and the
/// Landau-level concentration κ. Reported in units of e²/h.
[[nodiscard]] ConductivityResult sigma_iqhe(int filled_index, const PhysParams& params);

// ---------------------------------------------------------------------------
// Force balance on the kinematic momentum.
// ---------------------------------------------------------------------------

/// Velocity and force operators of H − eE·r with H = v_F α·Π, Π = p − A,
/// evaluated at a c-number momentum p. Requires λ_R = B = 0.
class ForceOperators {
public:
    ForceOperators(const PhysParams& params, EFieldVector efield);

    /// ṙ_i = v_F α_i.
    [[nodiscard]] const OperatorMatrix& velocity(int i) const { return velocity_[static_cast<std::size_t>(i)]; }
    /// Π_i = p_i − A_i.
    [[nodiscard]] OperatorMatrix kinematic_momentum(int i, MomentumPoint p) const;
    /// (iΔ/ħ) σ_zτ_z s_z Π_i.
    [[nodiscard]] OperatorMatrix rotation_term(int i, MomentumPoint p) const;
    /// −(Δ²/2ħv_F²) ε_ij ṙ_j σ_zτ_z.
    [[nodiscard]] OperatorMatrix curvature_term(int i) const;
    /// eE_i·1.
    [[nodiscard]] OperatorMatrix electric_term(int i) const;
    /// Sum of the three terms.
    [[nodiscard]] OperatorMatrix force(int i, MomentumPoint p) const;

private:
    PhysParams params_;
    EFieldVector efield_;
    std::array<OperatorMatrix, 2> velocity_;
    std::array<OperatorMatrix, 2> gauge_;
};

[[nodiscard]] ForceOperators force_operators(const PhysParams& params, EFieldVector efield);

/// Electric-field part of the force-free velocity,
/// ṙ_{H,i} = −(2eħv_F²/Δ²) ε_ij E_j σ_zτ_z, as 8×8 matrices.
[[nodiscard]] std::array<OperatorMatrix, 2> hall_velocity_operator(EFieldVector efield,
                                                                   const PhysParams& params);

/// The (label) block of hall_velocity_operator: ∓(2eħv_F²/Δ²) ε_ij E_j σ_z,
/// − for valley K and + for K′.
[[nodiscard]] std::array<OperatorMatrix, 2> hall_velocity(BlockLabel label, EFieldVector efield,
                                                          const PhysParams& params);

/// eE_i − (Δ²/2ħv_F²) ε_ij ṙ_{H,j} σ_zτ_z with the Hall velocity substituted.
/// `hall_sign` multiplies the Hall velocity (−1 gives the negative control).
[[nodiscard]] std::array<OperatorMatrix, 2> efield_cancellation_residual(EFieldVector efield,
                                                                         const PhysParams& params,
                                                                         double hall_sign = 1.0);

struct SpinHallCurrent {
    std::array<double, 2> current;        ///< j^S_i
    double coefficient;                   ///< σ in j^S_i = σ ε_ij E_j
    double prefactor_times_n;             ///< −2eħ²v_F²n/Δ², before substituting n
    double carrier_density;               ///< n = n_p − n_a at the gap edge
    PerBlock<double> block_coefficient;   ///< per block, before the ↑/↓ difference
};

/// j^S = (ħ/2)(j↑ − j↓) with j^σ = Σ_valley n^{σ,valley} ṙ_H^{σ,valley} and the
/// k → 0 concentration matrices at n_p = n, n_a = 0. Throws if E = 0.
[[nodiscard]] SpinHallCurrent spin_hall_current(EFieldVector efield, const PhysParams& params);

[[nodiscard]] ConductivityResult sigma_force_balance(const PhysParams& params);

// ---------------------------------------------------------------------------
// Berry curvature and Kubo engines.
// ---------------------------------------------------------------------------

/// Kubo interband factor 2 Im[⟨a|ẏ|p⟩⟨p|ẋ|a⟩] / (4E²) with block velocities,
/// carrying the library's orientation sign (negative for spin-up blocks).
[[nodiscard]] double kubo_integrand(BlockLabel label, WaveVector k, const PhysParams& params);

/// Per-block Kubo conductivity density per d²k: (eħ²/2)/(2π)² · kubo_integrand.
[[nodiscard]] double kubo_density(BlockLabel label, WaveVector k, const PhysParams& params);

/// Per-block Berry conductivity density per d²p: (−e/2)/(2πħ)² · ℱ_block, with
/// the same orientation sign as the Kubo density.
[[nodiscard]] double berry_density(BlockLabel label, MomentumPoint p, const PhysParams& params);

/// Closed form −spin_sign·(Δ/E_F)/4 in units of e/2π.
[[nodiscard]] double closed_form_block(BlockLabel label, double fermi_energy,
                                       const PhysParams& params);

/// Kubo spin Hall conductivity for E_F ≥ Δ, per block and total in units e/2π.
[[nodiscard]] ConductivityResult sigma_kubo(double fermi_energy, const PhysParams& params,
                                            const QuadratureSpec& quad = {});

/// Berry-curvature spin Hall conductivity for E_F ≥ Δ, per block and total in
/// units e/2π.
[[nodiscard]] ConductivityResult sigma_berry(double fermi_energy, const PhysParams& params,
                                             const QuadratureSpec& quad = {});

/// (↑K + ↑K′) − (↓K + ↓K′).
[[nodiscard]] double spin_difference(const PerBlock<double>& blocks) noexcept;

struct MethodDifference {
    Method a;
    Method b;
    double relative;
};

struct MethodComparison {
    double fermi_over_delta;
    bool force_balance_applicable;
    std::vector<ConductivityResult> results;
    std::vector<MethodDifference> differences;
};

/// Berry and Kubo at E_F, plus force balance when E_F = Δ; pairwise relative
/// differences of the totals.
[[nodiscard]] MethodComparison compare_methods(double fermi_energy, const PhysParams& params,
                                               const QuadratureSpec& quad = {});

}  // namespace shgauge
