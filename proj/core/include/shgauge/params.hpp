#pragma once

#include <array>
#include <cstddef>
#include <cmath>
#include <numbers>
#include <string_view>

namespace shgauge {

/// Physical constants and couplings. Natural units by default.
struct PhysParams {
    double v_f = 1.0;       ///< Fermi velocity
    double delta_so = 1.0;  ///< intrinsic spin-orbit gap parameter Δ
    double lambda_r = 0.0;  ///< Rashba coupling
    double b_field = 0.0;   ///< perpendicular magnetic field
    double hbar = 1.0;
    double e_charge = 1.0;  ///< elementary charge magnitude (electron charge is −e)
    double mass = 1.0;      ///< band mass, Landau-level path only
    double c_light = 1.0;   ///< appears only in eB/c

    [[nodiscard]] double planck() const noexcept { return 2.0 * std::numbers::pi * hbar; }

    /// Throws std::invalid_argument unless v_f, hbar, e_charge, mass, c_light are
    /// positive and every field is finite.
    void validate() const;
};

/// Throws std::invalid_argument naming `where` unless Δ > 0.
void require_positive_gap(const PhysParams& params, std::string_view where);

/// Throws std::invalid_argument naming `where` unless λ_R = 0 and B = 0.
void require_spin_conserving(const PhysParams& params, std::string_view where);

enum class Spin { kUp, kDown };
enum class Valley { kK, kKPrime };

/// One of the four (spin, valley) sectors. Storage order: ↑K, ↑K′, ↓K, ↓K′.
struct BlockLabel {
    Spin spin;
    Valley valley;

    [[nodiscard]] constexpr std::size_t index() const noexcept {
        return 2 * static_cast<std::size_t>(spin) + static_cast<std::size_t>(valley);
    }
    /// s_z eigenvalue.
    [[nodiscard]] constexpr double spin_sign() const noexcept { return spin == Spin::kUp ? 1.0 : -1.0; }
    /// τ_z eigenvalue.
    [[nodiscard]] constexpr double valley_sign() const noexcept {
        return valley == Valley::kK ? 1.0 : -1.0;
    }
    /// Sign of the Δσ_z mass term inside the block (τ_z s_z).
    [[nodiscard]] constexpr double mass_sign() const noexcept { return spin_sign() * valley_sign(); }

    [[nodiscard]] std::string_view name() const noexcept;

    static constexpr BlockLabel from_index(std::size_t i) noexcept {
        return {i < 2 ? Spin::kUp : Spin::kDown, i % 2 == 0 ? Valley::kK : Valley::kKPrime};
    }

    friend constexpr bool operator==(BlockLabel, BlockLabel) = default;
};

inline constexpr std::array<BlockLabel, 4> kAllBlocks{
    BlockLabel::from_index(0), BlockLabel::from_index(1), BlockLabel::from_index(2),
    BlockLabel::from_index(3)};

template <class T>
using PerBlock = std::array<T, 4>;

/// Momentum p (eigenvalue ħk where a wave vector is meant).
struct MomentumPoint {
    double px = 0.0;
    double py = 0.0;

    [[nodiscard]] double norm() const noexcept { return std::hypot(px, py); }
    [[nodiscard]] double component(int i) const noexcept { return i == 0 ? px : py; }
};

struct WaveVector {
    double kx = 0.0;
    double ky = 0.0;

    [[nodiscard]] double norm() const noexcept { return std::hypot(kx, ky); }
    [[nodiscard]] MomentumPoint momentum(double hbar) const noexcept { return {hbar * kx, hbar * ky}; }
};

/// Levi-Civita symbol in two dimensions, ε_xy = +1.
[[nodiscard]] constexpr double levi_civita(int i, int j) noexcept {
    return i == j ? 0.0 : (i == 0 ? 1.0 : -1.0);
}

/// Positive band energy E(p) = √(v_F²|p|² + Δ²).
[[nodiscard]] inline double band_energy(MomentumPoint p, const PhysParams& params) noexcept {
    return std::hypot(params.v_f * p.norm(), params.delta_so);
}

}  // namespace shgauge
