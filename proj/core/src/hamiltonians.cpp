#include "shgauge/hamiltonians.hpp"

#include <stdexcept>

namespace shgauge {

using ops::sigma;
using ops::spin;
using ops::tau_z;

OperatorMatrix alpha(int component) {
    return component == 0 ? sigma(Axis::kX) * tau_z() : sigma(Axis::kY);
}

OperatorMatrix build_h0(const PhysParams& params, MomentumPoint p) {
    return params.v_f * (p.px * alpha(0) + p.py * alpha(1));
}

OperatorMatrix build_km_hamiltonian(const PhysParams& params, MomentumPoint p,
                                    MagneticTerm magnetic) {
    if (params.b_field != 0.0 && magnetic != MagneticTerm::kExcluded) {
        throw std::invalid_argument(
            "build_km_hamiltonian: b_field != 0 requires MagneticTerm::kExcluded; the "
            "magnetic term is position dependent and lives in the affine gauge field");
    }
    const auto mass = params.delta_so * (sigma(Axis::kZ) * tau_z() * spin(Axis::kZ));
    const auto rashba = params.lambda_r * (sigma(Axis::kX) * tau_z() * spin(Axis::kY) -
                                           sigma(Axis::kY) * spin(Axis::kX));
    return build_h0(params, p) + mass + rashba;
}

OperatorMatrix block_hamiltonian(BlockLabel label, MomentumPoint p, const PhysParams& params) {
    const auto sx = pauli2(Axis::kX);
    const auto sy = pauli2(Axis::kY);
    const auto sz = pauli2(Axis::kZ);
    return params.v_f * (label.valley_sign() * p.px * sx + p.py * sy) +
           label.mass_sign() * params.delta_so * sz;
}

OperatorMatrix block_velocity(BlockLabel label, int component, const PhysParams& params) {
    if (component == 0) return label.valley_sign() * params.v_f * pauli2(Axis::kX);
    return params.v_f * pauli2(Axis::kY);
}

BandPair dispersion(MomentumPoint p, const PhysParams& params) {
    const double e = band_energy(p, params);
    return {e, -e};
}

}  // namespace shgauge
