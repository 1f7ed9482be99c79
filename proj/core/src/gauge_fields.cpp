#include "shgauge/gauge_fields.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "shgauge/format.hpp"
#include "shgauge/hamiltonians.hpp"
#include "shgauge/parallel.hpp"
#include "shgauge/spectra.hpp"

namespace shgauge {

using namespace std::complex_literals;
using ops::sigma;
using ops::spin;
using ops::tau_z;

OperatorMatrix AffineGaugeField::at(int component, double x, double y) const {
    const auto i = static_cast<std::size_t>(component);
    return constant[i] + x * slope[i][0] + y * slope[i][1];
}

AffineGaugeField km_gauge_field(const PhysParams& params) {
    params.validate();
    const double vf = params.v_f;
    const double d = params.delta_so;
    const double lr = params.lambda_r;
    const double eb = params.e_charge * params.b_field;
    const auto zero = OperatorMatrix::zero(8);

    const auto cx = (1i * d / (2.0 * vf)) * (sigma(Axis::kY) * spin(Axis::kZ)) -
                    (lr / vf) * spin(Axis::kY);
    const auto cy = (-1i * d / (2.0 * vf)) * (sigma(Axis::kX) * tau_z() * spin(Axis::kZ)) +
                    (lr / vf) * spin(Axis::kX);
    const auto sym = (eb / (2.0 * vf)) * tau_z();
    return AffineGaugeField{{cx, cy}, {{{zero, sym}, {-sym, zero}}}};
}

OperatorMatrix kinematic_hamiltonian(const AffineGaugeField& field, const PhysParams& params,
                                     MomentumPoint p, double x, double y) {
    const auto one = OperatorMatrix::identity(8);
    auto h = OperatorMatrix::zero(8);
    for (int i = 0; i < 2; ++i) h = h + alpha(i) * (p.component(i) * one - field.at(i, x, y));
    return params.v_f * h;
}

OperatorMatrix field_strength(const AffineGaugeField& field, const PhysParams& params) {
    const auto& c = field.constant;
    const auto& s = field.slope;
    // [A_x, A_y] = [C_x, C_y] + x(...) + y(...) + x²(...) + xy(...) + y²(...)
    const OperatorMatrix position_terms[] = {
        commutator(c[0], s[1][0]) + commutator(s[0][0], c[1]),
        commutator(c[0], s[1][1]) + commutator(s[0][1], c[1]),
        commutator(s[0][0], s[1][0]),
        commutator(s[0][0], s[1][1]) + commutator(s[0][1], s[1][0]),
        commutator(s[0][1], s[1][1]),
    };
    double scale = 1.0;
    for (const auto& m : {c[0], c[1], s[0][0], s[0][1], s[1][0], s[1][1]})
        scale = std::max(scale, m.max_abs());
    for (const auto& term : position_terms) {
        if (term.max_abs() > kDefaultTolerance * scale * scale) {
            throw std::domain_error("field_strength: commutator depends on position");
        }
    }
    return s[1][0] - s[0][1] - (1i / params.hbar) * commutator(c[0], c[1]);
}

OperatorMatrix field_strength_closed_form(const PhysParams& params) {
    const double vf = params.v_f;
    const double hb = params.hbar;
    const double d = params.delta_so;
    const double lr = params.lambda_r;
    const double eb = params.e_charge * params.b_field;
    return (eb / vf) * tau_z() - (d * d / (2.0 * hb * vf * vf)) * (sigma(Axis::kZ) * tau_z()) +
           (1i * d * lr / (hb * vf * vf)) *
               (sigma(Axis::kY) * spin(Axis::kY) + sigma(Axis::kX) * tau_z() * spin(Axis::kX)) +
           (2.0 * lr * lr / (hb * vf * vf)) * spin(Axis::kZ);
}

OperatorMatrix fw_unitary(MomentumPoint p, const PhysParams& params) {
    require_positive_gap(params, "fw_unitary");
    const double e = band_energy(p, params);
    const double norm = std::sqrt(2.0 * e * (e + params.delta_so));
    const auto sz = pauli2(Axis::kZ);
    const auto one = OperatorMatrix::identity(2);
    std::vector<OperatorMatrix> blocks;
    blocks.reserve(4);
    for (const auto label : kAllBlocks) {
        const auto h = block_hamiltonian(label, p, params);
        blocks.push_back((label.mass_sign() * (sz * h) + e * one) / norm);
    }
    return block_diagonal(blocks);
}

double default_fd_step(MomentumPoint p, const PhysParams& params, double rel) {
    return rel * std::max(p.norm(), std::abs(params.delta_so) / params.v_f);
}

namespace {

GaugePair fw_gauge_analytic(MomentumPoint p, const PhysParams& params) {
    const double vf = params.v_f;
    const double d = params.delta_so;
    const double e = band_energy(p, params);
    const double den = 2.0 * e * e * (e + d);
    const auto mixed = (p.px * sigma(Axis::kY) - p.py * (sigma(Axis::kX) * tau_z())) * spin(Axis::kZ);
    const auto chiral = sigma(Axis::kZ) * tau_z();
    const auto ax = vf * e * (e + d) * (sigma(Axis::kY) * spin(Axis::kZ)) -
                    vf * vf * vf * p.px * mixed + vf * vf * e * p.py * chiral;
    const auto ay = -vf * e * (e + d) * (sigma(Axis::kX) * tau_z() * spin(Axis::kZ)) -
                    vf * vf * vf * p.py * mixed - vf * vf * e * p.px * chiral;
    return {(params.hbar / den) * ax, (params.hbar / den) * ay};
}

GaugePair fw_gauge_differential(MomentumPoint p, const PhysParams& params, double h) {
    const auto u = fw_unitary(p, params);
    auto component = [&](int i) {
        MomentumPoint plus = p;
        MomentumPoint minus = p;
        (i == 0 ? plus.px : plus.py) += h;
        (i == 0 ? minus.px : minus.py) -= h;
        const double realized = plus.component(i) - minus.component(i);
        const auto du = (fw_unitary(plus, params).adjoint() - fw_unitary(minus, params).adjoint()) /
                        realized;
        return (1i * params.hbar) * (u * du);
    };
    return {component(0), component(1)};
}

}  // namespace

GaugePair fw_gauge_field(MomentumPoint p, const PhysParams& params, FwMethod method,
                         std::optional<double> step) {
    require_positive_gap(params, "fw_gauge_field");
    if (method == FwMethod::kAnalytic) return fw_gauge_analytic(p, params);
    const double h = step.value_or(default_fd_step(p, params));
    if (!(h > 0.0)) throw std::invalid_argument("fw_gauge_field: step must be positive");
    return fw_gauge_differential(p, params, h);
}

OperatorMatrix momentum_curvature_residual(const MomentumGaugeField& field, MomentumPoint p,
                                           double h, double hbar) {
    if (!(h > 0.0)) throw std::invalid_argument("momentum_curvature_residual: h must be positive");
    const MomentumPoint xp{p.px + h, p.py};
    const MomentumPoint xm{p.px - h, p.py};
    const MomentumPoint yp{p.px, p.py + h};
    const MomentumPoint ym{p.px, p.py - h};
    const auto dy_dx = (field(xp).y - field(xm).y) / (xp.px - xm.px);
    const auto dx_dy = (field(yp).x - field(ym).x) / (yp.py - ym.py);
    const auto a = field(p);
    return dy_dx - dx_dy - (1i / hbar) * commutator(a.x, a.y);
}

OperatorMatrix positive_projector() {
    return OperatorMatrix::diagonal({1, 0, 0, 1, 0, 1, 1, 0});
}

OperatorMatrix project_positive(const OperatorMatrix& m) {
    if (m.dim() != 8) throw std::invalid_argument("project_positive: expects an 8x8 matrix");
    const auto proj = positive_projector();
    return proj * m * proj;
}

BerryConnection berry_connection(MomentumPoint p, const PhysParams& params) {
    require_positive_gap(params, "berry_connection");
    const double e = band_energy(p, params);
    const double g = params.hbar * params.v_f * params.v_f / (2.0 * e * (e + params.delta_so));
    BerryConnection out{};
    for (const auto label : kAllBlocks) {
        out[label.index()] = {label.spin_sign() * g * p.py, -label.spin_sign() * g * p.px};
    }
    return out;
}

namespace {

PerBlock<double> curvature_analytic(MomentumPoint p, const PhysParams& params) {
    const double e = band_energy(p, params);
    const double vh = params.hbar * params.v_f;
    const double mag = vh * vh * params.delta_so / (2.0 * e * e * e);
    PerBlock<double> out{};
    for (const auto label : kAllBlocks) out[label.index()] = -label.spin_sign() * mag;
    return out;
}

PerBlock<double> curvature_curl(MomentumPoint p, const PhysParams& params, double h) {
    const MomentumPoint xp{p.px + h, p.py};
    const MomentumPoint xm{p.px - h, p.py};
    const MomentumPoint yp{p.px, p.py + h};
    const MomentumPoint ym{p.px, p.py - h};
    const auto axp = berry_connection(xp, params);
    const auto axm = berry_connection(xm, params);
    const auto ayp = berry_connection(yp, params);
    const auto aym = berry_connection(ym, params);
    PerBlock<double> out{};
    for (std::size_t b = 0; b < 4; ++b) {
        const double dy_dx = (axp[b][1] - axm[b][1]) / (xp.px - xm.px);
        const double dx_dy = (ayp[b][0] - aym[b][0]) / (yp.py - ym.py);
        out[b] = params.hbar * (dy_dx - dx_dy);
    }
    return out;
}

Complex normalized_overlap(const Spinor& a, const Spinor& b) {
    const Complex z = std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
    const double m = std::abs(z);
    if (m == 0.0) throw std::domain_error("plaquette: orthogonal neighbouring states");
    return z / m;
}

// Phase of the Wilson loop around corners given counter-clockwise.
double plaquette_flux(const Spinor& c0, const Spinor& c1, const Spinor& c2, const Spinor& c3) {
    const Complex loop = normalized_overlap(c0, c1) * normalized_overlap(c1, c2) *
                         normalized_overlap(c2, c3) * normalized_overlap(c3, c0);
    return std::arg(loop);
}

Spinor particle_state(BlockLabel label, double px, double py, const PhysParams& params) {
    return block_eigenspinors(label, WaveVector{px / params.hbar, py / params.hbar}, params).particle;
}

// ⟨u|∂u⟩ phases give flux ≈ −Ω·area for the Berry curvature Ω of i⟨u|∇u⟩,
// and ℱ = ħ²Ω.
double flux_to_curvature(double flux, double area, double hbar) {
    return -hbar * hbar * flux / area;
}

PerBlock<double> curvature_plaquette(MomentumPoint p, const PhysParams& params, double side) {
    const double half = 0.5 * side;
    const double x0 = p.px - half, x1 = p.px + half;
    const double y0 = p.py - half, y1 = p.py + half;
    const double area = (x1 - x0) * (y1 - y0);
    PerBlock<double> out{};
    for (const auto label : kAllBlocks) {
        const double flux = plaquette_flux(
            particle_state(label, x0, y0, params), particle_state(label, x1, y0, params),
            particle_state(label, x1, y1, params), particle_state(label, x0, y1, params));
        out[label.index()] = flux_to_curvature(flux, area, params.hbar);
    }
    return out;
}

}  // namespace

PerBlock<double> berry_curvature(MomentumPoint p, const PhysParams& params, CurvatureMethod method,
                                 std::optional<double> step) {
    require_positive_gap(params, "berry_curvature");
    switch (method) {
        case CurvatureMethod::kAnalytic: return curvature_analytic(p, params);
        case CurvatureMethod::kCurlFd: {
            const double h = step.value_or(default_fd_step(p, params, 1e-5));
            if (!(h > 0.0)) throw std::invalid_argument("berry_curvature: step must be positive");
            return curvature_curl(p, params, h);
        }
        case CurvatureMethod::kPlaquette: {
            const double h = step.value_or(default_fd_step(p, params, 1e-3));
            if (!(h > 0.0)) throw std::invalid_argument("berry_curvature: step must be positive");
            return curvature_plaquette(p, params, h);
        }
    }
    throw std::invalid_argument("berry_curvature: unknown method");
}

namespace {

void check_grid(const MomentumGrid& grid) {
    if (grid.points_per_side < 8) {
        throw std::invalid_argument("plaquette grid too coarse: need at least 8 points per side");
    }
    if (!(grid.half_width > 0.0)) {
        throw std::invalid_argument("momentum grid half_width must be positive");
    }
}

double grid_coord(const MomentumGrid& grid, int i) {
    const double spacing = 2.0 * grid.half_width / (grid.points_per_side - 1);
    return -grid.half_width + spacing * i;
}

}  // namespace

PlaquetteCurvature plaquette_curvature(const MomentumGrid& grid, const PhysParams& params) {
    require_positive_gap(params, "plaquette_curvature");
    check_grid(grid);
    const int n = grid.points_per_side;
    const auto nz = static_cast<std::size_t>(n);
    const std::size_t cells = nz - 1;

    // states[(b * n + iy) * n + ix]
    std::vector<Spinor> states(4 * nz * nz);
    parallel_for(nz, [&](std::size_t iy) {
        const double py = grid_coord(grid, static_cast<int>(iy));
        for (std::size_t ix = 0; ix < nz; ++ix) {
            const double px = grid_coord(grid, static_cast<int>(ix));
            for (const auto label : kAllBlocks) {
                states[(label.index() * nz + iy) * nz + ix] = particle_state(label, px, py, params);
            }
        }
    });

    std::vector<double> flux(4 * cells * cells);
    parallel_for(cells, [&](std::size_t iy) {
        for (std::size_t ix = 0; ix < cells; ++ix) {
            for (std::size_t b = 0; b < 4; ++b) {
                auto at = [&](std::size_t x, std::size_t y) -> const Spinor& {
                    return states[(b * nz + y) * nz + x];
                };
                flux[(b * cells + iy) * cells + ix] =
                    plaquette_flux(at(ix, iy), at(ix + 1, iy), at(ix + 1, iy + 1), at(ix, iy + 1));
            }
        }
    });

    const double spacing = grid_coord(grid, 1) - grid_coord(grid, 0);
    PlaquetteCurvature out{};
    out.plaquette_area = spacing * spacing;
    out.samples.reserve(4 * cells * cells);
    for (std::size_t iy = 0; iy < cells; ++iy) {
        const double py = grid_coord(grid, static_cast<int>(iy)) + 0.5 * spacing;
        for (std::size_t ix = 0; ix < cells; ++ix) {
            const double px = grid_coord(grid, static_cast<int>(ix)) + 0.5 * spacing;
            for (const auto label : kAllBlocks) {
                const double f = flux[(label.index() * cells + iy) * cells + ix];
                const double value = flux_to_curvature(f, out.plaquette_area, params.hbar);
                out.samples.push_back({px, py, label, value});
                out.integrated[label.index()] += value * out.plaquette_area;
            }
        }
    }
    return out;
}

std::vector<CurvatureSample> analytic_curvature_grid(const MomentumGrid& grid,
                                                     const PhysParams& params) {
    require_positive_gap(params, "analytic_curvature_grid");
    check_grid(grid);
    const auto cells = static_cast<std::size_t>(grid.points_per_side - 1);
    const double spacing = grid_coord(grid, 1) - grid_coord(grid, 0);
    std::vector<CurvatureSample> out;
    out.reserve(4 * cells * cells);
    for (std::size_t iy = 0; iy < cells; ++iy) {
        const double py = grid_coord(grid, static_cast<int>(iy)) + 0.5 * spacing;
        for (std::size_t ix = 0; ix < cells; ++ix) {
            const double px = grid_coord(grid, static_cast<int>(ix)) + 0.5 * spacing;
            const auto f = curvature_analytic({px, py}, params);
            for (const auto label : kAllBlocks) out.push_back({px, py, label, f[label.index()]});
        }
    }
    return out;
}

void write_curvature_csv(std::span<const CurvatureSample> samples, std::ostream& out) {
    out << "p_x,p_y,block,value\n";
    for (const auto& s : samples) {
        out << format_decimal(s.px) << ',' << format_decimal(s.py) << ',' << s.block.name() << ','
            << format_decimal(s.value) << '\n';
    }
}

GaugePair zero_momentum_limit_residual(const PhysParams& params, Complex prefactor) {
    PhysParams spin_conserving = params;
    spin_conserving.lambda_r = 0.0;
    spin_conserving.b_field = 0.0;
    const auto field = km_gauge_field(spin_conserving);
    const auto fw = fw_gauge_field(MomentumPoint{}, spin_conserving, FwMethod::kAnalytic);
    return {field.constant[0] - prefactor * fw.x, field.constant[1] - prefactor * fw.y};
}

GaugePair zero_momentum_limit_check(const PhysParams& params) {
    const double d = params.delta_so;
    return zero_momentum_limit_residual(params,
                                        1i * d * d / (params.hbar * params.v_f * params.v_f));
}

}  // namespace shgauge
