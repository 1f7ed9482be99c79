#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "oracles/oracles.hpp"
#include "shgauge/gauge_fields.hpp"
#include "shgauge/hamiltonians.hpp"

using namespace shgauge;
using namespace std::complex_literals;
using oracle::CMatrix;
using oracle::op;

namespace {

PhysParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0);
    PhysParams p;
    p.v_f = 0.5 + u(rng);
    p.hbar = 0.5 + u(rng);
    p.e_charge = 0.5 + u(rng);
    p.delta_so = u(rng);
    p.lambda_r = u(rng);
    p.b_field = u(rng);
    return p;
}

MomentumPoint random_p(std::mt19937_64& rng, const PhysParams& p, double r = 3.0) {
    std::uniform_real_distribution<double> u(-r, r);
    const double scale = p.delta_so / p.v_f;
    return {u(rng) * scale, u(rng) * scale};
}

double scale_of(const PhysParams& p) { return p.delta_so / p.v_f; }

// A_x, A_y built directly from Pauli products at position (x, y).
std::array<CMatrix, 2> oracle_gauge(const PhysParams& p, double x, double y) {
    const double d = p.delta_so, v = p.v_f, lr = p.lambda_r, eb = p.e_charge * p.b_field;
    CMatrix ax = (1i * d / (2 * v)) * op('z', '1', 'y') - (lr / v) * op('y', '1', '1') +
                 (eb / (2 * v)) * y * op('1', 'z', '1');
    CMatrix ay = -(1i * d / (2 * v)) * op('z', 'z', 'x') + (lr / v) * op('x', '1', '1') -
                 (eb / (2 * v)) * x * op('1', 'z', '1');
    return {ax, ay};
}

// F_xy by central differences in position plus the commutator, at (x, y).
CMatrix oracle_field_strength(const PhysParams& p, double x, double y) {
    const double h = 1e-3;
    const CMatrix dx_ay = (oracle_gauge(p, x + h, y)[1] - oracle_gauge(p, x - h, y)[1]) / (2 * h);
    const CMatrix dy_ax = (oracle_gauge(p, x, y + h)[0] - oracle_gauge(p, x, y - h)[0]) / (2 * h);
    const auto a = oracle_gauge(p, x, y);
    return dx_ay - dy_ax - (1i / p.hbar) * (a[0] * a[1] - a[1] * a[0]);
}

}  // namespace

TEST_CASE("gauge potential components") {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 20; ++n) {
        const auto p = random_params(rng);
        const auto field = km_gauge_field(p);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        const double x = u(rng), y = u(rng);
        const auto ref = oracle_gauge(p, x, y);
        for (int i = 0; i < 2; ++i) {
            CHECK(oracle::max_abs(oracle::to_eigen(field.at(i, x, y)) - ref[static_cast<std::size_t>(i)]) < 1e-14);
        }
    }

    PhysParams p;
    p.delta_so = 1.2;
    p.v_f = 0.6;
    auto f = km_gauge_field(p);
    CHECK(max_abs_diff(f.constant[0], (1i * 1.0) * ops::sigma(Axis::kY) * ops::spin(Axis::kZ)) < 1e-15);
    CHECK(max_abs_diff(f.constant[1], (-1i * 1.0) * ops::sigma(Axis::kX) * ops::tau_z() * ops::spin(Axis::kZ)) <
          1e-15);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(f.slope[i][j].max_abs() == 0.0);

    p = PhysParams{};
    p.delta_so = 0.0;
    p.b_field = 0.8;
    p.v_f = 2.0;
    f = km_gauge_field(p);
    CHECK(max_abs_diff(f.slope[0][1], 0.2 * ops::tau_z()) < 1e-15);
    CHECK(max_abs_diff(f.slope[1][0], -0.2 * ops::tau_z()) < 1e-15);
    CHECK(f.constant[0].max_abs() == 0.0);
}

TEST_CASE("only the combination alpha.A is Hermitian") {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 20; ++n) {
        auto p = random_params(rng);
        const auto field = km_gauge_field(p);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        const double x = u(rng), y = u(rng);
        const auto mom = random_p(rng, p);
        const auto h = kinematic_hamiltonian(field, p, mom, x, y);
        CHECK(h.is_hermitian(1e-13));

        // Oracle: momentum-space Hamiltonian plus the symmetric-gauge term.
        const CMatrix hb = -(p.e_charge * p.b_field / 2.0) * (y * op('1', '1', 'x') - x * op('1', 'z', 'y'));
        const CMatrix ref = oracle::km_hamiltonian(p.v_f, p.delta_so, p.lambda_r, mom.px, mom.py) + hb;
        CHECK(oracle::max_abs(oracle::to_eigen(h) - ref) < 1e-13);

        // The Δ parts of A_i are anti-Hermitian.
        const auto ax = field.at(0, x, y);
        const auto anti = 0.5 * (ax - ax.adjoint());
        CHECK(anti.max_abs() == doctest::Approx(p.delta_so / (2.0 * p.v_f)).epsilon(1e-13));

        p.delta_so = 0.0;
        const auto hermitian_field = km_gauge_field(p);
        CHECK(hermitian_field.at(0, x, y).is_hermitian(1e-14));
        CHECK(hermitian_field.at(1, x, y).is_hermitian(1e-14));
    }
}

TEST_CASE("field strength agrees with a position finite-difference oracle") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 30; ++n) {
        const auto p = random_params(rng);
        const auto f = field_strength(km_gauge_field(p), p);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        const auto ref = oracle_field_strength(p, u(rng), u(rng));
        CHECK(oracle::max_abs(oracle::to_eigen(f) - ref) < 1e-10);
    }
}

TEST_CASE("field strength closed form without magnetic field") {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 50; ++n) {
        auto p = random_params(rng);
        p.b_field = 0.0;
        CHECK(max_abs_diff(field_strength(km_gauge_field(p), p), field_strength_closed_form(p)) < 1e-12);
    }
    PhysParams p;
    p.delta_so = 1.5;
    p.v_f = 0.7;
    p.hbar = 1.3;
    const auto expected = -(p.delta_so * p.delta_so / (2 * p.hbar * p.v_f * p.v_f)) * ops::sigma(Axis::kZ) * ops::tau_z();
    CHECK(max_abs_diff(field_strength(km_gauge_field(p), p), expected) < 1e-14);
}

TEST_CASE("symmetric-gauge curl has the opposite sign of the closed-form magnetic term") {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 20; ++n) {
        const auto p = random_params(rng);
        const auto computed = field_strength(km_gauge_field(p), p);
        const auto closed = field_strength_closed_form(p);
        const double eb_v = p.e_charge * p.b_field / p.v_f;
        CHECK(max_abs_diff(closed - computed, (2.0 * eb_v) * ops::tau_z()) < 1e-12);
    }
    PhysParams p;
    p.delta_so = 0.0;
    p.b_field = 1.0;
    CHECK(max_abs_diff(field_strength(km_gauge_field(p), p), -1.0 * ops::tau_z()) < 1e-15);
    CHECK(max_abs_diff(field_strength_closed_form(p), ops::tau_z()) < 1e-15);
}

TEST_CASE("field strength is Hermitian only when delta_so * lambda_r = 0") {
    std::mt19937_64 rng(6);
    for (int n = 0; n < 20; ++n) {
        auto p = random_params(rng);
        const auto f = field_strength(km_gauge_field(p), p);
        const auto anti = 0.5 * (f - f.adjoint());
        const auto mixed = (1i * p.delta_so * p.lambda_r / (p.hbar * p.v_f * p.v_f)) *
                           (ops::sigma(Axis::kY) * ops::spin(Axis::kY) +
                            ops::sigma(Axis::kX) * ops::tau_z() * ops::spin(Axis::kX));
        CHECK(max_abs_diff(anti, mixed) < 1e-12);
        p.lambda_r = 0.0;
        CHECK(field_strength(km_gauge_field(p), p).is_hermitian(1e-13));
    }
}

TEST_CASE("field strength rejects position-dependent remainders") {
    const PhysParams p;
    AffineGaugeField field{{OperatorMatrix::zero(8), ops::sigma(Axis::kY)},
                           {{{ops::sigma(Axis::kX), OperatorMatrix::zero(8)},
                             {OperatorMatrix::zero(8), OperatorMatrix::zero(8)}}}};
    CHECK_THROWS_AS((void)field_strength(field, p), std::domain_error);
}

TEST_CASE("Foldy-Wouthuysen unitary") {
    std::mt19937_64 rng(7);
    const auto chiral = ops::sigma(Axis::kZ) * ops::tau_z() * ops::spin(Axis::kZ);
    for (int n = 0; n < 50; ++n) {
        auto p = random_params(rng);
        p.delta_so += 0.1;
        p.lambda_r = p.b_field = 0.0;
        CHECK(max_abs_diff(fw_unitary({0.0, 0.0}, p), OperatorMatrix::identity(8)) < 1e-15);
        const auto mom = random_p(rng, p);
        const auto u = fw_unitary(mom, p);
        CHECK(u.is_unitary(1e-13));
        const CMatrix d = oracle::to_eigen(u) *
                          oracle::km_hamiltonian(p.v_f, p.delta_so, 0.0, mom.px, mom.py) *
                          oracle::to_eigen(u).adjoint();
        const double e = band_energy(mom, p);
        CHECK(oracle::max_abs(d - e * oracle::to_eigen(chiral)) < 1e-12 * e);

        const auto pp = positive_projector();
        const auto projected = pp * oracle::from_eigen(d) * pp;
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(projected(i, i).real() >= 0.0);
            CHECK(std::abs(projected(i, i).real() - pp(i, i).real() * e) < 1e-12 * e);
        }
    }
    CHECK(max_abs_diff(positive_projector() * positive_projector(), positive_projector()) == 0.0);
    CHECK(positive_projector().is_hermitian(0.0));
    CHECK(max_abs_diff(positive_projector(), OperatorMatrix::diagonal({1, 0, 0, 1, 0, 1, 1, 0})) == 0.0);
}

TEST_CASE("momentum-space gauge field") {
    std::mt19937_64 rng(8);
    for (int n = 0; n < 20; ++n) {
        auto p = random_params(rng);
        p.delta_so += 0.1;
        p.lambda_r = p.b_field = 0.0;
        const auto mom = random_p(rng, p);
        const auto a = fw_gauge_field(mom, p, FwMethod::kAnalytic);
        const double h = 1e-4 * std::max(mom.norm(), scale_of(p));
        const auto d = fw_gauge_field(mom, p, FwMethod::kDifferential, h);
        const double unit = p.hbar / scale_of(p);
        for (int i = 0; i < 2; ++i) {
            CHECK(max_abs_diff(a[i], d[i]) / unit < 1e-6);
            CHECK(a[i].is_hermitian(1e-12 * unit));
            CHECK(d[i].is_hermitian(1e-6 * unit));  // finite differences: Hermitian to O(h²)
        }
    }

    PhysParams p;
    p.delta_so = 1.7;
    p.v_f = 0.4;
    p.hbar = 1.2;
    const auto a0 = fw_gauge_field({0.0, 0.0}, p);
    const double c = p.hbar * p.v_f / (2.0 * p.delta_so);
    CHECK(max_abs_diff(a0.x, c * ops::sigma(Axis::kY) * ops::spin(Axis::kZ)) < 1e-15);
    CHECK(max_abs_diff(a0.y, -c * ops::sigma(Axis::kX) * ops::tau_z() * ops::spin(Axis::kZ)) < 1e-15);
}

TEST_CASE("pure-gauge residual vanishes at second order") {
    std::mt19937_64 rng(9);
    PhysParams p;
    p.delta_so = 0.9;
    p.v_f = 1.3;
    p.hbar = 0.7;
    const MomentumGaugeField field = [&](MomentumPoint q) { return fw_gauge_field(q, p); };
    const double unit = p.hbar * p.v_f * p.v_f / (p.delta_so * p.delta_so);
    for (int n = 0; n < 20; ++n) {
        const auto mom = random_p(rng, p);
        const double s = std::max(mom.norm(), scale_of(p));
        const double r2 = momentum_curvature_residual(field, mom, 1e-2 * s, p.hbar).max_abs() / unit;
        const double r3 = momentum_curvature_residual(field, mom, 1e-3 * s, p.hbar).max_abs() / unit;
        const double r5 = momentum_curvature_residual(field, mom, 1e-5 * s, p.hbar).max_abs() / unit;
        CHECK(r5 < 1e-8);
        CHECK(std::log10(r2 / r3) > 1.9);
    }

    // Abelian field with constant curl g.
    const double g = 0.35;
    const MomentumGaugeField abelian = [&](MomentumPoint q) {
        return GaugePair{(-q.py * g / 2.0) * OperatorMatrix::identity(8), (q.px * g / 2.0) * OperatorMatrix::identity(8)};
    };
    CHECK(max_abs_diff(momentum_curvature_residual(abelian, {0.3, 0.4}, 1e-3, 1.0), g * OperatorMatrix::identity(8)) <
          1e-12);
}

TEST_CASE("Berry connection is the projected gauge field") {
    std::mt19937_64 rng(10);
    PhysParams p;
    p.delta_so = 1.1;
    p.v_f = 0.8;
    p.hbar = 1.4;
    const auto zero = berry_connection({0.0, 0.0}, p);
    for (const auto& b : zero) CHECK((b[0] == 0.0 && b[1] == 0.0));
    const std::size_t slot[] = {0, 3, 5, 6};
    for (int n = 0; n < 20; ++n) {
        const auto mom = random_p(rng, p);
        const auto conn = berry_connection(mom, p);
        const auto a = fw_gauge_field(mom, p);
        for (int i = 0; i < 2; ++i) {
            const auto projected = project_positive(a[i]);
            for (auto label : kAllBlocks) {
                const auto s = slot[label.index()];
                CHECK(std::abs(projected(s, s) - conn[label.index()][static_cast<std::size_t>(i)]) < 1e-13);
            }
        }
        CHECK(conn[2][0] == -conn[0][0]);
        CHECK(conn[3][1] == -conn[1][1]);
    }
}

TEST_CASE("projected field has nonzero curvature equal to the Berry curvature") {
    std::mt19937_64 rng(11);
    PhysParams p;
    p.delta_so = 0.6;
    p.v_f = 1.5;
    p.hbar = 0.9;
    const MomentumGaugeField projected = [&](MomentumPoint q) {
        const auto a = fw_gauge_field(q, p);
        return GaugePair{project_positive(a.x), project_positive(a.y)};
    };
    const std::size_t slot[] = {0, 3, 5, 6};
    for (int n = 0; n < 10; ++n) {
        const auto mom = random_p(rng, p);
        const auto r = momentum_curvature_residual(projected, mom, 1e-5 * std::max(mom.norm(), scale_of(p)), p.hbar);
        const auto curv = berry_curvature(mom, p);
        for (auto label : kAllBlocks) {
            const auto s = slot[label.index()];
            CHECK(p.hbar * r(s, s).real() == doctest::Approx(curv[label.index()]).epsilon(1e-6));
        }
    }
}

TEST_CASE("Berry curvature methods") {
    PhysParams p;
    p.delta_so = 1.3;
    p.v_f = 0.9;
    p.hbar = 1.1;
    const auto at0 = berry_curvature({0.0, 0.0}, p);
    const double expected = -p.hbar * p.hbar * p.v_f * p.v_f / (2.0 * p.delta_so * p.delta_so);
    CHECK(at0[0] == doctest::Approx(expected).epsilon(1e-15));
    CHECK(at0[2] == doctest::Approx(-expected).epsilon(1e-15));

    std::mt19937_64 rng(12);
    for (int n = 0; n < 20; ++n) {
        const auto mom = random_p(rng, p);
        const auto exact = berry_curvature(mom, p, CurvatureMethod::kAnalytic);
        const auto fd = berry_curvature(mom, p, CurvatureMethod::kCurlFd);
        const auto plaq = berry_curvature(mom, p, CurvatureMethod::kPlaquette);
        for (std::size_t b = 0; b < 4; ++b) {
            CHECK(fd[b] == doctest::Approx(exact[b]).epsilon(1e-6));
            CHECK(plaq[b] == doctest::Approx(exact[b]).epsilon(1e-5));
        }
    }
}

TEST_CASE("plaquette grid integrates to the closed-form total") {
    PhysParams p;
    p.delta_so = 0.8;
    p.v_f = 1.2;
    p.hbar = 0.75;
    const double half = 5.0 * scale_of(p);
    const auto lattice = plaquette_curvature({half, 256}, p);
    const double total = oracle::inverse_cube_square_integral(p.v_f * half, p.delta_so);
    for (auto label : kAllBlocks) {
        const double expected = -label.spin_sign() * 0.5 * p.hbar * p.hbar * p.delta_so * total;
        CHECK(lattice.integrated[label.index()] == doctest::Approx(expected).epsilon(1e-3));
    }
    REQUIRE(lattice.samples.size() == 255u * 255u * 4u);
    const double cell = 2.0 * half / 255.0;
    CHECK(lattice.plaquette_area == doctest::Approx(cell * cell).epsilon(1e-14));

    // Pointwise comparison at plaquette centres.
    double worst = 0.0;
    for (const auto& s : lattice.samples) {
        const double exact = berry_curvature({s.px, s.py}, p)[s.block.index()];
        worst = std::max(worst, std::abs(s.value - exact) / std::abs(exact));
    }
    CHECK(worst < 1e-3);

    CHECK_THROWS_AS((void)plaquette_curvature({half, 7}, p), std::invalid_argument);
}

TEST_CASE("plaquette evaluation is deterministic") {
    const PhysParams p;
    const auto a = plaquette_curvature({3.0, 64}, p);
    const auto b = plaquette_curvature({3.0, 64}, p);
    CHECK(a.integrated == b.integrated);
}

TEST_CASE("curvature CSV") {
    const PhysParams p;
    const auto samples = analytic_curvature_grid({1.0, 8}, p);
    std::ostringstream out;
    write_curvature_csv(samples, out);
    const auto text = out.str();
    CHECK(text.rfind("p_x,p_y,block,value\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(samples.size() + 1));
    CHECK(samples.size() == 7u * 7u * 4u);
    CHECK(text.find("up_K,") != std::string::npos);
    CHECK(text.find("down_Kp,") != std::string::npos);
}

TEST_CASE("zero-momentum limit identity") {
    std::mt19937_64 rng(13);
    for (int n = 0; n < 20; ++n) {
        auto p = random_params(rng);
        p.delta_so += 0.2;
        const auto r = zero_momentum_limit_check(p);
        CHECK(r.x.max_abs() < 1e-12);
        CHECK(r.y.max_abs() < 1e-12);
        const auto wrong = zero_momentum_limit_residual(p, 1i * p.delta_so / (p.hbar * p.v_f * p.v_f));
        if (std::abs(p.delta_so - 1.0) > 0.05) CHECK(wrong.x.max_abs() > 1e-3);
    }
}
