#include "shgauge/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shgauge {

namespace {

constexpr double kOffDiagonalThreshold = 1e-13;
constexpr int kMaxSweeps = 100;

std::vector<double> eigenvalues_2x2(const OperatorMatrix& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean - radius, mean + radius};
}

// Cyclic Jacobi on a dense real symmetric n×n matrix (row-major).
std::vector<double> jacobi_symmetric(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
    double total = 0.0;
    for (double v : a) total += v * v;
    const double scale = std::max(1.0, std::sqrt(total));

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
        if (std::sqrt(off) <= kOffDiagonalThreshold * scale) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const OperatorMatrix& m, double hermiticity_tol) {
    if (!m.is_hermitian(hermiticity_tol)) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    }
    if (m.dim() == 2) return eigenvalues_2x2(m);

    const std::size_t n = m.dim();
    const std::size_t n2 = 2 * n;
    std::vector<double> emb(n2 * n2);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const Complex z = m(r, c);
            emb[r * n2 + c] = z.real();
            emb[r * n2 + n + c] = -z.imag();
            emb[(n + r) * n2 + c] = z.imag();
            emb[(n + r) * n2 + n + c] = z.real();
        }
    }
    // Every eigenvalue of the embedding appears twice.
    const auto doubled = jacobi_symmetric(std::move(emb), n2);
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return eig;
}

}  // namespace shgauge
