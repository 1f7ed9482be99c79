#include "shgauge/operator_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace shgauge {

namespace {

void check_dim(std::size_t dim) {
    if (dim != 2 && dim != 4 && dim != 8) {
        throw std::invalid_argument("OperatorMatrix: unsupported dimension " + std::to_string(dim));
    }
}

void check_same_dim(const OperatorMatrix& a, const OperatorMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
    }
}

}  // namespace

OperatorMatrix::OperatorMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim_);
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("OperatorMatrix: expected " + std::to_string(dim_ * dim_) +
                                    " entries, got " + std::to_string(entries_.size()));
    }
}

OperatorMatrix OperatorMatrix::zero(std::size_t dim) {
    return OperatorMatrix(dim, std::vector<Complex>(dim * dim));
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return OperatorMatrix(dim, std::move(e));
}

OperatorMatrix OperatorMatrix::diagonal(std::span<const Complex> diag) {
    const std::size_t n = diag.size();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
    return OperatorMatrix(n, std::move(e));
}

OperatorMatrix OperatorMatrix::diagonal(std::initializer_list<double> diag) {
    std::vector<Complex> d(diag.begin(), diag.end());
    return diagonal(std::span<const Complex>(d));
}

OperatorMatrix OperatorMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t n = rows.size();
    std::vector<Complex> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("OperatorMatrix::from_rows: ragged rows");
        e.insert(e.end(), row.begin(), row.end());
    }
    return OperatorMatrix(n, std::move(e));
}

OperatorMatrix OperatorMatrix::adjoint() const {
    std::vector<Complex> e(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) e[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
    return OperatorMatrix(dim_, std::move(e));
}

Complex OperatorMatrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i) t += entries_[i * dim_ + i];
    return t;
}

double OperatorMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

OperatorMatrix OperatorMatrix::diagonal_block(std::size_t index, std::size_t size) const {
    if (size == 0 || dim_ % size != 0 || (index + 1) * size > dim_) {
        throw std::out_of_range("OperatorMatrix::diagonal_block: block out of range");
    }
    std::vector<Complex> e(size * size);
    const std::size_t off = index * size;
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) e[r * size + c] = (*this)(off + r, off + c);
    return OperatorMatrix(size, std::move(e));
}

bool OperatorMatrix::is_hermitian(double tol) const {
    return max_abs_diff(*this, adjoint()) <= tol;
}

bool OperatorMatrix::is_unitary(double tol) const {
    return max_abs_diff(*this * adjoint(), identity(dim_)) <= tol;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    check_same_dim(a, b, "operator+");
    std::vector<Complex> e(a.entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries_[i];
    return OperatorMatrix(a.dim_, std::move(e));
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    check_same_dim(a, b, "operator-");
    std::vector<Complex> e(a.entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries_[i];
    return OperatorMatrix(a.dim_, std::move(e));
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    check_same_dim(a, b, "operator*");
    const std::size_t n = a.dim_;
    std::vector<Complex> e(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a.entries_[r * n + k];
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) e[r * n + c] += ark * b.entries_[k * n + c];
        }
    }
    return OperatorMatrix(n, std::move(e));
}

OperatorMatrix operator*(Complex s, const OperatorMatrix& a) {
    std::vector<Complex> e(a.entries_);
    for (auto& z : e) z *= s;
    return OperatorMatrix(a.dim_, std::move(e));
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
    check_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
    return m;
}

bool approx_equal(const OperatorMatrix& a, const OperatorMatrix& b, double tol) {
    return a.dim() == b.dim() && max_abs_diff(a, b) <= tol;
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    const std::size_t n = na * nb;
    std::vector<Complex> e(n * n);
    for (std::size_t ra = 0; ra < na; ++ra)
        for (std::size_t ca = 0; ca < na; ++ca)
            for (std::size_t rb = 0; rb < nb; ++rb)
                for (std::size_t cb = 0; cb < nb; ++cb)
                    e[(ra * nb + rb) * n + (ca * nb + cb)] = a(ra, ca) * b(rb, cb);
    return OperatorMatrix(n, std::move(e));
}

OperatorMatrix block_diagonal(std::span<const OperatorMatrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("block_diagonal: no blocks");
    const std::size_t b = blocks.front().dim();
    const std::size_t n = b * blocks.size();
    std::vector<Complex> e(n * n);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].dim() != b) throw std::invalid_argument("block_diagonal: unequal blocks");
        for (std::size_t r = 0; r < b; ++r)
            for (std::size_t c = 0; c < b; ++c) e[(k * b + r) * n + k * b + c] = blocks[k](r, c);
    }
    return OperatorMatrix(n, std::move(e));
}

OperatorMatrix pauli2(Axis axis) {
    using namespace std::complex_literals;
    switch (axis) {
        case Axis::kX: return OperatorMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        case Axis::kY: return OperatorMatrix::from_rows({{0.0, -1i}, {1i, 0.0}});
        case Axis::kZ: return OperatorMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    }
    throw std::invalid_argument("pauli2: bad axis");
}

OperatorMatrix pauli_operator(SpaceIndex idx) {
    const auto one = OperatorMatrix::identity(2);
    switch (idx.space) {
        case Space::kSigma: return kron3(one, one, pauli2(idx.axis));
        case Space::kSpin: return kron3(pauli2(idx.axis), one, one);
        case Space::kTau:
            if (idx.axis != Axis::kZ) {
                throw std::invalid_argument("pauli_operator: valley space supports only tau_z");
            }
            return kron3(one, pauli2(Axis::kZ), one);
    }
    throw std::invalid_argument("pauli_operator: bad space");
}

OperatorMatrix kron3(const OperatorMatrix& s_part, const OperatorMatrix& tau_part,
                     const OperatorMatrix& sigma_part) {
    if (s_part.dim() != 2 || tau_part.dim() != 2 || sigma_part.dim() != 2) {
        throw std::invalid_argument("kron3: every factor must be 2x2");
    }
    return kron(s_part, kron(tau_part, sigma_part));
}

OperatorMatrix bracket(BracketKind kind, const OperatorMatrix& a, const OperatorMatrix& b) {
    check_same_dim(a, b, "bracket");
    return kind == BracketKind::kCommutator ? a * b - b * a : a * b + b * a;
}

}  // namespace shgauge
