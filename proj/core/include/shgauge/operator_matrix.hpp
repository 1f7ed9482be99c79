#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace shgauge {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-12;

/// Dense complex square matrix of dimension 2, 4 or 8, stored row-major.
///
/// Values are immutable once constructed; every arithmetic operation returns
/// a fresh matrix.
class OperatorMatrix {
public:
    OperatorMatrix(std::size_t dim, std::vector<Complex> entries);

    static OperatorMatrix zero(std::size_t dim);
    static OperatorMatrix identity(std::size_t dim);
    static OperatorMatrix diagonal(std::span<const Complex> diag);
    static OperatorMatrix diagonal(std::initializer_list<double> diag);
    static OperatorMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    [[nodiscard]] std::span<const Complex> entries() const noexcept { return entries_; }

    [[nodiscard]] OperatorMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double max_abs() const;

    /// Diagonal block `index` of size `size` (block `index` starts at row index*size).
    [[nodiscard]] OperatorMatrix diagonal_block(std::size_t index, std::size_t size) const;

    [[nodiscard]] bool is_hermitian(double tol = kDefaultTolerance) const;
    [[nodiscard]] bool is_unitary(double tol = kDefaultTolerance) const;

    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(Complex s, const OperatorMatrix& a);
    friend OperatorMatrix operator*(const OperatorMatrix& a, Complex s) { return s * a; }
    friend OperatorMatrix operator/(const OperatorMatrix& a, Complex s) { return (1.0 / s) * a; }
    friend OperatorMatrix operator-(const OperatorMatrix& a) { return Complex{-1.0} * a; }

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

// Real scalars convert implicitly only through these overloads; keeps `2.0 * m` unambiguous.
inline OperatorMatrix operator*(double s, const OperatorMatrix& a) { return Complex{s} * a; }
inline OperatorMatrix operator*(const OperatorMatrix& a, double s) { return Complex{s} * a; }
inline OperatorMatrix operator/(const OperatorMatrix& a, double s) { return Complex{1.0 / s} * a; }

[[nodiscard]] double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);
[[nodiscard]] bool approx_equal(const OperatorMatrix& a, const OperatorMatrix& b,
                                double tol = kDefaultTolerance);

/// Two-factor Kronecker product a ⊗ b (dimensions multiply).
[[nodiscard]] OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

/// Block-diagonal assembly from equally sized blocks.
[[nodiscard]] OperatorMatrix block_diagonal(std::span<const OperatorMatrix> blocks);

// ---------------------------------------------------------------------------
// Pauli algebra on the 8-dimensional s ⊗ τ ⊗ σ space.
//
// Basis index = 4·i_s + 2·i_τ + i_σ, so the 2×2 diagonal blocks appear in the
// order (↑K, ↑K′, ↓K, ↓K′).
// ---------------------------------------------------------------------------

enum class Space { kSigma, kTau, kSpin };
enum class Axis { kX, kY, kZ };

struct SpaceIndex {
    Space space;
    Axis axis;
};

/// The bare 2×2 Pauli matrix.
[[nodiscard]] OperatorMatrix pauli2(Axis axis);

/// Pauli matrix of `idx` embedded in the 8×8 space. Only τ_z is supported for
/// the valley space; other τ axes throw std::invalid_argument.
[[nodiscard]] OperatorMatrix pauli_operator(SpaceIndex idx);

/// s ⊗ τ ⊗ σ Kronecker product of three 2×2 factors.
[[nodiscard]] OperatorMatrix kron3(const OperatorMatrix& s_part, const OperatorMatrix& tau_part,
                                   const OperatorMatrix& sigma_part);

enum class BracketKind { kCommutator, kAnticommutator };

/// AB − BA or AB + BA.
[[nodiscard]] OperatorMatrix bracket(BracketKind kind, const OperatorMatrix& a,
                                     const OperatorMatrix& b);

inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    return bracket(BracketKind::kCommutator, a, b);
}

namespace ops {
// Shorthands for the embedded operators used throughout the library.
inline OperatorMatrix sigma(Axis a) { return pauli_operator({Space::kSigma, a}); }
inline OperatorMatrix spin(Axis a) { return pauli_operator({Space::kSpin, a}); }
inline OperatorMatrix tau_z() { return pauli_operator({Space::kTau, Axis::kZ}); }
inline OperatorMatrix identity8() { return OperatorMatrix::identity(8); }
}  // namespace ops

}  // namespace shgauge
