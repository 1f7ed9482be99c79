#pragma once

#include <vector>

#include "shgauge/operator_matrix.hpp"

namespace shgauge {

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// 2×2 inputs use the trace/determinant closed form. Larger inputs are
/// diagonalized with cyclic Jacobi rotations on the real symmetric embedding
/// [[Re, −Im], [Im, Re]], stopping once the off-diagonal Frobenius norm drops
/// below 1e-13 relative to the matrix norm. Throws std::invalid_argument if
/// the input is not Hermitian to `hermiticity_tol`.
[[nodiscard]] std::vector<double> hermitian_eigenvalues(const OperatorMatrix& m,
                                                        double hermiticity_tol = kDefaultTolerance);

}  // namespace shgauge
