#pragma once

#include <functional>

namespace shgauge {

struct QuadratureEstimate {
    double value;
    double error;     ///< sum of per-interval Richardson error estimates
    int evaluations;
};

/// Globally adaptive Simpson quadrature of f over [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below rel_tol·|value|. Each accepted interval contributes
/// its Richardson-extrapolated value. Throws std::runtime_error if
/// max_evaluations is exhausted first.
[[nodiscard]] QuadratureEstimate adaptive_simpson(const std::function<double(double)>& f, double a,
                                                  double b, double rel_tol,
                                                  int max_evaluations = 2'000'000);

}  // namespace shgauge
