#include "shgauge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace shgauge {

namespace {

struct Panel {
    double a, b;
    double fa, fl, fm, fr, fb;  // f at a, (a+m)/2, m, (m+b)/2, b
    double value;
    double error;
};

Panel make_panel(double a, double b, double fa, double fm, double fb,
                 const std::function<double(double)>& f, int& evals) {
    const double m = 0.5 * (a + b);
    const double fl = f(0.5 * (a + m));
    const double fr = f(0.5 * (m + b));
    evals += 2;
    const double h = b - a;
    const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
    const double halves = h / 12.0 * (fa + 4.0 * fl + 2.0 * fm + 4.0 * fr + fb);
    const double diff = halves - whole;
    return {a, b, fa, fl, fm, fr, fb, halves + diff / 15.0, std::abs(diff) / 15.0};
}

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.a > y.a;
    }
};

}  // namespace

QuadratureEstimate adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, int max_evaluations) {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("adaptive_simpson: rel_tol must be positive");
    if (a == b) return {0.0, 0.0, 0};
    if (!(a < b)) throw std::invalid_argument("adaptive_simpson: requires a < b");

    // Start from a few uniform panels so a symmetric integrand cannot fake
    // convergence on the first Simpson comparison.
    constexpr int kInitialPanels = 8;
    std::vector<double> nodes(2 * kInitialPanels + 1);
    for (int i = 0; i <= 2 * kInitialPanels; ++i) {
        nodes[static_cast<std::size_t>(i)] = f(a + (b - a) * i / (2.0 * kInitialPanels));
    }
    int evals = 2 * kInitialPanels + 1;
    std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
    double total = 0.0;
    double error = 0.0;
    for (int i = 0; i < kInitialPanels; ++i) {
        const double lo = a + (b - a) * i / kInitialPanels;
        const double hi = i + 1 == kInitialPanels ? b : a + (b - a) * (i + 1) / kInitialPanels;
        const auto k = static_cast<std::size_t>(2 * i);
        const Panel p = make_panel(lo, hi, nodes[k], nodes[k + 1], nodes[k + 2], f, evals);
        total += p.value;
        error += p.error;
        queue.push(p);
    }

    while (error > rel_tol * std::abs(total)) {
        if (evals >= max_evaluations) {
            throw std::runtime_error("adaptive_simpson: evaluation budget exhausted");
        }
        const Panel worst = queue.top();
        queue.pop();
        const double m = 0.5 * (worst.a + worst.b);
        const Panel left = make_panel(worst.a, m, worst.fa, worst.fl, worst.fm, f, evals);
        const Panel right = make_panel(m, worst.b, worst.fm, worst.fr, worst.fb, f, evals);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    // Re-sum in position order so the result does not carry the running-sum drift.
    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    QuadratureEstimate out{0.0, 0.0, evals};
    for (const auto& p : panels) {
        out.value += p.value;
        out.error += p.error;
    }
    return out;
}

}  // namespace shgauge
