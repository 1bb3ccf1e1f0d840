#pragma once

#include "cylqd/errors.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace cylqd {

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_n, Golub-free).
class GaussLegendreRule {
public:
    explicit GaussLegendreRule(int order);

    [[nodiscard]] int order() const { return static_cast<int>(nodes_.size()); }
    [[nodiscard]] std::span<const double> nodes() const { return nodes_; }
    [[nodiscard]] std::span<const double> weights() const { return weights_; }

    template <class F>
    double integrate(F&& f, double a, double b) const
    {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            sum += weights_[i] * f(mid + half * nodes_[i]);
        }
        return sum * half;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct QuadratureResult {
    double value;
    double error_estimate;
    int panels;
};

/// Adaptive bisection of Gauss-Legendre panels. The interval is first split
/// into `initial_panels`; a panel is accepted when its rule value agrees
/// with the sum over its two halves to rel_tol of the running total.
/// Throws NumericalError when max_panels is exceeded.
template <class F>
QuadratureResult adaptive_gauss_legendre(F&& f, double a, double b, const GaussLegendreRule& rule,
                                         double rel_tol, int initial_panels = 1, int max_panels = 20000)
{
    struct Panel {
        double a;
        double b;
        double value;
    };
    std::vector<Panel> stack;
    double rough_total = 0.0;
    const double width = (b - a) / initial_panels;
    for (int i = initial_panels - 1; i >= 0; --i) {
        const double pa = a + i * width;
        const double pb = i + 1 == initial_panels ? b : a + (i + 1) * width;
        const double v = rule.integrate(f, pa, pb);
        rough_total += std::abs(v);
        stack.push_back({pa, pb, v});
    }

    double total = 0.0;
    double err = 0.0;
    int panels = 0;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (p.a + p.b);
        const double left = rule.integrate(f, p.a, mid);
        const double right = rule.integrate(f, mid, p.b);
        const double diff = std::abs(left + right - p.value);
        if (diff <= rel_tol * rough_total || (p.b - p.a) <= 1e-12 * (b - a)) {
            total += left + right;
            err += diff;
            ++panels;
            continue;
        }
        if (panels + static_cast<int>(stack.size()) + 2 > max_panels) {
            throw NumericalError("adaptive_gauss_legendre: panel cap reached on [" + std::to_string(a) + ", "
                                 + std::to_string(b) + "], last panel error " + std::to_string(diff));
        }
        stack.push_back({mid, p.b, right});
        stack.push_back({p.a, mid, left});
    }
    return {total, err, panels};
}

} // namespace cylqd
