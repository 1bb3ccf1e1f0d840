#pragma once

#include "cylqd/errors.hpp"

#include <cmath>
#include <utility>

namespace cylqd {

/// Brent's method (bisection / secant / inverse quadratic interpolation) on a
/// bracket [a, b] with f(a), f(b) of opposite sign. Stops when the bracket
/// half-width falls below xtol.
template <class F>
double brent_root(F&& f, double a, double b, double fa, double fb, double xtol, int max_iter = 200)
{
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0) == (fb < 0)) {
        throw NumericalError("brent_root: interval does not bracket a sign change");
    }
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int it = 0; it < max_iter; ++it) {
        if ((fb < 0) == (fc < 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * 2.220446049250313e-16 * std::abs(b) + 0.5 * xtol;
        const double half = 0.5 * (c - b);
        if (std::abs(half) <= tol || fb == 0.0) return b;
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * half * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * half * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = half;
                e = d;
            }
        } else {
            d = half;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : (half > 0 ? tol : -tol);
        fb = f(b);
    }
    throw NumericalError("brent_root: no convergence within iteration cap");
}

} // namespace cylqd
