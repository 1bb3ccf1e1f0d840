#include "cylqd/oracle/highprec.hpp"

#include "cylqd/specfun.hpp"

#include <cmath>
#include <cstdio>

namespace cylqd::oracle {

SpecfunCertification certify_specfun(int points, double tolerance)
{
    constexpr int orders = 26;
    const int per_order = (points + orders - 1) / orders;
    SpecfunCertification out{0, 0, 0.0, 0.0, {}};
    double worst_scaled = 0.0;

    auto record = [&](char kind, int n, double x, double err, double limit) {
        if (err > limit) ++out.failures;
        if (err / limit > worst_scaled) {
            worst_scaled = err / limit;
            char buf[96];
            std::snprintf(buf, sizeof buf, "%c_%d(%.17g): error %.3e", kind, n, x, err);
            out.worst_case = buf;
        }
    };

    for (int n = 0; n < orders; ++n) {
        for (int i = 1; i <= per_order; ++i) {
            const double t = static_cast<double>(i) / per_order;
            const double x = 1e-3 + (200.0 - 1e-3) * t * t * t;

            const double jr = highprec_bessel(BesselKind::J, n, x).value.to_double();
            const double j = specfun::bessel_j(n, x);
            if (std::abs(jr) > 1e-10) {
                const double e = std::abs(j - jr) / std::abs(jr);
                out.worst_j = std::max(out.worst_j, e);
                record('J', n, x, e, tolerance);
            } else {
                const double e = std::abs(j - jr);
                out.worst_j = std::max(out.worst_j, e);
                record('J', n, x, e, 1e-14);
            }

            const double kr = highprec_bessel(BesselKind::K, n, x).value.to_double();
            const double k = specfun::bessel_k(n, x);
            const double e = std::abs(k - kr) / kr;
            out.worst_k = std::max(out.worst_k, e);
            record('K', n, x, e, tolerance);
            ++out.points;
        }
    }
    return out;
}

} // namespace cylqd::oracle
