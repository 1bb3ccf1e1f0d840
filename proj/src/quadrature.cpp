#include "cylqd/quadrature.hpp"

namespace cylqd {

GaussLegendreRule::GaussLegendreRule(int order)
{
    if (order < 1 || order > 512) throw DomainError("GaussLegendreRule: order outside [1, 512]");
    const int n = order;
    nodes_.resize(n);
    weights_.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        nodes_[i] = -z;
        nodes_[n - 1 - i] = z;
        weights_[i] = weights_[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

} // namespace cylqd
