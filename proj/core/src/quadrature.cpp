#include "mirrorfield/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "mirrorfield/errors.hpp"

namespace mirrorfield {

GaussLegendreRule gauss_legendre(std::size_t n) {
    if (n == 0) {
        throw OutOfRange("gauss_legendre: node count must be positive");
    }

    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Chebyshev-angle starting guess for the i-th root of P_n.
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        // Legendre recurrence: (j+1) P_{j+1} = (2j+1) z P_j - j P_{j-1}.
        const auto legendre_and_derivative = [n](double zz) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * zz * p1 - static_cast<double>(j) * p2) /
                     (static_cast<double>(j) + 1.0);
            }
            const double dp = static_cast<double>(n) * (zz * p0 - p1) / (zz * zz - 1.0);
            return std::pair<double, double>{p0, dp};
        };
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, d] = legendre_and_derivative(z);
            dp = d;
            const double dz = -p / d;
            z += dz;
            if (std::abs(dz) < 1e-15) {
                dp = legendre_and_derivative(z).second;
                break;
            }
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;  // odd rules have an exact central node
    }
    return rule;
}

} // namespace mirrorfield
