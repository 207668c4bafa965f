#include "fracbdf/quadrature.hpp"

#include "fracbdf/errors.hpp"

#include <cmath>
#include <numbers>

namespace fracbdf {

QuadratureRule gauss_legendre_unit(std::size_t Q) {
    if (Q == 0) throw ParameterError("Gauss-Legendre rule needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(Q);
    rule.weights.resize(Q);
    const double n = static_cast<double>(Q);
    for (std::size_t i = 0; i < (Q + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t j = 2; j <= Q; ++j) {
                const double jj = static_cast<double>(j);
                const double p2 = ((2.0 * jj - 1.0) * x * p1 - (jj - 1.0) * p0) / jj;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map [-1, 1] to (0, 1); nodes ascending.
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.weights[i] = 0.5 * w;
        rule.nodes[Q - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[Q - 1 - i] = 0.5 * w;
    }
    return rule;
}

}  // namespace fracbdf
