#pragma once

#include <cstddef>
#include <vector>

namespace fracbdf {

/// Nodes and weights of a quadrature rule on (0, 1).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Q-point Gauss-Legendre rule mapped to (0, 1). Exact for polynomials of degree 2Q - 1.
QuadratureRule gauss_legendre_unit(std::size_t Q = 16);

}  // namespace fracbdf
