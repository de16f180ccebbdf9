#pragma once

#include <vector>

#include "vsl/types.hpp"

namespace vsl::quad {

/// One-dimensional quadrature rule on an interval.
struct Rule {
    Vector nodes;
    Vector weights;
};

/// Gauss-Legendre rule of the given order mapped to [a,b].
/// Nodes are Legendre roots found by Newton iteration from Chebyshev initial
/// guesses, converged to 1e-15; weights are 2/((1-z^2) P'(z)^2) before the
/// affine map. Exact for polynomials of degree <= 2*order-1.
Rule gauss_legendre(int order, double a = 0.0, double b = 1.0);

/// Tensor product of 1D rules. coords is M x d with the last axis fastest;
/// weights are the products of the per-axis weights in the same order.
struct TensorRule {
    Matrix coords;
    Vector weights;
};

TensorRule tensor(const std::vector<Rule>& axes);

/// Tensor grid of arbitrary per-axis coordinates, last axis fastest.
Matrix tensor_grid(const std::vector<Vector>& axes);

} // namespace vsl::quad
