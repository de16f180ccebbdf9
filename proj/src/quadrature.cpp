#include "vsl/quadrature.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace vsl::quad {

namespace {

/// P_n(z) and P_n'(z) by the Legendre three-term recurrence.
void legendre(int n, double z, double& p, double& dp) {
    double pm1 = 1.0, pk = z;
    for (int k = 1; k < n; ++k) {
        const double pk1 = ((2.0 * k + 1.0) * z * pk - k * pm1) / (k + 1.0);
        pm1 = pk;
        pk = pk1;
    }
    p = pk;
    // derivative identity: (1-z^2) P_n' = n (P_{n-1} - z P_n)
    dp = n * (pm1 - z * pk) / (1.0 - z * z);
}

} // namespace

Rule gauss_legendre(int order, double a, double b) {
    assert(order >= 1);
    Rule r;
    r.nodes.resize(order);
    r.weights.resize(order);

    if (order == 1) {
        r.nodes(0) = 0.0;
        r.weights(0) = 2.0;
    } else {
        for (int q = 1; q <= order; ++q) {
            // Chebyshev-root initial guess, refined by Newton on P_order.
            double z = std::cos(std::numbers::pi * (q - 0.25) / (order + 0.5));
            double p = 0.0, dp = 1.0;
            for (int it = 0; it < 100; ++it) {
                legendre(order, z, p, dp);
                const double dz = p / dp;
                z -= dz;
                if (std::abs(dz) <= 1e-15) break;
            }
            legendre(order, z, p, dp);
            r.nodes(order - q) = z; // cos ordering is descending; store ascending
            r.weights(order - q) = 2.0 / ((1.0 - z * z) * dp * dp);
        }
    }

    // Affine map [-1,1] -> [a,b].
    const double half = 0.5 * (b - a);
    for (int q = 0; q < order; ++q) {
        r.nodes(q) = a + half * (r.nodes(q) + 1.0);
        r.weights(q) *= half;
    }
    return r;
}

Matrix tensor_grid(const std::vector<Vector>& axes) {
    assert(!axes.empty());
    Eigen::Index total = 1;
    for (const auto& ax : axes) total *= ax.size();
    const auto d = static_cast<Eigen::Index>(axes.size());

    Matrix coords(total, d);
    for (Eigen::Index flat = 0; flat < total; ++flat) {
        Eigen::Index rem = flat;
        for (Eigen::Index a = d - 1; a >= 0; --a) {
            const auto n = axes[a].size();
            coords(flat, a) = axes[a](rem % n);
            rem /= n;
        }
    }
    return coords;
}

TensorRule tensor(const std::vector<Rule>& axes) {
    TensorRule t;
    std::vector<Vector> nodes;
    nodes.reserve(axes.size());
    for (const auto& ax : axes) nodes.push_back(ax.nodes);
    t.coords = tensor_grid(nodes);

    const auto total = t.coords.rows();
    const auto d = static_cast<Eigen::Index>(axes.size());
    t.weights = Vector::Ones(total);
    for (Eigen::Index flat = 0; flat < total; ++flat) {
        Eigen::Index rem = flat;
        for (Eigen::Index a = d - 1; a >= 0; --a) {
            const auto n = axes[a].weights.size();
            t.weights(flat) *= axes[a].weights(rem % n);
            rem /= n;
        }
    }
    return t;
}

} // namespace vsl::quad
