#include "vsl/basis.hpp"

#include <cassert>
#include <cmath>

#include "vsl/chebyshev.hpp"

namespace vsl::basis {

namespace {

constexpr double kEndpointSnap = 1e-12;

Vector clamp_to_unit_interval(const Vector& x) {
    Vector out = x;
    for (Eigen::Index p = 0; p < out.size(); ++p) {
        if (std::abs(out(p)) <= kEndpointSnap) out(p) = 0.0;
        if (std::abs(out(p) - 1.0) <= kEndpointSnap) out(p) = 1.0;
    }
    return out;
}

} // namespace

Block dirichlet_modes(const Vector& x, int n, int max_deriv) {
    assert(n >= 1);
    const Vector xc = clamp_to_unit_interval(x);
    const Vector xi = 2.0 * xc.array() - 1.0;
    const cheb::Table t = cheb::evaluate(xi, n + 1, max_deriv);

    Block b;
    b.value = t.value.middleCols(2, n) - t.value.leftCols(n);
    // chain rule for xi = 2x - 1: one factor 2 per derivative order
    if (max_deriv >= 1) b.d1 = 2.0 * (t.d1.middleCols(2, n) - t.d1.leftCols(n));
    if (max_deriv >= 2) b.d2 = 4.0 * (t.d2.middleCols(2, n) - t.d2.leftCols(n));
    return b;
}

Block time_modes(const Vector& t, int n, int max_deriv) {
    assert(n >= 1);
    const Vector tc = clamp_to_unit_interval(t);
    const Vector xi = 2.0 * tc.array() - 1.0;
    const cheb::Table tab = cheb::evaluate(xi, n - 1, max_deriv);

    Block b;
    b.value = tab.value;
    if (max_deriv >= 1) b.d1 = 2.0 * tab.d1;
    if (max_deriv >= 2) b.d2 = 4.0 * tab.d2;
    return b;
}

namespace {

/// Assembles one feature matrix as the row-wise product of the selected
/// per-axis columns; deriv_axis (or -1) picks which factor differentiates.
Matrix tensor_product(const Shape& s, const std::vector<const Block*>& blocks,
                      const std::vector<int>& mode_counts, int deriv_axis, int deriv_order) {
    const auto rows = blocks[0]->value.rows();
    Matrix out(rows, s.size());
    const int axes = static_cast<int>(blocks.size());
    std::vector<int> idx(axes, 0);
    for (int col = 0; col < s.size(); ++col) {
        // decode flattened index, last axis fastest
        int rem = col;
        for (int a = axes - 1; a >= 0; --a) {
            idx[a] = rem % mode_counts[a];
            rem /= mode_counts[a];
        }
        auto factor = [&](int a) -> decltype(auto) {
            if (a == deriv_axis) return deriv_order == 2 ? blocks[a]->d2.col(idx[a]) : blocks[a]->d1.col(idx[a]);
            return blocks[a]->value.col(idx[a]);
        };
        auto prod = factor(0).eval();
        for (int a = 1; a < axes; ++a) prod = prod.cwiseProduct(factor(a)).eval();
        out.col(col) = prod;
    }
    return out;
}

} // namespace

Features features(const Shape& s, const Matrix& coords, const DerivRequest& req) {
    assert(coords.cols() == s.dims());
    const int max_space_deriv = (req.dxx || req.dyy) ? 2 : ((req.dx || req.dy) ? 1 : 0);

    std::vector<Block> storage;
    storage.reserve(3);
    std::vector<const Block*> blocks;
    std::vector<int> counts;
    int axis = 0;
    const int x_axis = axis;
    storage.push_back(dirichlet_modes(coords.col(axis++), s.nx, max_space_deriv));
    counts.push_back(s.nx);
    int y_axis = -1;
    if (s.has_y()) {
        y_axis = axis;
        storage.push_back(dirichlet_modes(coords.col(axis++), s.ny, max_space_deriv));
        counts.push_back(s.ny);
    }
    int t_axis = -1;
    if (s.has_time()) {
        t_axis = axis;
        storage.push_back(time_modes(coords.col(axis++), s.nt, req.dt ? 1 : 0));
        counts.push_back(s.nt);
    }
    for (const auto& b : storage) blocks.push_back(&b);

    Features f;
    f.phi = tensor_product(s, blocks, counts, -1, 0);
    if (req.dx) f.dx = tensor_product(s, blocks, counts, x_axis, 1);
    if (req.dxx) f.dxx = tensor_product(s, blocks, counts, x_axis, 2);
    if (req.dy) f.dy = tensor_product(s, blocks, counts, y_axis, 1);
    if (req.dyy) f.dyy = tensor_product(s, blocks, counts, y_axis, 2);
    if (req.dt) f.dt = tensor_product(s, blocks, counts, t_axis, 1);
    return f;
}

Vector evaluate(const Shape& s, const Matrix& coords, const Vector& c) {
    assert(c.size() == s.size());
    return features(s, coords).phi * c;
}

} // namespace vsl::basis
