#pragma once

#include <vector>

#include "vsl/types.hpp"

namespace vsl::basis {

/// Shape of the tensor-product trial space. ny == 0 / nt == 0 mean the
/// corresponding axis is absent; nx is always present.
struct Shape {
    int nx = 0;
    int ny = 0;
    int nt = 0;

    bool has_y() const { return ny > 0; }
    bool has_time() const { return nt > 0; }
    int dims() const { return 1 + (has_y() ? 1 : 0) + (has_time() ? 1 : 0); }
    int size() const { return nx * (has_y() ? ny : 1) * (has_time() ? nt : 1); }

    /// Flattened mode index; absent axes collapse. The time index runs
    /// fastest and the x index slowest.
    int flatten(int i, int j, int m) const {
        const int nyy = has_y() ? ny : 1;
        const int ntt = has_time() ? nt : 1;
        return m + ntt * (j + nyy * i);
    }
};

/// Column block of one 1D mode family evaluated at a set of points:
/// value(p,k), d1(p,k), d2(p,k) for mode k at point p.
struct Block {
    Matrix value;
    Matrix d1;
    Matrix d2;
};

/// Boundary-vanishing spatial modes phi_k(x) = T_{k+2}(2x-1) - T_k(2x-1),
/// k = 0..n-1, on [0,1]. Coordinates within 1e-12 of an endpoint are clamped
/// to it first, which makes the boundary rows exactly zero.
Block dirichlet_modes(const Vector& x, int n, int max_deriv = 2);

/// Unconstrained temporal modes chi_m(t) = T_m(2t-1), m = 0..n-1, on [0,1].
Block time_modes(const Vector& t, int n, int max_deriv = 1);

/// Which derivative matrices to assemble.
struct DerivRequest {
    bool dx = false, dxx = false;
    bool dy = false, dyy = false;
    bool dt = false;
};

/// Feature matrices of the flattened tensor basis at arbitrary nodes.
/// coords is M x dims in axis order x [, y][, t]; each matrix is M x size.
/// A derivative matrix replaces exactly one 1D factor by its derivative.
struct Features {
    Matrix phi;
    Matrix dx, dxx;
    Matrix dy, dyy;
    Matrix dt;
};

Features features(const Shape& s, const Matrix& coords, const DerivRequest& req = {});

/// u(nodes) = phi(nodes) * c without retaining the feature matrix.
Vector evaluate(const Shape& s, const Matrix& coords, const Vector& c);

} // namespace vsl::basis
