#pragma once

#include "vsl/types.hpp"

namespace vsl::cheb {

/// Values and first two derivatives of T_0..T_kmax on [-1,1].
/// Row p of each matrix holds the table for point xi(p).
struct Table {
    Matrix value; ///< T_k(xi)
    Matrix d1;    ///< T_k'(xi)
    Matrix d2;    ///< T_k''(xi)
};

/// Evaluates T_0..T_kmax and derivatives by the three-term recurrences
///   T_{k+1}  = 2 xi T_k  - T_{k-1}
///   T'_{k+1} = 2 T_k + 2 xi T'_k  - T'_{k-1}
///   T''_{k+1}= 4 T'_k + 2 xi T''_k - T''_{k-1}.
/// max_deriv in {0,1,2} selects which tables are filled (others stay 0x0).
Table evaluate(const Vector& xi, int kmax, int max_deriv = 2);

/// m interior (roots-family) nodes mapped to (0,1), strictly ascending.
Vector interior_nodes01(int m);

/// n+1 extrema (Lobatto) nodes on [0,1], strictly ascending.
/// Endpoints are exactly 0 and 1; the grid is symmetric: x_j + x_{n-j} = 1.
Vector lobatto_nodes01(int n);

} // namespace vsl::cheb
