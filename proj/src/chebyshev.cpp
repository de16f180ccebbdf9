#include "vsl/chebyshev.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace vsl::cheb {

Table evaluate(const Vector& xi, int kmax, int max_deriv) {
    assert(kmax >= 0);
    assert(max_deriv >= 0 && max_deriv <= 2);
    const auto m = xi.size();
    const auto cols = kmax + 1;

    Table t;
    t.value.resize(m, cols);
    if (max_deriv >= 1) t.d1.resize(m, cols);
    if (max_deriv >= 2) t.d2.resize(m, cols);

    for (Eigen::Index p = 0; p < m; ++p) {
        const double x = xi(p);
        double tkm1 = 1.0, tk = x;             // T_0, T_1
        double dkm1 = 0.0, dk = 1.0;           // T'_0, T'_1
        double skm1 = 0.0, sk = 0.0;           // T''_0, T''_1
        t.value(p, 0) = tkm1;
        if (kmax >= 1) t.value(p, 1) = tk;
        if (max_deriv >= 1) {
            t.d1(p, 0) = dkm1;
            if (kmax >= 1) t.d1(p, 1) = dk;
        }
        if (max_deriv >= 2) {
            t.d2(p, 0) = skm1;
            if (kmax >= 1) t.d2(p, 1) = sk;
        }
        for (int k = 1; k < kmax; ++k) {
            const double tkp1 = 2.0 * x * tk - tkm1;
            t.value(p, k + 1) = tkp1;
            if (max_deriv >= 1) {
                const double dkp1 = 2.0 * tk + 2.0 * x * dk - dkm1;
                t.d1(p, k + 1) = dkp1;
                if (max_deriv >= 2) {
                    const double skp1 = 4.0 * dk + 2.0 * x * sk - skm1;
                    t.d2(p, k + 1) = skp1;
                    skm1 = sk;
                    sk = skp1;
                }
                dkm1 = dk;
                dk = dkp1;
            }
            tkm1 = tk;
            tk = tkp1;
        }
    }
    return t;
}

Vector interior_nodes01(int m) {
    assert(m >= 1);
    Vector x(m);
    // (1 - cos(pi(2j-1)/(2m)))/2 written as sin^2 for monotone, symmetric values.
    for (int j = 1; j <= m; ++j) {
        const double s = std::sin(std::numbers::pi * (2.0 * j - 1.0) / (4.0 * m));
        x(j - 1) = s * s;
    }
    return x;
}

Vector lobatto_nodes01(int n) {
    assert(n >= 1);
    Vector x(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double s = std::sin(std::numbers::pi * j / (2.0 * n));
        x(j) = s * s;
    }
    x(0) = 0.0;
    x(n) = 1.0;
    return x;
}

} // namespace vsl::cheb
