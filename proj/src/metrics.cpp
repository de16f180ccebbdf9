#include "vsl/metrics.hpp"

#include <cassert>
#include <cmath>

#include "vsl/errors.hpp"

namespace vsl::metrics {

ErrorReport relative_errors(const Vector& u_num, const Vector& u_exact,
                            const Vector* grid_weights) {
    if (u_num.size() != u_exact.size())
        throw ConfigError("relative_errors: field lengths differ");
    if (u_exact.size() == 0 || u_exact.norm() == 0.0)
        throw ConfigError("relative_errors: exact field has zero norm");
    const Vector diff = u_num - u_exact;
    ErrorReport report;
    if (grid_weights != nullptr) {
        assert(grid_weights->size() == u_num.size());
        const double num = grid_weights->dot(diff.cwiseAbs2());
        const double den = grid_weights->dot(u_exact.cwiseAbs2());
        report.l2_rel = std::sqrt(num / den);
    } else {
        report.l2_rel = diff.norm() / u_exact.norm();
    }
    report.max_abs = diff.lpNorm<Eigen::Infinity>();
    report.linf_rel = report.max_abs / u_exact.lpNorm<Eigen::Infinity>();
    return report;
}

Vector uniform_grid(int count) {
    if (count < 2) throw ConfigError("uniform_grid: need at least 2 points");
    return Vector::LinSpaced(count, 0.0, 1.0);
}

Vector trapezoid_weights(int count) {
    if (count < 2) throw ConfigError("trapezoid_weights: need at least 2 points");
    const double h = 1.0 / (count - 1);
    Vector w = Vector::Constant(count, h);
    w[0] = 0.5 * h;
    w[count - 1] = 0.5 * h;
    return w;
}

} // namespace vsl::metrics
