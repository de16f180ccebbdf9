#pragma once

#include <vector>

#include "vsl/types.hpp"

namespace vsl::metrics {

enum class EvalTime { None, Final, SpaceTimeMax };

struct ErrorReport {
    double l2_rel = 0.0;
    double linf_rel = 0.0;
    double max_abs = 0.0;
    std::vector<int> grid_shape;
    EvalTime eval_time = EvalTime::None;
};

/// Relative discrete errors on a shared test grid: root-mean-square ratio for
/// L², max ratio for L∞. Optional weights switch L² to a weighted quadratic
/// mean (trapezoid variant); the default is unweighted.
ErrorReport relative_errors(const Vector& u_num, const Vector& u_exact,
                            const Vector* grid_weights = nullptr);

/// count evenly spaced points on [0,1], both endpoints included.
Vector uniform_grid(int count);

/// Trapezoid weights matching uniform_grid(count).
Vector trapezoid_weights(int count);

} // namespace vsl::metrics
