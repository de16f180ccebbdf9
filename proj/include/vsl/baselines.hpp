#pragma once

#include <string>
#include <vector>

#include "vsl/errors.hpp"
#include "vsl/problems.hpp"
#include "vsl/types.hpp"

namespace vsl::baselines {

/// Chebyshev differentiation matrices on the ascending [0,1] Lobatto grid.
struct DiffMatrices {
    Vector nodes; ///< n+1 ascending Lobatto nodes including both endpoints
    Matrix d1;    ///< first derivative, units 1/length
    Matrix d2;    ///< second derivative, d1·d1
};

/// Builds the matrices for polynomial degree n (n+1 nodes).
DiffMatrices diff_matrices(int n);

/// Dense LU with partial pivoting. Factors once at construction; solve()
/// verifies the residual bound ‖Ax−b‖∞ ≤ 1e-10·(‖A‖∞‖x‖∞ + ‖b‖∞).
class LuSolver {
public:
    explicit LuSolver(Matrix a);
    Vector solve(const Vector& b) const;
    int size() const { return static_cast<int>(lu_.rows()); }

private:
    Matrix a_;  ///< original matrix, kept for the residual check
    Matrix lu_; ///< packed unit-lower / upper factors
    std::vector<int> perm_;
    double norm_a_ = 0.0;
};

/// One-shot factor-and-solve convenience wrapper.
Vector solve_dense(const Matrix& a, const Vector& b);

/// Solution sampled on the full tensor Lobatto grid; boundary entries are
/// exactly zero. 2D values are flattened with the last axis fastest.
struct NodalSolution {
    std::vector<Vector> axes;
    Vector values;
    int iterations = 0;
    std::vector<double> residual_history; ///< Newton ‖r‖∞ per accepted iterate
};

/// Thrown when damped Newton stalls or exhausts its iteration budget.
struct NewtonFailure : SolverError {
    NewtonFailure(const std::string& what, std::vector<double> history)
        : SolverError(what), residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

NodalSolution poisson_collocation_1d(int n);
NodalSolution poisson_collocation_2d(int n);

/// Crank–Nicolson to t = 1 with the implicit operator factored once.
NodalSolution crank_nicolson_1d(int n, int steps, const problems::Problem& prob);
NodalSolution crank_nicolson_2d(int n, int steps, const problems::Problem& prob);

/// Damped Newton from u = 0 with analytic Jacobians; step halving (at most 20
/// per iteration) enforces a strict ‖r‖∞ decrease;
/// converges to ‖r‖∞ ≤ 1e-11 within 50 iterations or throws NewtonFailure.
NodalSolution newton_burgers_1d(int n, const problems::Problem& prob);
NodalSolution newton_burgers_2d(int n, const problems::Problem& prob);

/// Second-form barycentric interpolation from Lobatto nodes; queries within
/// 1e-14 of a node return the nodal value directly.
Vector barycentric_eval(const Vector& nodes, const Vector& values, const Vector& queries);

/// Tensor-grid interpolation of 2D nodal data (two axis-by-axis passes);
/// input and output are flattened with the last axis fastest.
Vector barycentric_eval_2d(const Vector& nodes_x, const Vector& nodes_y,
                           const Vector& values, const Vector& qx, const Vector& qy);

} // namespace vsl::baselines
