#include "vsl/baselines.hpp"

#include <cassert>
#include <cmath>
#include <numeric>

#include "vsl/chebyshev.hpp"

namespace vsl::baselines {

namespace {

double sign_flip(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Interior tensor coordinates over two Lobatto axes, y fastest.
Matrix interior_coords_2d(const Vector& nodes, int n) {
    const int ni = n - 1;
    Matrix coords(ni * ni, 2);
    for (int ix = 0; ix < ni; ++ix)
        for (int iy = 0; iy < ni; ++iy) {
            coords(ix * ni + iy, 0) = nodes[ix + 1];
            coords(ix * ni + iy, 1) = nodes[iy + 1];
        }
    return coords;
}

Vector embed_1d(const Vector& interior, int n) {
    Vector full = Vector::Zero(n + 1);
    full.segment(1, n - 1) = interior;
    return full;
}

Vector embed_2d(const Vector& interior, int n) {
    const int ni = n - 1;
    Vector full = Vector::Zero((n + 1) * (n + 1));
    for (int ix = 0; ix < ni; ++ix)
        full.segment((ix + 1) * (n + 1) + 1, ni) = interior.segment(ix * ni, ni);
    return full;
}

Vector forcing_at(const problems::Problem& prob, const Matrix& space, double t) {
    Matrix coords(space.rows(), space.cols() + 1);
    coords.leftCols(space.cols()) = space;
    coords.rightCols(1).setConstant(t);
    return problems::forcing(prob, coords);
}

Vector bary_weights(int count) {
    Vector w(count);
    for (int j = 0; j < count; ++j) w[j] = sign_flip(j);
    w[0] *= 0.5;
    w[count - 1] *= 0.5;
    return w;
}

} // namespace

DiffMatrices diff_matrices(int n) {
    if (n < 2) throw ConfigError("diff_matrices: polynomial degree must be at least 2");
    DiffMatrices d;
    d.nodes = cheb::lobatto_nodes01(n);
    const int m = n + 1;
    auto endpoint_scale = [n](int k) { return k == 0 || k == n ? 2.0 : 1.0; };
    d.d1 = Matrix::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        double diag = 0.0;
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            d.d1(i, j) = endpoint_scale(i) / endpoint_scale(j) * sign_flip(i + j) /
                         (d.nodes[i] - d.nodes[j]);
            diag -= d.d1(i, j);
        }
        d.d1(i, i) = diag; // negative-sum trick: rows annihilate constants
    }
    d.d2 = d.d1 * d.d1;
    return d;
}

LuSolver::LuSolver(Matrix a) : a_(std::move(a)), lu_(a_) {
    if (a_.rows() != a_.cols() || a_.rows() == 0)
        throw ConfigError("LuSolver: matrix must be square and non-empty");
    const int n = size();
    norm_a_ = a_.cwiseAbs().rowwise().sum().maxCoeff();
    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), 0);
    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(lu_(i, k)) > std::abs(lu_(pivot_row, k))) pivot_row = i;
        if (std::abs(lu_(pivot_row, k)) < 1e-14 * norm_a_)
            throw SolverError("LuSolver: matrix is singular to working precision");
        if (pivot_row != k) {
            lu_.row(pivot_row).swap(lu_.row(k));
            std::swap(perm_[pivot_row], perm_[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            lu_(i, k) /= lu_(k, k);
            lu_.row(i).tail(n - k - 1) -= lu_(i, k) * lu_.row(k).tail(n - k - 1);
        }
    }
}

Vector LuSolver::solve(const Vector& b) const {
    const int n = size();
    if (b.size() != n) throw ConfigError("LuSolver: right-hand side has wrong length");
    Vector y(n);
    for (int i = 0; i < n; ++i) {
        double s = b[perm_[i]];
        for (int j = 0; j < i; ++j) s -= lu_(i, j) * y[j];
        y[i] = s;
    }
    Vector x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    const double resid = (a_ * x - b).lpNorm<Eigen::Infinity>();
    const double bound = 1e-10 * (norm_a_ * x.lpNorm<Eigen::Infinity>() +
                                  b.lpNorm<Eigen::Infinity>());
    if (resid > bound)
        throw SolverError("LuSolver: solution failed the residual check");
    return x;
}

Vector solve_dense(const Matrix& a, const Vector& b) { return LuSolver(a).solve(b); }

NodalSolution poisson_collocation_1d(int n) {
    if (n < 4) throw ConfigError("poisson_collocation_1d: n must be at least 4");
    const problems::Problem prob = problems::make_problem(problems::Id::Poisson1D);
    const DiffMatrices d = diff_matrices(n);
    const Matrix a = -d.d2.block(1, 1, n - 1, n - 1);
    const Matrix coords = d.nodes.segment(1, n - 1);
    NodalSolution out;
    out.axes = {d.nodes};
    out.values = embed_1d(solve_dense(a, problems::forcing(prob, coords)), n);
    return out;
}

NodalSolution poisson_collocation_2d(int n) {
    if (n < 4) throw ConfigError("poisson_collocation_2d: n must be at least 4");
    const problems::Problem prob = problems::make_problem(problems::Id::Poisson2D);
    const DiffMatrices d = diff_matrices(n);
    const int ni = n - 1;
    const Matrix d2i = d.d2.block(1, 1, ni, ni);
    const Matrix eye = Matrix::Identity(ni, ni);
    const Matrix lap = kron(d2i, eye) + kron(eye, d2i);
    const Vector f = problems::forcing(prob, interior_coords_2d(d.nodes, n));
    NodalSolution out;
    out.axes = {d.nodes, d.nodes};
    out.values = embed_2d(solve_dense(-lap, f), n);
    return out;
}

NodalSolution crank_nicolson_1d(int n, int steps, const problems::Problem& prob) {
    if (n < 4 || steps < 1)
        throw ConfigError("crank_nicolson_1d: need n >= 4 and steps >= 1");
    assert(prob.id == problems::Id::Heat1D);
    const DiffMatrices d = diff_matrices(n);
    const int ni = n - 1;
    const Matrix lap = prob.nu * d.d2.block(1, 1, ni, ni);
    const double dt = 1.0 / steps;
    const Matrix eye = Matrix::Identity(ni, ni);
    const LuSolver implicit_op(eye - 0.5 * dt * lap);
    const Matrix explicit_op = eye + 0.5 * dt * lap;
    const Matrix coords = d.nodes.segment(1, ni);
    Vector u = problems::initial_state(prob, coords);
    for (int k = 0; k < steps; ++k) {
        const Vector f0 = forcing_at(prob, coords, k * dt);
        const Vector f1 = forcing_at(prob, coords, (k + 1) * dt);
        u = implicit_op.solve(explicit_op * u + 0.5 * dt * (f0 + f1));
    }
    NodalSolution out;
    out.axes = {d.nodes};
    out.values = embed_1d(u, n);
    out.iterations = steps;
    return out;
}

NodalSolution crank_nicolson_2d(int n, int steps, const problems::Problem& prob) {
    if (n < 4 || steps < 1)
        throw ConfigError("crank_nicolson_2d: need n >= 4 and steps >= 1");
    assert(prob.id == problems::Id::Heat2D);
    const DiffMatrices d = diff_matrices(n);
    const int ni = n - 1;
    const Matrix d2i = d.d2.block(1, 1, ni, ni);
    const Matrix eye = Matrix::Identity(ni, ni);
    const Matrix lap = prob.nu * (kron(d2i, eye) + kron(eye, d2i));
    const double dt = 1.0 / steps;
    const Matrix eye2 = Matrix::Identity(ni * ni, ni * ni);
    const LuSolver implicit_op(eye2 - 0.5 * dt * lap);
    const Matrix explicit_op = eye2 + 0.5 * dt * lap;
    const Matrix coords = interior_coords_2d(d.nodes, n);
    Vector u = problems::initial_state(prob, coords);
    for (int k = 0; k < steps; ++k) {
        const Vector f0 = forcing_at(prob, coords, k * dt);
        const Vector f1 = forcing_at(prob, coords, (k + 1) * dt);
        u = implicit_op.solve(explicit_op * u + 0.5 * dt * (f0 + f1));
    }
    NodalSolution out;
    out.axes = {d.nodes, d.nodes};
    out.values = embed_2d(u, n);
    out.iterations = steps;
    return out;
}

namespace {

/// Shared damped-Newton driver; resid/jacobian act on interior unknowns.
template <typename Resid, typename Jac>
void newton_solve(Vector& u, const Resid& resid, const Jac& jacobian,
                  NodalSolution& out) {
    constexpr double kTol = 1e-11;
    constexpr int kMaxIters = 50;
    constexpr int kMaxHalvings = 20;
    Vector r = resid(u);
    double rnorm = r.lpNorm<Eigen::Infinity>();
    out.residual_history = {rnorm};
    int iter = 0;
    while (rnorm > kTol) {
        if (iter >= kMaxIters)
            throw NewtonFailure("newton: iteration budget exhausted",
                                out.residual_history);
        const Vector delta = solve_dense(jacobian(u), -r);
        double step = 1.0;
        bool accepted = false;
        for (int halving = 0; halving <= kMaxHalvings; ++halving) {
            const Vector candidate = u + step * delta;
            const Vector rc = resid(candidate);
            const double rcnorm = rc.lpNorm<Eigen::Infinity>();
            if (rcnorm < rnorm) {
                u = candidate;
                r = rc;
                rnorm = rcnorm;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted)
            throw NewtonFailure("newton: line search could not reduce the residual",
                                out.residual_history);
        out.residual_history.push_back(rnorm);
        ++iter;
    }
    out.iterations = iter;
}

} // namespace

NodalSolution newton_burgers_1d(int n, const problems::Problem& prob) {
    if (n < 8) throw ConfigError("newton_burgers_1d: n must be at least 8");
    assert(prob.id == problems::Id::Burgers1D);
    const DiffMatrices d = diff_matrices(n);
    const int ni = n - 1;
    const Matrix d1i = d.d1.block(1, 1, ni, ni);
    const Matrix d2i = d.d2.block(1, 1, ni, ni);
    const Matrix coords = d.nodes.segment(1, ni);
    const Vector f = problems::forcing(prob, coords);
    auto resid = [&](const Vector& v) -> Vector {
        return prob.nu * (d2i * v) - v.cwiseProduct(d1i * v) - f;
    };
    auto jacobian = [&](const Vector& v) -> Matrix {
        return prob.nu * d2i - Matrix((d1i * v).asDiagonal()) -
               v.asDiagonal() * d1i;
    };
    NodalSolution out;
    Vector u = Vector::Zero(ni);
    newton_solve(u, resid, jacobian, out);
    out.axes = {d.nodes};
    out.values = embed_1d(u, n);
    return out;
}

NodalSolution newton_burgers_2d(int n, const problems::Problem& prob) {
    if (n < 8) throw ConfigError("newton_burgers_2d: n must be at least 8");
    assert(prob.id == problems::Id::Burgers2D);
    const DiffMatrices d = diff_matrices(n);
    const int ni = n - 1;
    const Matrix eye = Matrix::Identity(ni, ni);
    // Boundary values are identically zero, so interior derivative values use
    // interior-restricted factors only.
    const Matrix dx = kron(Matrix(d.d1.block(1, 1, ni, ni)), eye);
    const Matrix dy = kron(eye, Matrix(d.d1.block(1, 1, ni, ni)));
    const Matrix lap = kron(Matrix(d.d2.block(1, 1, ni, ni)), eye) +
                       kron(eye, Matrix(d.d2.block(1, 1, ni, ni)));
    const Vector f = problems::forcing(prob, interior_coords_2d(d.nodes, n));
    auto resid = [&](const Vector& v) -> Vector {
        return prob.nu * (lap * v) - v.cwiseProduct(dx * v) - v.cwiseProduct(dy * v) - f;
    };
    auto jacobian = [&](const Vector& v) -> Matrix {
        return prob.nu * lap - Matrix((dx * v + dy * v).asDiagonal()) -
               v.asDiagonal() * (dx + dy);
    };
    NodalSolution out;
    Vector u = Vector::Zero(ni * ni);
    newton_solve(u, resid, jacobian, out);
    out.axes = {d.nodes, d.nodes};
    out.values = embed_2d(u, n);
    return out;
}

Vector barycentric_eval(const Vector& nodes, const Vector& values, const Vector& queries) {
    assert(nodes.size() == values.size());
    const Vector w = bary_weights(static_cast<int>(nodes.size()));
    Vector out(queries.size());
    for (Eigen::Index q = 0; q < queries.size(); ++q) {
        double num = 0.0;
        double den = 0.0;
        Eigen::Index hit = -1;
        for (Eigen::Index j = 0; j < nodes.size(); ++j) {
            const double dx = queries[q] - nodes[j];
            if (std::abs(dx) <= 1e-14) {
                hit = j;
                break;
            }
            const double t = w[j] / dx;
            num += t * values[j];
            den += t;
        }
        out[q] = hit >= 0 ? values[hit] : num / den;
    }
    return out;
}

Vector barycentric_eval_2d(const Vector& nodes_x, const Vector& nodes_y,
                           const Vector& values, const Vector& qx, const Vector& qy) {
    const Eigen::Index nx = nodes_x.size();
    const Eigen::Index ny = nodes_y.size();
    assert(values.size() == nx * ny);
    Matrix stage(nx, qy.size());
    for (Eigen::Index i = 0; i < nx; ++i)
        stage.row(i) =
            barycentric_eval(nodes_y, values.segment(i * ny, ny), qy).transpose();
    Vector out(qx.size() * qy.size());
    for (Eigen::Index c = 0; c < qy.size(); ++c) {
        const Vector column = barycentric_eval(nodes_x, stage.col(c), qx);
        for (Eigen::Index r = 0; r < qx.size(); ++r) out[r * qy.size() + c] = column[r];
    }
    return out;
}

} // namespace vsl::baselines
