#include "vsl/energy.hpp"

#include <cassert>

#include "vsl/chebyshev.hpp"

namespace vsl::energy {

using problems::Id;

std::vector<int> default_quad_orders(const basis::Shape& s) {
    std::vector<int> q{s.nx + 8};
    if (s.has_y()) q.push_back(s.ny + 8);
    if (s.has_time()) q.push_back(s.nt + 8);
    return q;
}

namespace {

basis::DerivRequest request_for(const problems::Problem& p, Form form) {
    basis::DerivRequest r;
    const bool two_d = p.space_dims() == 2;
    switch (p.id) {
        case Id::Poisson1D:
        case Id::Poisson2D:
            if (form == Form::Weak) {
                r.dx = true;
                r.dy = two_d;
            } else {
                r.dxx = true;
                r.dyy = two_d;
            }
            break;
        case Id::Heat1D:
        case Id::Heat2D:
            r.dt = true;
            r.dxx = true;
            r.dyy = two_d;
            break;
        case Id::Burgers1D:
        case Id::Burgers2D:
            r.dx = true;
            r.dxx = true;
            r.dy = two_d;
            r.dyy = two_d;
            break;
    }
    return r;
}

basis::DerivRequest diagnostic_request(const problems::Problem& p) {
    // The diagnostic is always the strong residual.
    basis::DerivRequest r;
    const bool two_d = p.space_dims() == 2;
    r.dxx = true;
    r.dyy = two_d;
    if (p.has_time()) r.dt = true;
    if (!p.is_linear()) {
        r.dx = true;
        r.dy = two_d;
    }
    return r;
}

/// Composes the constant strong operator A with r = A c - f for linear
/// problems; returns 0x0 for Burgers.
Matrix compose_linear_op(const problems::Problem& p, const basis::Features& f) {
    switch (p.id) {
        case Id::Poisson1D: return -f.dxx;
        case Id::Poisson2D: return -(f.dxx + f.dyy);
        case Id::Heat1D: return f.dt - p.nu * f.dxx;
        case Id::Heat2D: return f.dt - p.nu * (f.dxx + f.dyy);
        default: return {};
    }
}

} // namespace

AssembledEnergy assemble(const problems::Problem& prob, const basis::Shape& shape,
                         const ObjectiveConfig& cfg, std::vector<int> quad_orders) {
    assert((shape.has_y() ? 2 : 1) == prob.space_dims());
    assert(shape.has_time() == prob.has_time());
    if (quad_orders.empty()) quad_orders = default_quad_orders(shape);
    assert(static_cast<int>(quad_orders.size()) == shape.dims());

    AssembledEnergy a;
    a.prob = prob;
    a.shape = shape;

    std::vector<quad::Rule> rules;
    rules.reserve(quad_orders.size());
    for (int q : quad_orders) rules.push_back(quad::gauss_legendre(q));
    const quad::TensorRule rule = quad::tensor(rules);
    a.quad_w = rule.weights;
    a.forcing = problems::forcing(prob, rule.coords);

    const basis::DerivRequest req = request_for(prob, cfg.form);
    a.feats = basis::features(shape, rule.coords, req);
    a.op = compose_linear_op(prob, a.feats);

    // Weak-Poisson moments integrate by parts once: K = sum_d (d phi)^T W (d phi).
    if (cfg.form == Form::Weak && (prob.id == Id::Poisson1D || prob.id == Id::Poisson2D)) {
        a.stiffness = a.feats.dx.transpose() * a.quad_w.asDiagonal() * a.feats.dx;
        if (shape.has_y())
            a.stiffness += a.feats.dy.transpose() * a.quad_w.asDiagonal() * a.feats.dy;
        a.load = a.feats.phi.transpose() * (a.quad_w.cwiseProduct(a.forcing));
    }

    if (prob.has_time()) {
        std::vector<Vector> ic_axes;
        std::vector<quad::Rule> ic_rules;
        for (int d = 0; d < prob.space_dims(); ++d) {
            if (cfg.ic_weighting == IcWeighting::QuadratureWeights)
                ic_rules.push_back(quad::gauss_legendre(cfg.ic_nodes_per_axis));
            else
                ic_axes.push_back(cheb::interior_nodes01(cfg.ic_nodes_per_axis));
        }
        Matrix space;
        if (cfg.ic_weighting == IcWeighting::QuadratureWeights) {
            const quad::TensorRule ic_rule = quad::tensor(ic_rules);
            space = ic_rule.coords;
            a.ic_w = ic_rule.weights;
        } else {
            space = quad::tensor_grid(ic_axes);
        }
        Matrix coords(space.rows(), space.cols() + 1);
        coords.leftCols(space.cols()) = space;
        coords.rightCols(1).setZero();
        a.ic_phi = basis::features(shape, coords).phi;
        a.ic_target = problems::initial_state(prob, space);
    }

    std::vector<Vector> diag_axes(shape.dims(), cheb::interior_nodes01(cfg.diag_nodes_per_axis));
    const Matrix diag_coords = quad::tensor_grid(diag_axes);
    a.diag_feats = basis::features(shape, diag_coords, diagnostic_request(prob));
    a.diag_op = compose_linear_op(prob, a.diag_feats);
    a.diag_forcing = problems::forcing(prob, diag_coords);
    if (prob.is_linear()) a.diag_feats = {}; // composed operator suffices
    return a;
}

Vector strong_residual(const AssembledEnergy& a, const basis::Features& f,
                       const Matrix& op, const Vector& fvals, const Vector& c) {
    if (a.prob.is_linear()) return op * c - fvals;
    const Vector u = f.phi * c;
    const Vector ux = f.dx * c;
    Vector r = a.prob.nu * (f.dxx * c) - u.cwiseProduct(ux) - fvals;
    if (a.shape.has_y()) {
        const Vector uy = f.dy * c;
        r += a.prob.nu * (f.dyy * c) - u.cwiseProduct(uy);
    }
    return r;
}

Matrix residual_jacobian(const AssembledEnergy& a, const basis::Features& f,
                         const Matrix& op, const Vector& c) {
    if (a.prob.is_linear()) return op;
    const Vector u = f.phi * c;
    const Vector ux = f.dx * c;
    Matrix j = a.prob.nu * f.dxx - ux.asDiagonal() * f.phi - u.asDiagonal() * f.dx;
    if (a.shape.has_y()) {
        const Vector uy = f.dy * c;
        j += a.prob.nu * f.dyy - uy.asDiagonal() * f.phi - u.asDiagonal() * f.dy;
    }
    return j;
}

EnergyValue strong_energy(const AssembledEnergy& a, const Vector& c) {
    const Vector r = strong_residual(a, a.feats, a.op, a.forcing, c);
    const Vector wr = a.quad_w.cwiseProduct(r);
    EnergyValue e;
    e.value = 0.5 * r.dot(wr);
    if (a.prob.is_linear()) {
        e.grad = a.op.transpose() * wr;
    } else {
        e.grad = residual_jacobian(a, a.feats, a.op, c).transpose() * wr;
    }
    return e;
}

EnergyValue weak_energy(const AssembledEnergy& a, const Vector& c) {
    EnergyValue e;
    if (a.stiffness.size() > 0) {
        const Vector moments = a.stiffness * c - a.load;
        e.value = 0.5 * moments.squaredNorm();
        e.grad = a.stiffness * moments; // K is symmetric
        return e;
    }
    // Galerkin moments of the strong residual, no integration by parts.
    const Vector r = strong_residual(a, a.feats, a.op, a.forcing, c);
    const Vector moments = a.feats.phi.transpose() * a.quad_w.cwiseProduct(r);
    e.value = 0.5 * moments.squaredNorm();
    const Vector back = a.quad_w.cwiseProduct(a.feats.phi * moments);
    if (a.prob.is_linear()) {
        e.grad = a.op.transpose() * back;
    } else {
        e.grad = residual_jacobian(a, a.feats, a.op, c).transpose() * back;
    }
    return e;
}

EnergyValue ic_loss(const AssembledEnergy& a, const ObjectiveConfig& cfg, const Vector& c) {
    EnergyValue e;
    if (!a.prob.has_time()) {
        e.grad = Vector::Zero(c.size());
        return e;
    }
    const Vector mismatch = a.ic_phi * c - a.ic_target;
    if (cfg.ic_weighting == IcWeighting::QuadratureWeights) {
        const Vector wm = a.ic_w.cwiseProduct(mismatch);
        e.value = 0.5 * mismatch.dot(wm);
        e.grad = a.ic_phi.transpose() * wm;
    } else {
        const double m = static_cast<double>(mismatch.size());
        e.value = mismatch.squaredNorm() / m;
        e.grad = (2.0 / m) * (a.ic_phi.transpose() * mismatch);
    }
    return e;
}

ObjectiveValue total_objective(const AssembledEnergy& a, const ObjectiveConfig& cfg,
                               const Vector& c) {
    const EnergyValue e =
        cfg.form == Form::Strong ? strong_energy(a, c) : weak_energy(a, c);
    ObjectiveValue v;
    v.energy = e.value;
    v.grad = e.grad;
    if (a.prob.has_time() && cfg.lambda_ic != 0.0) {
        const EnergyValue ic = ic_loss(a, cfg, c);
        v.ic = ic.value;
        v.grad += cfg.lambda_ic * ic.grad;
    }
    v.total = v.energy + cfg.lambda_ic * v.ic + cfg.lambda_reg * 0.5 * c.squaredNorm();
    v.grad += cfg.lambda_reg * c;
    return v;
}

double diagnostic_residual(const AssembledEnergy& a, const Vector& c) {
    const Vector r = strong_residual(a, a.diag_feats, a.diag_op, a.diag_forcing, c);
    return r.squaredNorm() / static_cast<double>(r.size());
}

} // namespace vsl::energy
