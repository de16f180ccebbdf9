#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "vsl/baselines.hpp"
#include "vsl/basis.hpp"
#include "vsl/chebyshev.hpp"
#include "vsl/energy.hpp"
#include "vsl/quadrature.hpp"

using vsl::Matrix;
using vsl::Vector;
namespace basis = vsl::basis;
namespace energy = vsl::energy;
namespace problems = vsl::problems;
using energy::Form;
using problems::Id;

namespace {

basis::Shape small_shape(const problems::Problem& p) {
    basis::Shape s;
    switch (p.id) {
        case Id::Poisson1D: s = {6, 0, 0}; break;
        case Id::Poisson2D: s = {4, 4, 0}; break;
        case Id::Heat1D: s = {4, 0, 4}; break;
        case Id::Heat2D: s = {3, 3, 3}; break;
        case Id::Burgers1D: s = {6, 0, 0}; break;
        case Id::Burgers2D: s = {4, 4, 0}; break;
    }
    return s;
}

energy::ObjectiveConfig small_config(Form form) {
    energy::ObjectiveConfig cfg;
    cfg.form = form;
    cfg.ic_nodes_per_axis = 8;
    cfg.diag_nodes_per_axis = 8;
    return cfg;
}

Vector random_vector(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> draw(-0.5, 0.5);
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = draw(rng);
    return v;
}

/// Central-difference gradient of a scalar function of the coefficients.
template <typename F>
Vector fd_gradient(const F& f, const Vector& c, double h = 1e-6) {
    Vector g(c.size());
    for (int i = 0; i < c.size(); ++i) {
        Vector lo = c, hi = c;
        lo[i] -= h;
        hi[i] += h;
        g[i] = (f(hi) - f(lo)) / (2 * h);
    }
    return g;
}

void check_gradient(const Vector& analytic, const Vector& fd) {
    const double tol = std::max(1e-6, 1e-4 * analytic.norm());
    for (int i = 0; i < analytic.size(); ++i)
        CHECK(std::abs(analytic[i] - fd[i]) <= tol);
}

} // namespace

TEST_SUITE("energy") {

TEST_CASE("energy and IC gradients match central finite differences") {
    for (Id id : problems::all_ids()) {
        const problems::Problem p = problems::make_problem(id);
        const basis::Shape shape = small_shape(p);
        for (Form form : {Form::Strong, Form::Weak}) {
            CAPTURE(problems::to_string(id));
            const energy::ObjectiveConfig cfg = small_config(form);
            const energy::AssembledEnergy a = energy::assemble(p, shape, cfg);
            const Vector c = random_vector(shape.size(), 20 + static_cast<unsigned>(id));

            const energy::EnergyValue e = form == Form::Strong
                                              ? energy::strong_energy(a, c)
                                              : energy::weak_energy(a, c);
            check_gradient(e.grad, fd_gradient(
                                       [&](const Vector& v) {
                                           return form == Form::Strong
                                                      ? energy::strong_energy(a, v).value
                                                      : energy::weak_energy(a, v).value;
                                       },
                                       c));

            if (p.has_time()) {
                const energy::EnergyValue ic = energy::ic_loss(a, cfg, c);
                check_gradient(ic.grad,
                               fd_gradient([&](const Vector& v) {
                                   return energy::ic_loss(a, cfg, v).value;
                               }, c));
            }

            const energy::ObjectiveValue total = energy::total_objective(a, cfg, c);
            check_gradient(total.grad,
                           fd_gradient([&](const Vector& v) {
                               return energy::total_objective(a, cfg, v).total;
                           }, c));
        }
    }
}

TEST_CASE("IC loss weightings match their closed forms") {
    const problems::Problem p = problems::make_problem(Id::Heat1D);
    const basis::Shape shape{3, 0, 3};

    energy::ObjectiveConfig mean_cfg = small_config(Form::Weak);
    mean_cfg.ic_nodes_per_axis = 5;
    const energy::AssembledEnergy mean_asm = energy::assemble(p, shape, mean_cfg);
    const Vector c = random_vector(shape.size(), 77);

    // Independent reconstruction of the mean-squared mismatch at t = 0.
    const Vector nodes = vsl::cheb::interior_nodes01(5);
    Matrix coords(5, 2);
    coords.col(0) = nodes;
    coords.col(1).setZero();
    const Vector u0 = problems::initial_state(p, nodes);
    const Vector mismatch = basis::evaluate(shape, coords, c) - u0;
    const double expected_mean = mismatch.squaredNorm() / 5.0;
    CHECK(energy::ic_loss(mean_asm, mean_cfg, c).value ==
          doctest::Approx(expected_mean).epsilon(1e-13));

    energy::ObjectiveConfig quad_cfg = mean_cfg;
    quad_cfg.ic_weighting = energy::IcWeighting::QuadratureWeights;
    const energy::AssembledEnergy quad_asm = energy::assemble(p, shape, quad_cfg);
    const vsl::quad::Rule rule = vsl::quad::gauss_legendre(5);
    Matrix qcoords(5, 2);
    qcoords.col(0) = rule.nodes;
    qcoords.col(1).setZero();
    const Vector qmis =
        basis::evaluate(shape, qcoords, c) - problems::initial_state(p, rule.nodes);
    const double expected_quad = 0.5 * rule.weights.dot(qmis.cwiseAbs2());
    CHECK(energy::ic_loss(quad_asm, quad_cfg, c).value ==
          doctest::Approx(expected_quad).epsilon(1e-13));
}

TEST_CASE("strong energy equals the weighted residual sum, rebuilt independently") {
    const problems::Problem p = problems::make_problem(Id::Poisson1D);
    const basis::Shape shape{6, 0, 0};
    const energy::ObjectiveConfig cfg = small_config(Form::Strong);
    const energy::AssembledEnergy a = energy::assemble(p, shape, cfg);
    const Vector c = random_vector(shape.size(), 5);

    const vsl::quad::Rule rule = vsl::quad::gauss_legendre(6 + 8);
    const basis::Block block = basis::dirichlet_modes(rule.nodes, 6);
    const Vector r = -(block.d2 * c) - problems::forcing(p, rule.nodes);
    const double expected = 0.5 * rule.weights.dot(r.cwiseAbs2());
    CHECK(energy::strong_energy(a, c).value ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("objective reduces to the bare energy when both lambdas vanish") {
    const problems::Problem p = problems::make_problem(Id::Heat1D);
    const basis::Shape shape{4, 0, 4};
    energy::ObjectiveConfig cfg = small_config(Form::Strong);
    cfg.lambda_ic = 0.0;
    cfg.lambda_reg = 0.0;
    const energy::AssembledEnergy a = energy::assemble(p, shape, cfg);
    const Vector c = random_vector(shape.size(), 13);
    const energy::ObjectiveValue total = energy::total_objective(a, cfg, c);
    CHECK(total.total == energy::strong_energy(a, c).value);
    CHECK((total.grad - energy::strong_energy(a, c).grad).norm() == 0.0);
}

TEST_CASE("regularization contributes lambda times the coefficients to the gradient") {
    const problems::Problem p = problems::make_problem(Id::Poisson1D);
    const basis::Shape shape{6, 0, 0};
    energy::ObjectiveConfig with_reg = small_config(Form::Weak);
    with_reg.lambda_reg = 0.01;
    energy::ObjectiveConfig no_reg = with_reg;
    no_reg.lambda_reg = 0.0;
    const energy::AssembledEnergy a = energy::assemble(p, shape, with_reg);
    Vector c = random_vector(shape.size(), 3);
    c /= c.norm();
    const Vector full = energy::total_objective(a, with_reg, c).grad;
    const Vector diff = full - energy::total_objective(a, no_reg, c).grad;
    const double tol = 1e-12 * (1.0 + full.norm());
    for (int i = 0; i < c.size(); ++i)
        CHECK(std::abs(diff[i] - 0.01 * c[i]) <= tol);
}

TEST_CASE("linear-problem objectives are quadratic along any line") {
    for (Id id : {Id::Poisson1D, Id::Poisson2D, Id::Heat1D, Id::Heat2D}) {
        const problems::Problem p = problems::make_problem(id);
        const basis::Shape shape = small_shape(p);
        for (Form form : {Form::Strong, Form::Weak}) {
            const energy::ObjectiveConfig cfg = small_config(form);
            const energy::AssembledEnergy a = energy::assemble(p, shape, cfg);
            const Vector c0 = random_vector(shape.size(), 8);
            const Vector dir = random_vector(shape.size(), 9);
            auto j = [&](double s) {
                return energy::total_objective(a, cfg, c0 + s * dir).total;
            };
            const double predicted = 3.0 * j(1.0) + j(-1.0) - 3.0 * j(0.0);
            const double actual = j(2.0);
            CHECK(std::abs(actual - predicted) <= 1e-10 * std::max(1.0, std::abs(actual)));
        }
    }
}

TEST_CASE("direct weak solves are stationary points of the weak energy") {
    // Poisson route: integrated-by-parts stiffness system.
    for (Id id : {Id::Poisson1D, Id::Poisson2D}) {
        const problems::Problem p = problems::make_problem(id);
        const basis::Shape shape = small_shape(p);
        const energy::ObjectiveConfig cfg = small_config(Form::Weak);
        const energy::AssembledEnergy a = energy::assemble(p, shape, cfg);
        REQUIRE(a.stiffness.rows() == shape.size());
        const Vector cstar = vsl::baselines::solve_dense(a.stiffness, a.load);
        const double scale =
            1.0 + a.stiffness.cwiseAbs().rowwise().sum().maxCoeff();
        CHECK(energy::weak_energy(a, cstar).grad.norm() <= 1e-10 * scale);
    }
    // Moment route: square Galerkin system rebuilt from the assembled pieces.
    const problems::Problem p = problems::make_problem(Id::Heat1D);
    const basis::Shape shape = small_shape(p);
    const energy::ObjectiveConfig cfg = small_config(Form::Weak);
    const energy::AssembledEnergy a = energy::assemble(p, shape, cfg);
    const Matrix moments = a.feats.phi.transpose() * a.quad_w.asDiagonal() * a.op;
    const Vector rhs = a.feats.phi.transpose() * a.quad_w.cwiseProduct(a.forcing);
    const Vector cstar = vsl::baselines::solve_dense(moments, rhs);
    const double scale = 1.0 + moments.cwiseAbs().rowwise().sum().maxCoeff();
    CHECK(energy::weak_energy(a, cstar).grad.norm() <= 1e-10 * scale);
}

TEST_CASE("energies are never negative") {
    for (Id id : problems::all_ids()) {
        const problems::Problem p = problems::make_problem(id);
        const basis::Shape shape = small_shape(p);
        for (Form form : {Form::Strong, Form::Weak}) {
            const energy::ObjectiveConfig cfg = small_config(form);
            const energy::AssembledEnergy a = energy::assemble(p, shape, cfg);
            for (int trial = 0; trial < 5; ++trial) {
                const Vector c = random_vector(shape.size(), 100 * trial + 1);
                const double e = form == Form::Strong
                                     ? energy::strong_energy(a, c).value
                                     : energy::weak_energy(a, c).value;
                CHECK(e >= 0.0);
                if (p.has_time()) CHECK(energy::ic_loss(a, cfg, c).value >= 0.0);
            }
        }
    }
}

TEST_CASE("diagnostic at zero coefficients is the mean squared forcing") {
    for (Id id : {Id::Poisson1D, Id::Burgers2D}) {
        const problems::Problem p = problems::make_problem(id);
        const basis::Shape shape = small_shape(p);
        energy::ObjectiveConfig cfg = small_config(Form::Weak);
        cfg.diag_nodes_per_axis = 6;
        const energy::AssembledEnergy a = energy::assemble(p, shape, cfg);

        const Vector nodes = vsl::cheb::interior_nodes01(6);
        std::vector<Vector> axes(p.space_dims(), nodes);
        const Matrix coords = vsl::quad::tensor_grid(axes);
        const Vector f = problems::forcing(p, coords);
        const double expected = f.squaredNorm() / f.size();
        CHECK(energy::diagnostic_residual(a, Vector::Zero(shape.size())) ==
              doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("diagnostic of a nonlinear state matches an independent rebuild") {
    const problems::Problem p = problems::make_problem(Id::Burgers1D);
    const basis::Shape shape{6, 0, 0};
    energy::ObjectiveConfig cfg = small_config(Form::Strong);
    cfg.diag_nodes_per_axis = 10;
    const energy::AssembledEnergy a = energy::assemble(p, shape, cfg);
    const Vector c = random_vector(shape.size(), 55);

    const Vector nodes = vsl::cheb::interior_nodes01(10);
    const basis::Block block = basis::dirichlet_modes(nodes, 6);
    const Vector u = block.value * c;
    const Vector ux = block.d1 * c;
    const Vector r =
        p.nu * (block.d2 * c) - u.cwiseProduct(ux) - problems::forcing(p, nodes);
    CHECK(energy::diagnostic_residual(a, c) ==
          doctest::Approx(r.squaredNorm() / r.size()).epsilon(1e-12));
}

TEST_CASE("diagnostic decreases monotonically with basis resolution") {
    double previous = std::numeric_limits<double>::infinity();
    for (int n : {4, 8, 16}) {
        const problems::Problem p = problems::make_problem(Id::Poisson1D);
        const basis::Shape shape{n, 0, 0};
        const energy::ObjectiveConfig cfg = small_config(Form::Weak);
        const energy::AssembledEnergy a = energy::assemble(p, shape, cfg);
        const Vector cstar = vsl::baselines::solve_dense(a.stiffness, a.load);
        const double diag = energy::diagnostic_residual(a, cstar);
        CHECK(diag < previous);
        previous = diag;
    }
}

} // TEST_SUITE
