#pragma once

#include <vector>

#include "vsl/basis.hpp"
#include "vsl/problems.hpp"
#include "vsl/quadrature.hpp"
#include "vsl/types.hpp"

namespace vsl::energy {

enum class Form { Strong, Weak };

/// How the initial-condition mismatch is aggregated.
enum class IcWeighting { MeanOverNodes, QuadratureWeights };

struct ObjectiveConfig {
    Form form = Form::Weak;
    double lambda_ic = 10.0;   ///< forced to 0 for stationary problems
    double lambda_reg = 1e-8;
    IcWeighting ic_weighting = IcWeighting::MeanOverNodes;
    int ic_nodes_per_axis = 32;
    int diag_nodes_per_axis = 32;
};

/// Everything precomputed for one training run: quadrature data and feature
/// matrices at the quadrature, initial-condition, and diagnostic node sets.
/// Linear operators are composed once; only the Burgers problems keep the
/// separate feature blocks needed to rebuild the state-dependent Jacobian.
struct AssembledEnergy {
    problems::Problem prob;
    basis::Shape shape;

    Vector quad_w;       ///< tensor quadrature weights
    Vector forcing;      ///< f at quadrature nodes
    Matrix op;           ///< composed linear operator at quadrature nodes (linear problems)
    basis::Features feats; ///< phi always; + dx/dxx (dy/dyy) for Burgers

    Matrix stiffness;    ///< weak-Poisson moment matrix K (else 0x0)
    Vector load;         ///< weak-Poisson moment vector b

    Matrix ic_phi;       ///< basis at t=0 nodes (time problems)
    Vector ic_target;    ///< u* at t=0
    Vector ic_w;         ///< quadrature IC weights; empty for mean weighting

    Matrix diag_op;          ///< composed linear operator at diagnostic nodes
    basis::Features diag_feats; ///< Burgers blocks at diagnostic nodes
    Vector diag_forcing;
};

/// Default per-axis quadrature order: basis order + 8.
std::vector<int> default_quad_orders(const basis::Shape& s);

AssembledEnergy assemble(const problems::Problem& prob, const basis::Shape& shape,
                         const ObjectiveConfig& cfg, std::vector<int> quad_orders = {});

/// Pointwise strong residual r(c) and its Jacobian dr/dc at the given
/// feature set. For linear problems J is the constant composed operator.
Vector strong_residual(const AssembledEnergy& a, const basis::Features& f,
                       const Matrix& op, const Vector& fvals, const Vector& c);
Matrix residual_jacobian(const AssembledEnergy& a, const basis::Features& f,
                         const Matrix& op, const Vector& c);

struct EnergyValue {
    double value = 0.0;
    Vector grad;
};

/// E = 1/2 sum_q w_q r_q^2 with gradient J^T (w .* r).
EnergyValue strong_energy(const AssembledEnergy& a, const Vector& c);

/// E = 1/2 ||R||^2 over basis moments. Poisson uses the integrated-by-parts
/// moments R = K c - b; parabolic/nonlinear problems use R = phi^T (w .* r).
EnergyValue weak_energy(const AssembledEnergy& a, const Vector& c);

/// Initial-condition mismatch; zero-valued for stationary problems.
EnergyValue ic_loss(const AssembledEnergy& a, const ObjectiveConfig& cfg, const Vector& c);

struct ObjectiveValue {
    double total = 0.0;
    double energy = 0.0;
    double ic = 0.0;
    Vector grad;
};

/// J(c) = E_form + lambda_ic * L_ic + lambda_reg * 1/2 ||c||^2.
ObjectiveValue total_objective(const AssembledEnergy& a, const ObjectiveConfig& cfg,
                               const Vector& c);

/// Mean squared strong residual on the held-out diagnostic set. Never part
/// of the gradient; drives early stopping.
double diagnostic_residual(const AssembledEnergy& a, const Vector& c);

} // namespace vsl::energy
