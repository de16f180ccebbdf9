#include "vsl/optimizer.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <random>

namespace vsl::opt {

double learning_rate(int step, const ScheduleConfig& cfg) {
    double start = 0.0;
    double length = cfg.t0;
    double peak = cfg.eta0;
    // Walk restart cycles up to the one containing `step`. The cap keeps
    // shrinking-cycle configs (t_mul < 1) from spinning once cycle lengths
    // underflow; past it the schedule saturates at the floor.
    for (int j = 0; j < 4096 && step >= start + length; ++j) {
        start += length;
        length *= cfg.t_mul;
        peak *= cfg.m_mul;
    }
    double tau = (step - start) / length;
    if (tau < 0.0) tau = 0.0;
    if (tau > 1.0) tau = 1.0;
    return peak * (cfg.alpha +
                   0.5 * (1.0 - cfg.alpha) * (1.0 + std::cos(std::numbers::pi * tau)));
}

double clip_gradient(Vector& g, double g_max) {
    const double norm = g.norm();
    if (norm > g_max) g *= g_max / norm;
    return norm;
}

void adam_step(AdamState& state, Vector& c, const Vector& g, double lr,
               const OptimizerConfig& cfg) {
    assert(state.m.size() == g.size() && state.v.size() == g.size());
    state.step += 1;
    state.m = cfg.beta1 * state.m + (1.0 - cfg.beta1) * g;
    state.v = cfg.beta2 * state.v + (1.0 - cfg.beta2) * g.cwiseProduct(g);
    const double corr1 = 1.0 - std::pow(cfg.beta1, state.step);
    const double corr2 = 1.0 - std::pow(cfg.beta2, state.step);
    c.array() -=
        lr * (state.m.array() / corr1) / ((state.v.array() / corr2).sqrt() + cfg.epsilon);
}

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::MaxEpochs: return "max_epochs";
        case StopReason::ResidualTol: return "residual_tol";
        case StopReason::NonFinite: return "non_finite";
    }
    return "unknown";
}

Vector initial_coefficients(int n, const OptimizerConfig& cfg) {
    Vector c = Vector::Zero(n);
    if (cfg.init == InitKind::Uniform) {
        // Raw-bit scaling instead of uniform_real_distribution keeps the draw
        // identical across standard libraries.
        std::mt19937_64 engine(cfg.seed);
        for (int i = 0; i < n; ++i) {
            const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            c[i] = cfg.init_scale * (2.0 * u - 1.0);
        }
    }
    return c;
}

TrainResult train_loop(const LoopProblem& problem, int n_params,
                       const OptimizerConfig& cfg) {
    assert(problem.objective && problem.diagnostic);
    TrainResult out;
    out.coefficients = initial_coefficients(n_params, cfg);
    out.history.reserve(static_cast<std::size_t>(std::max(cfg.max_epochs, 0)));
    AdamState state{Vector::Zero(n_params), Vector::Zero(n_params), 0};

    for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        const energy::ObjectiveValue value = problem.objective(out.coefficients);
        const double diag = problem.diagnostic(out.coefficients);
        const double lr = learning_rate(epoch, cfg.schedule);
        const double grad_norm = value.grad.norm();
        out.history.push_back(
            {epoch, lr, value.total, value.energy, value.ic, diag, grad_norm});

        if (!std::isfinite(value.total) || !std::isfinite(value.energy) ||
            !std::isfinite(value.ic) || !std::isfinite(diag) ||
            !std::isfinite(grad_norm)) {
            out.reason = StopReason::NonFinite;
            return out;
        }
        if (std::isfinite(cfg.stop_tol) && diag <= cfg.stop_tol) {
            out.reason = StopReason::ResidualTol;
            return out;
        }
        Vector g = value.grad;
        clip_gradient(g, cfg.clip_norm);
        adam_step(state, out.coefficients, g, lr, cfg);
    }
    out.reason = StopReason::MaxEpochs;
    return out;
}

TrainResult train(const energy::AssembledEnergy& assembled,
                  const energy::ObjectiveConfig& ocfg, const OptimizerConfig& cfg) {
    LoopProblem problem;
    problem.objective = [&](const Vector& c) {
        return energy::total_objective(assembled, ocfg, c);
    };
    problem.diagnostic = [&](const Vector& c) {
        return energy::diagnostic_residual(assembled, c);
    };
    return train_loop(problem, assembled.shape.size(), cfg);
}

} // namespace vsl::opt
