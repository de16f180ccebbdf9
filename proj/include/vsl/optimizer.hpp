#pragma once

#include <functional>
#include <vector>

#include "vsl/energy.hpp"
#include "vsl/types.hpp"

namespace vsl::opt {

/// Cosine decay with warm restarts: cycle j starts at S_j = t0·(t_mul^j − 1)/
/// (t_mul − 1), lasts T_j = t0·t_mul^j steps, and peaks at eta0·m_mul^j.
struct ScheduleConfig {
    double eta0 = 1e-3;  ///< peak learning rate of the first cycle
    double alpha = 0.01; ///< floor as a fraction of the cycle peak
    int t0 = 400;        ///< first cycle length in steps
    double t_mul = 2.0;  ///< cycle-length growth factor
    double m_mul = 1.0;  ///< peak decay factor across cycles
};

/// Learning rate at a given step (step 0 = first update).
double learning_rate(int step, const ScheduleConfig& cfg);

/// Rescales g in place to norm g_max when it exceeds it; returns the pre-clip
/// Euclidean norm.
double clip_gradient(Vector& g, double g_max);

enum class InitKind { Zero, Uniform };

struct OptimizerConfig {
    ScheduleConfig schedule;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double clip_norm = 100.0;
    int max_epochs = 3000;
    double stop_tol = 1e-10; ///< on the diagnostic residual; +inf disables
    unsigned long long seed = 0;
    InitKind init = InitKind::Zero;
    double init_scale = 0.1; ///< uniform init draws from (-init_scale, init_scale)
};

struct AdamState {
    Vector m, v;
    int step = 0; ///< completed updates; bias correction uses step after increment
};

/// One Adam update of c in place using the (already clipped) gradient g.
void adam_step(AdamState& state, Vector& c, const Vector& g, double lr,
               const OptimizerConfig& cfg);

enum class StopReason { MaxEpochs, ResidualTol, NonFinite };
const char* to_string(StopReason reason);

struct EpochRecord {
    int epoch;
    double lr;
    double objective;
    double energy;
    double ic_loss;
    double diag_residual;
    double grad_norm; ///< pre-clip Euclidean norm
};

struct TrainResult {
    Vector coefficients;
    std::vector<EpochRecord> history;
    StopReason reason = StopReason::MaxEpochs;
};

/// Objective plumbing for the loop; separate from AssembledEnergy so tests can
/// drive the optimizer with synthetic functions.
struct LoopProblem {
    std::function<energy::ObjectiveValue(const Vector&)> objective;
    std::function<double(const Vector&)> diagnostic;
};

/// Zero vector, or seeded uniform(-init_scale, init_scale) draws.
Vector initial_coefficients(int n, const OptimizerConfig& cfg);

/// Full-batch loop: evaluate, record, stop-check, clip, Adam update. The
/// record for each epoch holds the values at the start of the epoch, so an
/// early stop leaves `coefficients` at the iterate whose diagnostic passed.
TrainResult train_loop(const LoopProblem& problem, int n_params,
                       const OptimizerConfig& cfg);

/// Trains the spectral coefficients of an assembled energy.
TrainResult train(const energy::AssembledEnergy& assembled,
                  const energy::ObjectiveConfig& ocfg, const OptimizerConfig& cfg);

} // namespace vsl::opt
