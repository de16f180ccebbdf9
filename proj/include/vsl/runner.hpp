#pragma once

#include <string>
#include <vector>

#include "vsl/config.hpp"
#include "vsl/metrics.hpp"
#include "vsl/optimizer.hpp"
#include "vsl/types.hpp"

namespace vsl::runner {

/// One solver's contribution to a run: the field on the shared test grid,
/// error metrics, and solver-specific diagnostics.
struct SolverResult {
    std::string name; ///< "vsl", "collocation", "crank_nicolson", or "newton"
    Vector grid_values;
    metrics::ErrorReport error;
    double wall_seconds = 0.0;
    bool is_vsl = false;
    opt::TrainResult training;        ///< spectral solver only
    double space_time_max_abs = 0.0;  ///< time-dependent spectral runs only
    double space_time_linf_rel = 0.0; ///< time-dependent spectral runs only
    int iterations = 0;               ///< baseline iteration/step count
};

struct RunArtifacts {
    config::RunConfig cfg;
    Matrix grid_coords; ///< test-grid coordinates; t column pinned to 1 when timed
    Vector u_exact;
    std::vector<SolverResult> solvers;
};

/// Runs every enabled solver against the manufactured solution.
RunArtifacts execute(const config::RunConfig& cfg);

/// Config output directory unless VSL_OUTPUT_DIR overrides it.
std::string resolve_output_dir(const config::RunConfig& cfg);

void write_report(const RunArtifacts& art, const std::string& dir);
void write_history(const RunArtifacts& art, const std::string& dir);
void write_solution(const RunArtifacts& art, const std::string& dir);
void write_compare(const RunArtifacts& art, const std::string& dir);

/// `vsl run`: executes and writes report.json, solution.csv, resolved.cfg,
/// and history.csv when the spectral solver ran. Throws on failure.
void run(const std::string& config_path);

/// `vsl compare`: as run, plus compare.csv; requires at least two solvers.
void compare(const std::string& config_path);

} // namespace vsl::runner
