#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsl/basis.hpp"
#include "vsl/energy.hpp"
#include "vsl/errors.hpp"
#include "vsl/optimizer.hpp"
#include "vsl/problems.hpp"

namespace vsl::config {

/// Fully resolved run description: every field explicit after parsing, so the
/// echo reproduces the run without consulting defaults again.
struct RunConfig {
    problems::Id problem = problems::Id::Poisson1D;
    double nu = 0.0; ///< resolved viscosity/diffusivity; 0 for Poisson
    basis::Shape shape;
    std::vector<int> quad_orders; ///< per axis, same order as shape axes (x[,y][,t])
    energy::ObjectiveConfig objective;
    opt::OptimizerConfig optimizer;
    bool run_vsl = true;
    bool run_baseline = false;
    int baseline_n = 0;     ///< baseline polynomial degree per axis
    int baseline_steps = 0; ///< Crank–Nicolson time steps (heat only)
    int grid_points = 0;    ///< test-grid points per axis
    int time_samples = 0;   ///< space-time sampling instants (time-dependent only)
    std::string output_dir = "out";
};

/// Parses the flat `key = value` format (# comments, blank lines allowed),
/// applies problem-aware defaults, and validates. Throws ConfigError with the
/// offending key in the message.
RunConfig parse_text(const std::string& text);
RunConfig parse_file(const std::string& path);

/// Resolved key/value pairs in a fixed order; only keys applicable to the
/// problem appear, so the echo itself is a valid config.
std::vector<std::pair<std::string, std::string>> echo_pairs(const RunConfig& cfg);

/// Flat-format echo of the resolved config (round-trips through parse_text).
std::string echo(const RunConfig& cfg);

/// %.17g rendering used for every floating-point value we serialize.
std::string format_double(double v);

} // namespace vsl::config
