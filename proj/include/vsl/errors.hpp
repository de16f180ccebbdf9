#pragma once

#include <stdexcept>

namespace vsl {

/// Invalid or inconsistent user input (config files, CLI arguments, and
/// config-reachable API preconditions). The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure inside a solver: singular factorization, failed residual
/// verification, stalled iteration. The CLI maps this to exit code 3.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace vsl
