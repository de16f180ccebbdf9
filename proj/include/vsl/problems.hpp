#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsl/types.hpp"

namespace vsl::problems {

enum class Id { Poisson1D, Poisson2D, Heat1D, Heat2D, Burgers1D, Burgers2D };

/// Stable string keys accepted by configs and printed by list-problems.
std::optional<Id> parse_id(std::string_view key);
std::string to_string(Id id);
std::vector<Id> all_ids();

/// A benchmark problem: identity plus the diffusion coefficient where the
/// operator has one. Manufactured-solution closures live in free functions
/// so node sets can be evaluated in bulk.
struct Problem {
    Id id;
    double nu; ///< ignored for Poisson

    int space_dims() const;
    bool has_time() const;
    bool is_linear() const; ///< Burgers problems are the nonlinear ones
};

/// Default diffusion coefficient; 0 for the Poisson problems.
double default_nu(Id id);
Problem make_problem(Id id, std::optional<double> nu = std::nullopt);

/// coords columns follow the axis order x [, y][, t]; stationary problems
/// take pure spatial coordinates.
Vector exact_solution(const Problem& p, const Matrix& coords);
Vector forcing(const Problem& p, const Matrix& coords);

/// Exact solution at t = 0 on spatial coordinates (time problems only).
Vector initial_state(const Problem& p, const Matrix& space_coords);

/// Closed-form derivatives of the exact solution, for verification of the
/// manufactured forcing and of basis derivatives. Unused members are empty.
struct ExactDerivatives {
    Vector u, ux, uy, ut, uxx, uyy;
};
ExactDerivatives exact_derivatives(const Problem& p, const Matrix& coords);

} // namespace vsl::problems
