#include "vsl/problems.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace vsl::problems {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::optional<Id> parse_id(std::string_view key) {
    if (key == "poisson1d") return Id::Poisson1D;
    if (key == "poisson2d") return Id::Poisson2D;
    if (key == "heat1d") return Id::Heat1D;
    if (key == "heat2d") return Id::Heat2D;
    if (key == "burgers1d") return Id::Burgers1D;
    if (key == "burgers2d") return Id::Burgers2D;
    return std::nullopt;
}

std::string to_string(Id id) {
    switch (id) {
        case Id::Poisson1D: return "poisson1d";
        case Id::Poisson2D: return "poisson2d";
        case Id::Heat1D: return "heat1d";
        case Id::Heat2D: return "heat2d";
        case Id::Burgers1D: return "burgers1d";
        case Id::Burgers2D: return "burgers2d";
    }
    return "?";
}

std::vector<Id> all_ids() {
    return {Id::Poisson1D, Id::Poisson2D, Id::Heat1D,
            Id::Heat2D, Id::Burgers1D, Id::Burgers2D};
}

int Problem::space_dims() const {
    switch (id) {
        case Id::Poisson1D:
        case Id::Heat1D:
        case Id::Burgers1D: return 1;
        default: return 2;
    }
}

bool Problem::has_time() const { return id == Id::Heat1D || id == Id::Heat2D; }

bool Problem::is_linear() const { return id != Id::Burgers1D && id != Id::Burgers2D; }

double default_nu(Id id) {
    switch (id) {
        case Id::Heat1D: return 1.0;
        case Id::Heat2D: return 0.1;
        case Id::Burgers1D:
        case Id::Burgers2D: return 0.1;
        default: return 0.0;
    }
}

Problem make_problem(Id id, std::optional<double> nu) {
    return Problem{id, nu.value_or(default_nu(id))};
}

namespace {

/// Evaluates f(row) over all coordinate rows.
template <typename F>
Vector map_rows(const Matrix& coords, F&& f) {
    Vector out(coords.rows());
    for (Eigen::Index p = 0; p < coords.rows(); ++p) out(p) = f(coords.row(p));
    return out;
}

} // namespace

Vector exact_solution(const Problem& p, const Matrix& coords) {
    switch (p.id) {
        case Id::Poisson1D:
            return map_rows(coords, [](auto r) { return std::sin(kPi * r(0)) / (kPi * kPi); });
        case Id::Poisson2D:
        case Id::Burgers2D:
            return map_rows(coords, [](auto r) { return std::sin(kPi * r(0)) * std::sin(kPi * r(1)); });
        case Id::Heat1D:
            return map_rows(coords, [](auto r) { return std::exp(-r(1)) * std::sin(kPi * r(0)); });
        case Id::Heat2D:
            return map_rows(coords, [](auto r) {
                return std::exp(-r(2)) * std::sin(kPi * r(0)) * std::sin(kPi * r(1));
            });
        case Id::Burgers1D:
            return map_rows(coords, [](auto r) { return std::sin(kPi * r(0)); });
    }
    return {};
}

Vector forcing(const Problem& p, const Matrix& coords) {
    const double nu = p.nu;
    switch (p.id) {
        case Id::Poisson1D:
            return map_rows(coords, [](auto r) { return std::sin(kPi * r(0)); });
        case Id::Poisson2D:
            return map_rows(coords, [](auto r) {
                return 2.0 * kPi * kPi * std::sin(kPi * r(0)) * std::sin(kPi * r(1));
            });
        case Id::Heat1D:
            return map_rows(coords, [nu](auto r) {
                return (nu * kPi * kPi - 1.0) * std::exp(-r(1)) * std::sin(kPi * r(0));
            });
        case Id::Heat2D:
            return map_rows(coords, [nu](auto r) {
                return (2.0 * nu * kPi * kPi - 1.0) * std::exp(-r(2)) * std::sin(kPi * r(0)) *
                       std::sin(kPi * r(1));
            });
        case Id::Burgers1D:
            // f = nu u_xx - u u_x for u = sin(pi x)
            return map_rows(coords, [nu](auto r) {
                const double s = std::sin(kPi * r(0)), c = std::cos(kPi * r(0));
                return -nu * kPi * kPi * s - kPi * s * c;
            });
        case Id::Burgers2D:
            // f = nu (u_xx + u_yy) - u (u_x + u_y) for u = sin(pi x) sin(pi y)
            return map_rows(coords, [nu](auto r) {
                const double sx = std::sin(kPi * r(0)), cx = std::cos(kPi * r(0));
                const double sy = std::sin(kPi * r(1)), cy = std::cos(kPi * r(1));
                return -2.0 * nu * kPi * kPi * sx * sy - kPi * sx * sy * (cx * sy + sx * cy);
            });
    }
    return {};
}

Vector initial_state(const Problem& p, const Matrix& space_coords) {
    assert(p.has_time());
    if (p.id == Id::Heat1D)
        return map_rows(space_coords, [](auto r) { return std::sin(kPi * r(0)); });
    return map_rows(space_coords,
                    [](auto r) { return std::sin(kPi * r(0)) * std::sin(kPi * r(1)); });
}

ExactDerivatives exact_derivatives(const Problem& p, const Matrix& coords) {
    ExactDerivatives d;
    d.u = exact_solution(p, coords);
    const double pi2 = kPi * kPi;
    switch (p.id) {
        case Id::Poisson1D:
            d.ux = map_rows(coords, [](auto r) { return std::cos(kPi * r(0)) / kPi; });
            d.uxx = -d.u * pi2;
            break;
        case Id::Poisson2D:
        case Id::Burgers2D:
            d.ux = map_rows(coords, [](auto r) {
                return kPi * std::cos(kPi * r(0)) * std::sin(kPi * r(1));
            });
            d.uy = map_rows(coords, [](auto r) {
                return kPi * std::sin(kPi * r(0)) * std::cos(kPi * r(1));
            });
            d.uxx = -d.u * pi2;
            d.uyy = -d.u * pi2;
            break;
        case Id::Heat1D:
            d.ux = map_rows(coords, [](auto r) {
                return kPi * std::exp(-r(1)) * std::cos(kPi * r(0));
            });
            d.ut = -d.u;
            d.uxx = -d.u * pi2;
            break;
        case Id::Heat2D:
            d.ux = map_rows(coords, [](auto r) {
                return kPi * std::exp(-r(2)) * std::cos(kPi * r(0)) * std::sin(kPi * r(1));
            });
            d.uy = map_rows(coords, [](auto r) {
                return kPi * std::exp(-r(2)) * std::sin(kPi * r(0)) * std::cos(kPi * r(1));
            });
            d.ut = -d.u;
            d.uxx = -d.u * pi2;
            d.uyy = -d.u * pi2;
            break;
        case Id::Burgers1D:
            d.ux = map_rows(coords, [](auto r) { return kPi * std::cos(kPi * r(0)); });
            d.uxx = -d.u * pi2;
            break;
    }
    return d;
}

} // namespace vsl::problems
