#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vsl/errors.hpp"
#include "vsl/metrics.hpp"

using vsl::Vector;
namespace metrics = vsl::metrics;

TEST_SUITE("metrics") {

TEST_CASE("identical fields have exactly zero error") {
    const Vector u = (M_PI * metrics::uniform_grid(50).array()).sin();
    const metrics::ErrorReport r = metrics::relative_errors(u, u);
    CHECK(r.l2_rel == 0.0);
    CHECK(r.linf_rel == 0.0);
    CHECK(r.max_abs == 0.0);
}

TEST_CASE("doubling the field gives unit relative error") {
    Vector u(4);
    u << 1.0, -2.0, 0.5, 3.0;
    const metrics::ErrorReport r = metrics::relative_errors(2.0 * u, u);
    CHECK(r.l2_rel == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.linf_rel == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.max_abs == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("errors match a hand-built perturbation oracle") {
    const Vector x = metrics::uniform_grid(400);
    const Vector exact = (M_PI * x.array()).sin();
    const Vector perturbation = 0.01 * (3 * M_PI * x.array()).sin();
    const Vector numeric = exact + perturbation;

    double num = 0.0, den = 0.0, worst = 0.0, umax = 0.0;
    for (int i = 0; i < 400; ++i) {
        num += perturbation[i] * perturbation[i];
        den += exact[i] * exact[i];
        worst = std::max(worst, std::abs(perturbation[i]));
        umax = std::max(umax, std::abs(exact[i]));
    }
    const metrics::ErrorReport r = metrics::relative_errors(numeric, exact);
    CHECK(r.l2_rel == doctest::Approx(std::sqrt(num / den)).epsilon(1e-14));
    CHECK(r.linf_rel == doctest::Approx(worst / umax).epsilon(1e-14));
    CHECK(r.max_abs == doctest::Approx(worst).epsilon(1e-14));
}

TEST_CASE("relative errors are invariant under uniform scaling") {
    const Vector x = metrics::uniform_grid(100);
    const Vector exact = (2 * M_PI * x.array()).cos() + 1.1;
    const Vector numeric = exact.array() + 1e-4 * x.array();
    const metrics::ErrorReport base = metrics::relative_errors(numeric, exact);
    for (double scale : {1e8, 1e-8, -3.0}) {
        const metrics::ErrorReport scaled =
            metrics::relative_errors(scale * numeric, scale * exact);
        CHECK(scaled.l2_rel == doctest::Approx(base.l2_rel).epsilon(1e-14));
        CHECK(scaled.linf_rel == doctest::Approx(base.linf_rel).epsilon(1e-14));
    }
}

TEST_CASE("the relative L2 is stable under grid refinement") {
    auto error_on = [](int count) {
        const Vector x = metrics::uniform_grid(count);
        const Vector exact = (M_PI * x.array()).sin();
        const Vector numeric = exact + 0.001 * (2 * M_PI * x.array()).sin().matrix();
        return metrics::relative_errors(numeric, exact).l2_rel;
    };
    const double coarse = error_on(400);
    const double fine = error_on(800);
    CHECK(std::abs(coarse - fine) <= 0.01 * coarse);
}

TEST_CASE("degenerate inputs are rejected") {
    const Vector u = Vector::Ones(5);
    CHECK_THROWS_AS(metrics::relative_errors(u, Vector::Ones(4)), vsl::ConfigError);
    CHECK_THROWS_AS(metrics::relative_errors(u, Vector::Zero(5)), vsl::ConfigError);
}

TEST_CASE("trapezoid weights integrate linear functions exactly") {
    const Vector w = metrics::trapezoid_weights(11);
    const Vector x = metrics::uniform_grid(11);
    CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(w.dot(x) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w[0] == doctest::Approx(0.5 * w[5]).epsilon(1e-15)); // halved endpoints
}

TEST_CASE("weighted errors match the trapezoid oracle") {
    const int count = 200;
    const Vector x = metrics::uniform_grid(count);
    const Vector exact = (M_PI * x.array()).sin();
    const Vector numeric = exact.array() + 0.01 * x.array() * (1 - x.array());
    const Vector w = metrics::trapezoid_weights(count);

    double num = 0.0, den = 0.0;
    for (int i = 0; i < count; ++i) {
        const double d = numeric[i] - exact[i];
        num += w[i] * d * d;
        den += w[i] * exact[i] * exact[i];
    }
    const metrics::ErrorReport r = metrics::relative_errors(numeric, exact, &w);
    CHECK(r.l2_rel == doctest::Approx(std::sqrt(num / den)).epsilon(1e-14));
    // The max-ratio norm ignores the weights.
    const metrics::ErrorReport plain = metrics::relative_errors(numeric, exact);
    CHECK(r.linf_rel == plain.linf_rel);
}

TEST_CASE("uniform grid spans the unit interval inclusively") {
    const Vector g = metrics::uniform_grid(5);
    CHECK(g[0] == 0.0);
    CHECK(g[4] == 1.0);
    CHECK(g[2] == doctest::Approx(0.5).epsilon(1e-16));
    CHECK_THROWS_AS(metrics::uniform_grid(1), vsl::ConfigError);
}

} // TEST_SUITE
