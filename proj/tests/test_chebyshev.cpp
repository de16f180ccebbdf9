#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "vsl/chebyshev.hpp"

using vsl::Vector;
namespace cheb = vsl::cheb;

namespace {

// Closed forms via trigonometry; the implementation must use recurrences only,
// so these serve as an independent oracle.
double oracle_value(int k, double xi) { return std::cos(k * std::acos(xi)); }

double oracle_d1(int k, double xi) {
    const double theta = std::acos(xi);
    return k * std::sin(k * theta) / std::sin(theta);
}

double oracle_d2(int k, double xi) {
    // Chebyshev ODE: (1 - xi^2) T'' - xi T' + k^2 T = 0.
    return (xi * oracle_d1(k, xi) - k * k * oracle_value(k, xi)) / (1.0 - xi * xi);
}

} // namespace

TEST_SUITE("chebyshev") {

TEST_CASE("values match the trigonometric closed form") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> draw(-0.999, 0.999);
    Vector xi(40);
    for (int i = 0; i < xi.size(); ++i) xi[i] = draw(rng);
    const cheb::Table table = cheb::evaluate(xi, 12);
    for (int k = 0; k <= 12; ++k)
        for (int i = 0; i < xi.size(); ++i)
            CHECK(std::abs(table.value(i, k) - oracle_value(k, xi[i])) <= 1e-12);
}

TEST_CASE("first and second derivatives match the trigonometric closed form") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> draw(-0.95, 0.95);
    Vector xi(40);
    for (int i = 0; i < xi.size(); ++i) xi[i] = draw(rng);
    const cheb::Table table = cheb::evaluate(xi, 10);
    for (int k = 0; k <= 10; ++k)
        for (int i = 0; i < xi.size(); ++i) {
            CHECK(std::abs(table.d1(i, k) - oracle_d1(k, xi[i])) <= 1e-10);
            CHECK(std::abs(table.d2(i, k) - oracle_d2(k, xi[i])) <= 1e-8);
        }
}

TEST_CASE("endpoint values are exact integers") {
    Vector xi(2);
    xi << -1.0, 1.0;
    const cheb::Table table = cheb::evaluate(xi, 20);
    for (int k = 0; k <= 20; ++k) {
        CHECK(table.value(1, k) == 1.0);
        CHECK(table.value(0, k) == (k % 2 == 0 ? 1.0 : -1.0));
        // T_k'(1) = k^2 holds exactly in recurrence arithmetic.
        CHECK(table.d1(1, k) == static_cast<double>(k) * k);
    }
}

TEST_CASE("low-degree rows are the monomials 1 and xi") {
    Vector xi(5);
    xi << -0.9, -0.3, 0.0, 0.4, 0.8;
    const cheb::Table table = cheb::evaluate(xi, 3);
    for (int i = 0; i < xi.size(); ++i) {
        CHECK(table.value(i, 0) == 1.0);
        CHECK(table.value(i, 1) == xi[i]);
        CHECK(table.d1(i, 0) == 0.0);
        CHECK(table.d1(i, 1) == 1.0);
        CHECK(table.d2(i, 1) == 0.0);
    }
}

TEST_CASE("interior nodes: ascending, interior, symmetric, half-angle identity") {
    for (int m : {1, 2, 5, 16, 32}) {
        const Vector x = cheb::interior_nodes01(m);
        REQUIRE(x.size() == m);
        for (int j = 0; j < m; ++j) {
            CHECK(x[j] > 0.0);
            CHECK(x[j] < 1.0);
            if (j > 0) CHECK(x[j] > x[j - 1]);
            const double pi = std::acos(-1.0);
            const double expected = 0.5 * (1.0 - std::cos(pi * (2 * j + 1) / (2 * m)));
            CHECK(std::abs(x[j] - expected) <= 1e-15);
            CHECK(std::abs(x[j] + x[m - 1 - j] - 1.0) <= 1e-15);
        }
    }
}

TEST_CASE("Lobatto nodes: exact endpoints, ascending, symmetric") {
    for (int n : {2, 5, 16, 32}) {
        const Vector x = cheb::lobatto_nodes01(n);
        REQUIRE(x.size() == n + 1);
        CHECK(x[0] == 0.0);
        CHECK(x[n] == 1.0);
        const double pi = std::acos(-1.0);
        for (int j = 0; j <= n; ++j) {
            if (j > 0) CHECK(x[j] > x[j - 1]);
            const double expected = 0.5 * (1.0 - std::cos(pi * j / n));
            CHECK(std::abs(x[j] - expected) <= 1e-15);
            CHECK(std::abs(x[j] + x[n - j] - 1.0) <= 1e-15);
        }
    }
}

} // TEST_SUITE
