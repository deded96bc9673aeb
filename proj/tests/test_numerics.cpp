#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pgc/numerics.hpp"

using namespace pgc;

TEST_CASE("cumulative Simpson: quadratics exact everywhere, cubics at panel ends") {
    const int n = 101;
    const auto s = linspace(0.0, 2.0, n);
    const double h = s[1] - s[0];

    std::vector<double> quadratic(s.size());
    for (size_t i = 0; i < s.size(); ++i) quadratic[i] = 3.0 * s[i] * s[i] - 2.0 * s[i];
    const auto iq = cumulative_simpson(quadratic, h);
    for (size_t i = 0; i < s.size(); ++i) {
        const double exact = s[i] * s[i] * s[i] - s[i] * s[i];
        CHECK(iq[i] == doctest::Approx(exact).epsilon(1e-13));
    }

    std::vector<double> cubic(s.size());
    for (size_t i = 0; i < s.size(); ++i) cubic[i] = s[i] * s[i] * s[i] - 2.0 * s[i];
    const auto ic = cumulative_simpson(cubic, h);
    for (size_t i = 0; i < s.size(); i += 2) {
        const double exact = s[i] * s[i] * s[i] * s[i] / 4.0 - s[i] * s[i];
        CHECK(ic[i] == doctest::Approx(exact).epsilon(1e-13));
    }

    auto sup_error = [](int m) {
        const auto grid = linspace(0.0, 2.0, m);
        const double step = grid[1] - grid[0];
        std::vector<double> f(grid.size());
        for (size_t i = 0; i < grid.size(); ++i) f[i] = std::exp(grid[i]) * std::cos(3.0 * grid[i]);
        const auto integral = cumulative_simpson(f, step);
        double sup = 0.0;
        for (size_t i = 0; i < grid.size(); ++i) {
            // Antiderivative of e^x cos(3x): e^x (cos 3x + 3 sin 3x)/10.
            const double exact = std::exp(grid[i]) * (std::cos(3.0 * grid[i]) +
                                                      3.0 * std::sin(3.0 * grid[i])) / 10.0 -
                                 0.1;
            sup = std::max(sup, std::abs(integral[i] - exact));
        }
        return sup;
    };
    const double e1 = sup_error(101);
    const double e2 = sup_error(201);
    CHECK(e1 / e2 > 12.0); // fourth order: expect about 16x
}

TEST_CASE("finite-difference weights reproduce exact derivatives of polynomials") {
    const auto s = linspace(1.0, 2.0, 41);
    std::vector<double> f(s.size());
    for (size_t i = 0; i < s.size(); ++i) f[i] = s[i] * s[i] * s[i];

    const auto d1 = derivative_series(s, f, 1);
    const auto d2 = derivative_series(s, f, 2);
    const auto d3 = derivative_series(s, f, 3, 7);
    for (size_t i = 0; i < s.size(); ++i) {
        CHECK(d1[i] == doctest::Approx(3.0 * s[i] * s[i]).epsilon(1e-10));
        CHECK(d2[i] == doctest::Approx(6.0 * s[i]).epsilon(1e-9));
        CHECK(d3[i] == doctest::Approx(6.0).epsilon(1e-7));
    }
}

TEST_CASE("derivative series converges at fourth order, boundaries included") {
    auto sup_error = [](int m) {
        const auto grid = linspace(0.0, 1.5, m);
        std::vector<double> f(grid.size());
        for (size_t i = 0; i < grid.size(); ++i) f[i] = std::sin(4.0 * grid[i]);
        const auto d = derivative_series(grid, f, 1);
        double sup = 0.0;
        for (size_t i = 0; i < grid.size(); ++i) {
            sup = std::max(sup, std::abs(d[i] - 4.0 * std::cos(4.0 * grid[i])));
        }
        return sup;
    };
    CHECK(sup_error(201) / sup_error(401) > 12.0);
}

TEST_CASE("RK4 integrates a known linear system") {
    // m1' = -m2, m2' = m1 from (1, 0): the circle (cos s, sin s).
    auto rhs = [](double, const std::array<double, 2>& m) {
        return std::array<double, 2>{-m[1], m[0]};
    };
    const auto states = rk4_integrate(rhs, 0.0, {1.0, 0.0}, 0.01, 200);
    const double s_end = 2.0;
    CHECK(states.back()[0] == doctest::Approx(std::cos(s_end)).epsilon(1e-8));
    CHECK(states.back()[1] == doctest::Approx(std::sin(s_end)).epsilon(1e-8));
}

TEST_CASE("series statistics") {
    CHECK(mean({1.0, 2.0, 3.0}) == doctest::Approx(2.0));
    CHECK(relative_deviation({5.0, 5.0, 5.0}) == doctest::Approx(0.0));
    CHECK(relative_deviation({1.0, -1.0}) > 1.0);

    const auto s = linspace(0.0, 1.0, 11);
    std::vector<double> f(s.size());
    for (size_t i = 0; i < s.size(); ++i) f[i] = 2.5 * s[i] - 0.75;
    const auto fit = affine_fit(s, f);
    CHECK(fit.slope == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(-0.75).epsilon(1e-12));
}
