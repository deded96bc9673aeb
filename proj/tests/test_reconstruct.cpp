#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "pgc/errors.hpp"
#include "pgc/numerics.hpp"
#include "pgc/reconstruct.hpp"

using namespace pgc;

TEST_CASE("kappa = 1, tau = 0 rebuilds the normal parabola exactly") {
    IntrinsicSpec spec;
    spec.kappa = parse("1", "s");
    spec.tau = parse("0", "s");
    spec.lo = 0.0;
    spec.hi = 2.0;
    const auto curve = reconstruct_curve(spec, 101);
    for (size_t i = 0; i < curve.s.size(); ++i) {
        const double s = curve.s[i];
        CHECK(curve.alpha[i].x == s);
        CHECK(std::abs(curve.alpha[i].y) <= 1e-12);
        CHECK(std::abs(curve.alpha[i].z - s * s / 2.0) <= 1e-12);
    }
}

TEST_CASE("kappa = 0 rebuilds a straight line") {
    IntrinsicSpec spec;
    spec.kappa = parse("0", "s");
    spec.tau = parse("1 + s", "s");
    spec.lo = 0.0;
    spec.hi = 1.0;
    const auto curve = reconstruct_curve(spec, 51);
    for (size_t i = 0; i < curve.s.size(); ++i) {
        CHECK(std::abs(curve.alpha[i].y) <= 1e-14);
        CHECK(std::abs(curve.alpha[i].z) <= 1e-14);
        CHECK(curve.frames[i].T.y == 0.0);
    }
}

TEST_CASE("reconstructed frames satisfy the metric identities exactly") {
    IntrinsicSpec spec;
    spec.kappa = parse("1/s", "s");
    spec.tau = parse("-2/s", "s");
    spec.lo = 1.0;
    spec.hi = 3.0;
    const auto curve = reconstruct_curve(spec, 201);
    for (const auto& f : curve.frames) {
        // cosh^2 - sinh^2: cancellation leaves a few ulps of the squares.
        CHECK(scalar_product(f.N, f.N) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(scalar_product(f.B, f.B) == doctest::Approx(1.0).epsilon(1e-12));
        const double det = f.N.y * f.B.z - f.N.z * f.B.y;
        CHECK(det == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("round trip: reconstruct then re-analyze recovers kappa and tau") {
    IntrinsicSpec spec;
    spec.kappa = parse("1/s", "s");
    spec.tau = parse("-2/s", "s");
    spec.lo = 1.0;
    spec.hi = 3.0;
    const auto curve = reconstruct_curve(spec, 2001);
    const auto frames = analyze_samples(curve.to_samples());
    double sup_kappa = 0.0, sup_tau = 0.0;
    for (const auto& f : frames) {
        sup_kappa = std::max(sup_kappa, std::abs(f.kappa - 1.0 / f.s));
        sup_tau = std::max(sup_tau, std::abs(f.tau + 2.0 / f.s));
    }
    CHECK(sup_kappa <= 1e-4);
    CHECK(sup_tau <= 1e-4);
}

TEST_CASE("coefficient system right-hand side") {
    CHECK(coefficient_rhs(3.0, -2.0, 1.0, 0.0, 0.0, 0.0)[0] == 0.0);
    CHECK(coefficient_rhs(3.0, -2.0, 1.0, 0.0, 0.0, 0.0)[1] == 0.0);
    const auto d = coefficient_rhs(0.0, 0.0, 0.0, 1.0, 1.0, 0.0);
    CHECK(d[0] == 0.0);
    CHECK(d[1] == 0.0);
}

TEST_CASE("RK4 of the coefficient system reproduces the linear solution") {
    // For kappa = 1/s, tau = -2/s the pair (m1, m2) = (s/3, 2s/3) solves the
    // system: m1' = 1/3 = -(1/s)s + (2/s)(2s/3), m2' = 2/3 = (2/s)(s/3).
    const Expr kappa = parse("1/s", "s");
    const Expr tau = parse("-2/s", "s");
    auto rhs = [&](double s, const std::array<double, 2>& m) {
        return coefficient_rhs(m[0], m[1], s, kappa.evaluate(s), tau.evaluate(s), 0.0);
    };
    const int n = 2001;
    const double h = (5.0 - 1.0) / (n - 1);
    const auto states = rk4_integrate(rhs, 1.0, {1.0 / 3.0, 2.0 / 3.0}, h, n - 1);
    for (int i = 0; i < n; ++i) {
        const double s = 1.0 + h * i;
        CHECK(std::abs(states[static_cast<size_t>(i)][0] - s / 3.0) <= 1e-8);
        CHECK(std::abs(states[static_cast<size_t>(i)][1] - 2.0 * s / 3.0) <= 1e-8);
    }
}

TEST_CASE("closed form reduces to the homogeneous solution when kappa = 0") {
    IntrinsicSpec spec;
    spec.kappa = parse("0", "s");
    spec.tau = parse("1", "s");
    spec.lo = 0.0;
    spec.hi = 2.0;
    spec.c1 = 2.0;
    spec.c2 = 0.5;
    const auto series = coefficient_closed_form(spec, 201);
    for (size_t i = 0; i < series.s.size(); ++i) {
        const double t = series.s[i];
        CHECK(std::abs(series.m2[i] - (2.0 * std::exp(t) - 0.5 * std::exp(-t))) <= 1e-12);
        CHECK(std::abs(series.m1[i] - (-2.0 * std::exp(t) - 0.5 * std::exp(-t))) <= 1e-12);
    }
}

TEST_CASE("closed form agrees with RK4 for kappa = 1, tau = 1") {
    IntrinsicSpec spec;
    spec.kappa = parse("1", "s");
    spec.tau = parse("1", "s");
    spec.lo = 0.0;
    spec.hi = 2.0;
    const int n = 2001;
    const auto closed = coefficient_closed_form(spec, n);
    const auto marched = integrate_coefficients(spec, n);
    for (size_t i = 0; i < closed.s.size(); ++i) {
        CHECK(std::abs(closed.m1[i] - marched.m1[i]) <= 1e-6);
        CHECK(std::abs(closed.m2[i] - marched.m2[i]) <= 1e-6);
        // Analytic check: m2 = sinh s - s, m1 = 1 - cosh s.
        CHECK(std::abs(closed.m2[i] - (std::sinh(closed.s[i]) - closed.s[i])) <= 1e-9);
        CHECK(std::abs(closed.m1[i] - (1.0 - std::cosh(closed.s[i]))) <= 1e-9);
    }
}

TEST_CASE("closed form is consistent with m1 = -dm2/dt") {
    IntrinsicSpec spec;
    spec.kappa = parse("1/s", "s");
    spec.tau = parse("-2/s", "s");
    spec.lo = 1.0;
    spec.hi = 3.0;
    const auto series = coefficient_closed_form(spec, 1001);
    // dm2/dt = m2'/tau on the s grid.
    const auto dm2 = derivative_series(series.s, series.m2, 1);
    double sup = 0.0;
    for (size_t i = 0; i < series.s.size(); ++i) {
        const double tau = spec.tau.evaluate(series.s[i]);
        sup = std::max(sup, std::abs(series.m1[i] + dm2[i] / tau));
    }
    CHECK(sup <= 1e-6);
}

TEST_CASE("closed form satisfies the middle equation; sign variants do not") {
    IntrinsicSpec spec;
    spec.kappa = parse("1/s", "s");
    spec.tau = parse("-2/s", "s");
    spec.lo = 1.0;
    spec.hi = 3.0;
    const auto diag = closed_form_variants(spec, 1001);
    CHECK(diag.primary_residual <= 1e-6);
    CHECK(diag.alternate_sign_residual > 1e-2);
    CHECK(diag.extra_jacobian_residual > 1e-2);
}

TEST_CASE("closed form refuses vanishing or sign-changing torsion") {
    IntrinsicSpec flat;
    flat.kappa = parse("1", "s");
    flat.tau = parse("0", "s");
    flat.lo = 0.0;
    flat.hi = 1.0;
    CHECK_THROWS_AS(coefficient_closed_form(flat, 101), ZeroTorsionError);

    IntrinsicSpec crossing;
    crossing.kappa = parse("1", "s");
    crossing.tau = parse("s - 1", "s");
    crossing.lo = 0.0;
    crossing.hi = 2.0;
    CHECK_THROWS_AS(coefficient_closed_form(crossing, 101), ZeroTorsionError);
}

TEST_CASE("third-order tangent equation: symbolic graph route") {
    const auto c = fixtures::ratio_curve(1.0, 4.0);
    const auto res = tangent_ode_residual(c, sample_grid(c, 301));
    CHECK(res[0] <= 1e-6);
    CHECK(res[1] <= 1e-6);

    CHECK_THROWS_AS(tangent_ode_residual(fixtures::parabola(), {0.5, 1.0, 1.5}),
                    ZeroTorsionError);
}

TEST_CASE("third-order tangent equation: intrinsic route") {
    const auto spec = fixtures::salkowski(1.0, 0.5, 2.0);
    const auto res = tangent_ode_residual(spec, 1001);
    CHECK(res[0] <= 1e-5);
    CHECK(res[1] <= 1e-5);

    IntrinsicSpec flat = spec;
    flat.tau = parse("0", "s");
    CHECK_THROWS_AS(tangent_ode_residual(flat, 101), ZeroTorsionError);
}

TEST_CASE("Salkowski reconstruction has constant kappa and tau = s") {
    const auto spec = fixtures::salkowski(1.0, 0.5, 2.5);
    const auto curve = reconstruct_curve(spec, 2001);
    const auto frames = analyze_samples(curve.to_samples());
    for (const auto& f : frames) {
        CHECK(std::abs(f.kappa - 1.0) <= 1e-6);
        CHECK(std::abs(f.tau - f.s) <= 1e-6);
    }
    // Spot value in the interior.
    const auto mid = frames[frames.size() / 2];
    CHECK(mid.s == doctest::Approx(1.5));
    CHECK(mid.kappa == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(mid.tau == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("round trip over random smooth intrinsic templates") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> amp(0.2, 0.8);
    std::uniform_real_distribution<double> freq(1.0, 5.0);
    for (int trial = 0; trial < 5; ++trial) {
        char kbuf[96], tbuf[96];
        std::snprintf(kbuf, sizeof(kbuf), "1.5 + %.6f*sin(%.6f*s)", amp(rng), freq(rng));
        std::snprintf(tbuf, sizeof(tbuf), "%.6f + %.6f*cos(%.6f*s)", amp(rng), amp(rng),
                      freq(rng));
        IntrinsicSpec spec;
        spec.kappa = parse(kbuf, "s");
        spec.tau = parse(tbuf, "s");
        spec.lo = 0.0;
        spec.hi = 2.0;
        const auto curve = reconstruct_curve(spec, 2001);
        const auto frames = analyze_samples(curve.to_samples());
        double sup = 0.0;
        for (const auto& f : frames) {
            sup = std::max(sup, std::abs(f.kappa - spec.kappa.evaluate(f.s)));
            sup = std::max(sup, std::abs(f.tau - spec.tau.evaluate(f.s)));
        }
        CHECK(sup <= 1e-3);
    }
}
