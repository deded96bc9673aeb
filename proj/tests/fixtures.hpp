#pragma once

// Shared fixture curves used across the test suites.

#include "pgc/expr.hpp"
#include "pgc/frenet.hpp"
#include "pgc/reconstruct.hpp"

namespace fixtures {

// Spacelike curve with kappa = 1/s, tau = -2/s on a positive domain:
// alpha(s) = (s, s/6 (2 sinh(2 ln s) - cosh(2 ln s)),
//                s/6 (2 cosh(2 ln s) - sinh(2 ln s))).
inline pgc::GraphCurve ratio_curve(double lo = 0.5, double hi = 5.0) {
    const pgc::Expr y =
        pgc::parse("(x/6)*(2*sinh(2*ln(x)) - cosh(2*ln(x)))", "x");
    const pgc::Expr z =
        pgc::parse("(x/6)*(2*cosh(2*ln(x)) - sinh(2*ln(x)))", "x");
    return pgc::GraphCurve(y, z, lo, hi);
}

// Normal-parabola fixture (s, 0, s^2/2): kappa = 1, tau = 0.
inline pgc::GraphCurve parabola(double lo = 0.25, double hi = 3.0) {
    return pgc::GraphCurve(pgc::parse("0", "x"), pgc::parse("x^2/2", "x"), lo, hi);
}

// Salkowski-type intrinsic data kappa = a (constant), tau = s. The c1/c2
// constants place the curve so that its normal component has constant
// length when decomposed at the origin.
inline pgc::IntrinsicSpec salkowski(double a = 1.0, double lo = 0.5, double hi = 2.5,
                                    bool centered = true) {
    pgc::IntrinsicSpec spec;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    spec.kappa = pgc::parse(buf, "s");
    spec.tau = pgc::parse("s", "s");
    spec.lo = lo;
    spec.hi = hi;
    if (centered) {
        spec.c1 = -a / 2.0;
        spec.c2 = a / 2.0;
    }
    return spec;
}

} // namespace fixtures
