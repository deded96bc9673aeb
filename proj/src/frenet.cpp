#include "pgc/frenet.hpp"

#include <cmath>
#include <stdexcept>

#include "pgc/errors.hpp"
#include "pgc/numerics.hpp"

namespace pgc {

GraphCurve::GraphCurve(Expr y, Expr z, double lo, double hi, GVector origin)
    : lo_(lo), hi_(hi), origin_(origin) {
    if (!(lo < hi)) throw std::invalid_argument("GraphCurve: domain must satisfy lo < hi");
    y_[0] = std::move(y);
    z_[0] = std::move(z);
    for (int k = 1; k <= 4; ++k) {
        y_[static_cast<size_t>(k)] = y_[static_cast<size_t>(k - 1)].derivative();
        z_[static_cast<size_t>(k)] = z_[static_cast<size_t>(k - 1)].derivative();
    }
}

GVector GraphCurve::position(double s) const {
    return {s, y_[0].evaluate(s), z_[0].evaluate(s)};
}

std::vector<double> sample_grid(const GraphCurve& c, int n) {
    return linspace(c.lo(), c.hi(), n);
}

AdmissibilityReport check_admissible(const GraphCurve& c, const std::vector<double>& grid,
                                     double adm_eps) {
    AdmissibilityReport report;
    for (double s : grid) {
        const double y2 = c.y(2).evaluate(s);
        const double z2 = c.z(2).evaluate(s);
        const double d2 = y2 * y2 - z2 * z2;
        if (!(std::abs(d2) > adm_eps)) {
            report.ok = false;
            report.violations.emplace_back(s, d2);
        }
    }
    return report;
}

FrenetSample frame_at(const GraphCurve& c, double s, double adm_eps) {
    const double y1 = c.y(1).evaluate(s);
    const double z1 = c.z(1).evaluate(s);
    const double y2 = c.y(2).evaluate(s);
    const double z2 = c.z(2).evaluate(s);
    const double y3 = c.y(3).evaluate(s);
    const double z3 = c.z(3).evaluate(s);

    const double d2 = y2 * y2 - z2 * z2;
    if (!(std::abs(d2) > adm_eps)) {
        throw AdmissibilityError("inadmissible point: y''^2 - z''^2 vanishes at s = " +
                                     std::to_string(s),
                                 s, d2);
    }

    FrenetSample f;
    f.s = s;
    f.kappa = std::sqrt(std::abs(d2));
    f.eps = d2 > 0.0 ? +1 : -1; // det(T, N, B) = 1 criterion
    f.T = {1.0, y1, z1};
    f.N = {0.0, y2 / f.kappa, z2 / f.kappa};
    f.B = {0.0, f.eps * z2 / f.kappa, f.eps * y2 / f.kappa};
    f.tau = (y2 * z3 - y3 * z2) / std::abs(d2);
    return f;
}

std::vector<FrenetSample> frame_grid(const GraphCurve& c, const std::vector<double>& grid,
                                     double adm_eps) {
    std::vector<FrenetSample> frames;
    frames.reserve(grid.size());
    for (double s : grid) frames.push_back(frame_at(c, s, adm_eps));
    for (size_t i = 1; i < frames.size(); ++i) {
        if (frames[i].eps != frames[0].eps) {
            throw FrameError("orientation sign flips between s = " + std::to_string(grid[0]) +
                             " and s = " + std::to_string(grid[i]) +
                             "; the curve crosses an inadmissible point");
        }
    }
    return frames;
}

double torsion_det(const GraphCurve& c, double s, double adm_eps) {
    const GVector d1{1.0, c.y(1).evaluate(s), c.z(1).evaluate(s)};
    const GVector d2{0.0, c.y(2).evaluate(s), c.z(2).evaluate(s)};
    const GVector d3{0.0, c.y(3).evaluate(s), c.z(3).evaluate(s)};
    const double disc = d2.y * d2.y - d2.z * d2.z;
    if (!(std::abs(disc) > adm_eps)) {
        throw AdmissibilityError("inadmissible point: y''^2 - z''^2 vanishes at s = " +
                                     std::to_string(s),
                                 s, disc);
    }
    const double det = d1.x * (d2.y * d3.z - d2.z * d3.y) -
                       d1.y * (d2.x * d3.z - d2.z * d3.x) +
                       d1.z * (d2.x * d3.y - d2.y * d3.x);
    return det / std::abs(disc);
}

CausalityReport spacelike_check(const GraphCurve& c, const std::vector<double>& grid) {
    CausalityReport report;
    std::vector<double> d2(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        const double y2 = c.y(2).evaluate(grid[i]);
        const double z2 = c.z(2).evaluate(grid[i]);
        d2[i] = y2 * y2 - z2 * z2;
    }
    bool any_pos = false;
    bool any_neg = false;
    for (double v : d2) {
        any_pos = any_pos || v > 0.0;
        any_neg = any_neg || v < 0.0;
    }
    if (any_pos && any_neg) {
        report.verdict = Causality::Mixed;
        for (size_t i = 1; i < grid.size(); ++i) {
            if ((d2[i - 1] > 0.0) != (d2[i] > 0.0)) {
                report.crossings.emplace_back(grid[i - 1], grid[i]);
            }
        }
    } else {
        report.verdict = any_pos ? Causality::Timelike : Causality::Spacelike;
    }
    return report;
}

GraphCurve transform(const GraphCurve& c, const Motion& m) {
    const Expr x = Expr::variable("x");
    const Expr shifted = x - Expr::number(m.a);
    const Expr y0 = c.y(0).substitute(shifted);
    const Expr z0 = c.z(0).substitute(shifted);
    const double ch = std::cosh(m.phi);
    const double sh = std::sinh(m.phi);
    const Expr ny = Expr::number(m.b) + Expr::number(m.c) * shifted +
                    Expr::number(ch) * y0 + Expr::number(sh) * z0;
    const Expr nz = Expr::number(m.d) + Expr::number(m.e) * shifted +
                    Expr::number(sh) * y0 + Expr::number(ch) * z0;
    return GraphCurve(ny, nz, c.lo() + m.a, c.hi() + m.a, apply_motion(m, c.origin()));
}

std::vector<FrenetSample> analyze_samples(const SampledCurve& c, double adm_eps) {
    const size_t n = c.s.size();
    if (n < 7 || c.y.size() != n || c.z.size() != n) {
        throw std::invalid_argument("analyze_samples: need >= 7 matching samples");
    }

    std::vector<double> y1, z1, y2, z2;
    if (c.ty && c.tz) {
        y1 = *c.ty;
        z1 = *c.tz;
        y2 = derivative_series(c.s, y1, 1);
        z2 = derivative_series(c.s, z1, 1);
    } else {
        // Wider stencils here: the torsion chains two differencing stages,
        // and the one-sided boundary stencils would otherwise drop an order.
        y1 = derivative_series(c.s, c.y, 1, 7);
        z1 = derivative_series(c.s, c.z, 1, 7);
        y2 = derivative_series(c.s, c.y, 2, 7);
        z2 = derivative_series(c.s, c.z, 2, 7);
    }

    std::vector<FrenetSample> frames(n);
    int eps0 = 0;
    for (size_t i = 0; i < n; ++i) {
        const double d2 = y2[i] * y2[i] - z2[i] * z2[i];
        if (!(std::abs(d2) > adm_eps)) {
            throw AdmissibilityError("inadmissible sample: y''^2 - z''^2 vanishes at s = " +
                                         std::to_string(c.s[i]),
                                     c.s[i], d2);
        }
        FrenetSample& f = frames[i];
        f.s = c.s[i];
        f.kappa = std::sqrt(std::abs(d2));
        f.eps = d2 > 0.0 ? +1 : -1;
        f.T = {1.0, y1[i], z1[i]};
        f.N = {0.0, y2[i] / f.kappa, z2[i] / f.kappa};
        f.B = {0.0, f.eps * z2[i] / f.kappa, f.eps * y2[i] / f.kappa};
        if (eps0 == 0) {
            eps0 = f.eps;
        } else if (f.eps != eps0) {
            throw FrameError("orientation sign flips across the sampled grid at s = " +
                             std::to_string(c.s[i]));
        }
    }

    // Torsion through the frame angle: its first difference carries an
    // order of magnitude less rounding noise than third differences of the
    // positions, and it equals the determinant formula exactly.
    std::vector<double> angle(n);
    for (size_t i = 0; i < n; ++i) {
        angle[i] = eps0 < 0 ? std::atanh(-y2[i] / z2[i]) : std::atanh(-z2[i] / y2[i]);
    }
    std::vector<double> dangle = derivative_series(c.s, angle, 1);

    // With tangent data the first and last two angle samples come from
    // one-sided stencils and the torsion stencil spreads their error two
    // points further; evaluating the affected stencils on purely interior
    // nodes restores the interior order there. Position-only input gains
    // nothing from this (its edge error is rounding-dominated).
    constexpr int kDirty = 2;
    constexpr int kEdge = kDirty + 2;
    constexpr int kWindow = 5;
    if (c.ty && c.tz && static_cast<int>(n) >= 2 * (kDirty + kWindow) + kEdge) {
        const auto patch = [&](int i, int base) {
            const std::vector<double> nodes(c.s.begin() + base, c.s.begin() + base + kWindow);
            const auto w = fd_weights(nodes, c.s[static_cast<size_t>(i)], 1);
            double acc = 0.0;
            for (int k = 0; k < kWindow; ++k) {
                acc += w[static_cast<size_t>(k)] * angle[static_cast<size_t>(base + k)];
            }
            dangle[static_cast<size_t>(i)] = acc;
        };
        for (int i = 0; i < kEdge; ++i) patch(i, kDirty);
        for (int i = static_cast<int>(n) - kEdge; i < static_cast<int>(n); ++i) {
            patch(i, static_cast<int>(n) - kDirty - kWindow);
        }
    }
    for (size_t i = 0; i < n; ++i) {
        frames[i].tau = eps0 < 0 ? dangle[i] : -dangle[i];
    }
    return frames;
}

std::pair<Expr, Expr> curvature_torsion_exprs(const GraphCurve& c, int eps) {
    const Expr y2 = c.y(2), z2 = c.z(2);
    const Expr disc = Expr::number(eps) * (y2 * y2 - z2 * z2);
    Expr kappa = sqrt(disc);
    Expr tau = (y2 * c.z(3) - c.y(3) * z2) / disc;
    return {std::move(kappa), std::move(tau)};
}

std::array<double, 3> frenet_ode_residuals(const std::vector<FrenetSample>& frames) {
    const size_t n = frames.size();
    std::vector<double> s(n);
    std::vector<std::vector<double>> comp(6, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i) {
        s[i] = frames[i].s;
        comp[0][i] = frames[i].T.y;
        comp[1][i] = frames[i].T.z;
        comp[2][i] = frames[i].N.y;
        comp[3][i] = frames[i].N.z;
        comp[4][i] = frames[i].B.y;
        comp[5][i] = frames[i].B.z;
    }
    std::vector<std::vector<double>> d(6);
    for (size_t k = 0; k < 6; ++k) d[k] = derivative_series(s, comp[k], 1, 7);

    std::array<double, 3> sup{0.0, 0.0, 0.0};
    for (size_t i = 0; i < n; ++i) {
        const FrenetSample& f = frames[i];
        const double rt = std::max(std::abs(d[0][i] - f.kappa * f.N.y),
                                   std::abs(d[1][i] - f.kappa * f.N.z));
        const double rn = std::max(std::abs(d[2][i] - f.tau * f.B.y),
                                   std::abs(d[3][i] - f.tau * f.B.z));
        const double rb = std::max(std::abs(d[4][i] - f.tau * f.N.y),
                                   std::abs(d[5][i] - f.tau * f.N.z));
        sup[0] = std::max(sup[0], rt);
        sup[1] = std::max(sup[1], rn);
        sup[2] = std::max(sup[2], rb);
    }
    return sup;
}

} // namespace pgc
