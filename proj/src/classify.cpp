#include "pgc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pgc/errors.hpp"
#include "pgc/numerics.hpp"

namespace pgc {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

Verdict verdict_from(double deviation, double tol, double indeterminate_factor) {
    if (deviation <= tol) return Verdict::True;
    if (deviation <= indeterminate_factor * tol) return Verdict::Indeterminate;
    return Verdict::False;
}

std::vector<double> Decomposition::tangential_norm2() const {
    std::vector<double> out(m0.size());
    for (size_t i = 0; i < m0.size(); ++i) out[i] = m0[i] * m0[i];
    return out;
}

std::vector<double> Decomposition::normal_norm2() const {
    std::vector<double> out(q.size());
    for (size_t i = 0; i < q.size(); ++i) out[i] = std::abs(q[i]);
    return out;
}

Decomposition decompose(const std::vector<GVector>& alpha,
                        const std::vector<FrenetSample>& frames, const GVector& origin,
                        Decomposition::Backing backing) {
    if (alpha.size() != frames.size() || alpha.empty()) {
        throw std::invalid_argument("decompose: positions and frames must match");
    }
    Decomposition d;
    d.origin = origin;
    d.backing = backing;
    const size_t n = alpha.size();
    d.s.resize(n);
    d.m0.resize(n);
    d.m1.resize(n);
    d.m2.resize(n);
    d.q.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const FrenetSample& f = frames[i];
        if (std::abs(planar_product(f.N, f.N) + 1.0) > 1e-6) {
            throw FrameError("degenerate frame: g(N, N) strays from -1 at s = " +
                             std::to_string(f.s));
        }
        const GVector rel = alpha[i] - origin;
        const double m0 = rel.x;
        const GVector r = rel - m0 * f.T;
        const double m1 = -planar_product(r, f.N);
        const double m2 = planar_product(r, f.B);
        d.s[i] = f.s;
        d.m0[i] = m0;
        d.m1[i] = m1;
        d.m2[i] = m2;
        d.q[i] = m2 * m2 - m1 * m1;
    }
    d.c0 = d.m0[0] - d.s[0];
    return d;
}

Decomposition decompose(const GraphCurve& c, const std::vector<double>& grid,
                        const GVector& origin) {
    const auto frames = frame_grid(c, grid);
    std::vector<GVector> alpha;
    alpha.reserve(grid.size());
    for (double s : grid) alpha.push_back(c.position(s));
    return decompose(alpha, frames, origin, Decomposition::Backing::Symbolic);
}

ConstantRatioResult classify_constant_ratio(const Decomposition& d, double tol,
                                            double indeterminate_factor) {
    std::vector<double> rho(d.s.size());
    for (size_t i = 0; i < d.s.size(); ++i) {
        if (std::abs(d.q[i]) < 1e-12) {
            throw DegenerateNormalError(
                "normal component is lightlike at s = " + std::to_string(d.s[i]) +
                "; the ratio m0^2/(m2^2 - m1^2) is undefined there");
        }
        rho[i] = d.m0[i] * d.m0[i] / d.q[i];
    }
    ConstantRatioResult out;
    out.c3 = mean(rho);
    out.relative_deviation = relative_deviation(rho);
    out.verdict = verdict_from(out.relative_deviation, tol, indeterminate_factor);
    return out;
}

double constant_ratio_ode_residual(const Expr& kappa, const Expr& tau, double c3, double c0,
                                   const std::vector<double>& grid, double tau_eps) {
    if (c3 == 0.0) throw std::invalid_argument("constant_ratio_ode_residual: c3 must be nonzero");
    for (double s : grid) {
        if (std::abs(tau.evaluate(s)) <= tau_eps) {
            throw ZeroTorsionError("constant-ratio characterization needs tau != 0 "
                                   "(tau vanishes at s = " +
                                   std::to_string(s) + ")");
        }
    }
    const Expr s_expr = Expr::variable("s");
    const Expr c3e = Expr::number(c3);
    const Expr m2 = (kappa.derivative() - pow(kappa, 3.0) * c3e * (s_expr + Expr::number(c0))) /
                    (c3e * pow(kappa, 2.0) * tau);
    const Expr residual = m2.derivative() + tau / (c3e * kappa);
    double sup = 0.0;
    for (double s : grid) sup = std::max(sup, std::abs(residual.evaluate(s)));
    return sup;
}

TConstantResult detect_t_constant(const Decomposition& d, double tol) {
    const AffineFit fit = affine_fit(d.s, d.m0);
    TConstantResult out;
    out.slope = fit.slope;
    out.intercept = fit.intercept;
    out.verdict = std::abs(fit.slope) <= tol ? Verdict::True : Verdict::False;
    if (out.verdict == Verdict::False) {
        out.note = "tangential component grows with arc length (slope " +
                   std::to_string(fit.slope) + "); no admissible curve can be T-constant";
    }
    return out;
}

NConstantResult detect_n_constant(const Decomposition& d,
                                  const std::vector<FrenetSample>& frames, double tol,
                                  double indeterminate_factor) {
    NConstantResult out;
    double scale = 0.0;
    double sup_q = 0.0;
    for (size_t i = 0; i < d.s.size(); ++i) {
        scale = std::max(scale, d.m1[i] * d.m1[i] + d.m2[i] * d.m2[i]);
        sup_q = std::max(sup_q, std::abs(d.q[i]));
    }
    scale = std::max(scale, 1e-30);

    out.q_mean = mean(d.q);
    out.c4 = -out.q_mean;
    out.relative_deviation = relative_deviation(d.q);

    const std::vector<double> dm1 = derivative_series(d.s, d.m1, 1);
    const std::vector<double> dm2 = derivative_series(d.s, d.m2, 1);
    for (size_t i = 0; i < d.s.size(); ++i) {
        out.constancy_residual = std::max(
            out.constancy_residual, std::abs(d.m2[i] * dm2[i] - d.m1[i] * dm1[i]));
    }

    if (sup_q <= tol * scale) {
        out.kind = NConstantKind::First;
        out.verdict = Verdict::True;
        return out;
    }
    if (std::abs(out.q_mean) > tol * scale) {
        out.verdict = verdict_from(out.relative_deviation, tol, indeterminate_factor);
        if (out.verdict != Verdict::False) {
            out.kind = NConstantKind::Second;
            double sup = 0.0;
            for (size_t i = 0; i < d.s.size(); ++i) {
                sup = std::max(sup, std::abs(dm2[i] - frames[i].tau * d.m1[i]));
            }
            out.second_kind_relation_residual = sup;
        }
    }
    return out;
}

NormalProfile normal_constant_profile(const Expr& tau, double c4, double c5, double lo,
                                      double hi, int n) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("normal_constant_profile: n must be odd and >= 3");
    }
    NormalProfile out;
    out.s = linspace(lo, hi, n);
    const double h = (hi - lo) / (n - 1);
    std::vector<double> tv(out.s.size());
    for (size_t i = 0; i < out.s.size(); ++i) tv[i] = tau.evaluate(out.s[i]);
    out.u = cumulative_simpson(tv, h);
    for (double& u : out.u) u += c5;

    out.m1.resize(out.s.size());
    out.m2.resize(out.s.size());
    for (size_t i = 0; i < out.s.size(); ++i) {
        if (std::abs(out.u[i]) > 300.0) {
            throw NumericError("normal_constant_profile: |u| exceeds the overflow guard");
        }
        const double eu = std::exp(out.u[i]);
        out.m2[i] = 0.25 * (-4.0 * c4 + eu * eu) / eu;
        out.m1[i] = out.m2[i] - 0.5 * eu;
    }
    return out;
}

SphereFit sphere_fit(const std::vector<GVector>& alpha,
                     const std::vector<FrenetSample>& frames, double tol, double tau_eps,
                     double indeterminate_factor) {
    const size_t n = frames.size();
    std::vector<double> s(n), kappa(n), tau(n);
    for (size_t i = 0; i < n; ++i) {
        s[i] = frames[i].s;
        kappa[i] = frames[i].kappa;
        tau[i] = frames[i].tau;
        if (std::abs(tau[i]) <= tau_eps) {
            throw ZeroTorsionError("sphere fit needs tau != 0 (tau vanishes at s = " +
                                   std::to_string(s[i]) + ")");
        }
    }
    const std::vector<double> dkappa = derivative_series(s, kappa, 1);

    std::vector<double> cy(n), cz(n);
    for (size_t i = 0; i < n; ++i) {
        const double m1 = -1.0 / kappa[i];
        const double m2 = dkappa[i] / (kappa[i] * kappa[i] * tau[i]);
        cy[i] = alpha[i].y + m1 * frames[i].N.y + m2 * frames[i].B.y;
        cz[i] = alpha[i].z + m1 * frames[i].N.z + m2 * frames[i].B.z;
    }

    SphereFit out;
    out.center = {0.0, mean(cy), mean(cz)};
    double center_sup = 0.0;
    double center_scale = 1.0;
    for (size_t i = 0; i < n; ++i) {
        center_sup = std::max({center_sup, std::abs(cy[i] - out.center.y),
                               std::abs(cz[i] - out.center.z)});
        center_scale = std::max({center_scale, std::abs(cy[i]), std::abs(cz[i])});
    }
    out.center_deviation = center_sup / center_scale;

    std::vector<double> w(n);
    for (size_t i = 0; i < n; ++i) {
        const GVector rel = alpha[i] - out.center;
        w[i] = planar_product(rel, rel);
    }
    const double w_mean = mean(w);
    out.r2 = std::abs(w_mean);
    out.sign = w_mean >= 0.0 ? +1 : -1;
    out.radius_deviation = relative_deviation(w);

    const Verdict vc = verdict_from(out.center_deviation, tol, indeterminate_factor);
    const Verdict vr = verdict_from(out.radius_deviation, tol, indeterminate_factor);
    if (vc == Verdict::True && vr == Verdict::True) {
        out.verdict = Verdict::True;
    } else if (vc == Verdict::False || vr == Verdict::False) {
        out.verdict = Verdict::False;
    } else {
        out.verdict = Verdict::Indeterminate;
    }

    // Secondary diagnostics: fit c4, c5 of the exponential profile from the
    // two curvature equalities and report how well they hold. Needs an odd
    // grid for the torsion quadrature.
    if (n < 3 || n % 2 == 0) return out;
    const double h = s[1] - s[0];
    std::vector<double> theta = cumulative_simpson(tau, h);
    std::vector<double> ucand(n);
    bool valid = true;
    for (size_t i = 0; i < n; ++i) {
        const double rhs = dkappa[i] / (kappa[i] * kappa[i] * tau[i]) - 1.0 / kappa[i];
        const double e = 2.0 * rhs;
        if (e <= 0.0) {
            valid = false;
            break;
        }
        ucand[i] = std::log(e);
    }
    out.relation_fit_valid = valid;
    if (valid) {
        std::vector<double> c5cand(n), c4cand(n);
        for (size_t i = 0; i < n; ++i) {
            c5cand[i] = ucand[i] - theta[i];
            const double eu = std::exp(ucand[i]);
            c4cand[i] = eu * (0.25 * eu - dkappa[i] / (kappa[i] * kappa[i] * tau[i]));
        }
        out.fitted_c5 = mean(c5cand);
        out.fitted_c4 = mean(c4cand);
        double sup1 = 0.0, sup2 = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double u = out.fitted_c5 + theta[i];
            if (std::abs(u) > 300.0) {
                valid = false;
                break;
            }
            const double eu = std::exp(u);
            const double profile = 0.25 * (-4.0 * out.fitted_c4 + eu * eu) / eu;
            sup1 = std::max(sup1, std::abs(profile - 0.5 * eu - 1.0 / kappa[i]));
            sup2 = std::max(sup2,
                            std::abs(profile - dkappa[i] / (kappa[i] * kappa[i] * tau[i])));
        }
        out.relation_fit_valid = valid;
        out.radius_relation_residual = sup1;
        out.curvature_relation_residual = sup2;
    }
    return out;
}

CircleResult circle_check(const Decomposition& d, const std::vector<FrenetSample>& frames,
                          double kappa_tol, double tau_tol) {
    CircleResult out;
    std::vector<double> kappa(frames.size());
    for (size_t i = 0; i < frames.size(); ++i) {
        kappa[i] = frames[i].kappa;
        out.tau_max_abs = std::max(out.tau_max_abs, std::abs(frames[i].tau));
    }
    out.kappa_relative_deviation = relative_deviation(kappa);
    out.verdict = out.kappa_relative_deviation <= kappa_tol && out.tau_max_abs <= tau_tol;
    out.q_mean = mean(d.q);
    out.q_relative_deviation = relative_deviation(d.q);
    out.q_constant = out.q_relative_deviation <= 1e-3;
    return out;
}

double ratio_relation_residual(const Decomposition& d, double c3) {
    if (c3 == 0.0) throw std::invalid_argument("ratio_relation_residual: c3 must be nonzero");
    const std::vector<double> dm1 = derivative_series(d.s, d.m1, 1);
    const std::vector<double> dm2 = derivative_series(d.s, d.m2, 1);
    double sup = 0.0;
    for (size_t i = 0; i < d.s.size(); ++i) {
        const double r =
            d.m2[i] * dm2[i] - d.m1[i] * dm1[i] - (d.s[i] + d.c0) / c3;
        sup = std::max(sup, std::abs(r));
    }
    return sup;
}

std::pair<double, double> coefficient_system_residuals(
    const Decomposition& d, const std::vector<FrenetSample>& frames) {
    const std::vector<double> dm1 = derivative_series(d.s, d.m1, 1);
    const std::vector<double> dm2 = derivative_series(d.s, d.m2, 1);
    double r1 = 0.0, r2 = 0.0;
    for (size_t i = 0; i < d.s.size(); ++i) {
        r1 = std::max(r1, std::abs(dm1[i] + frames[i].kappa * d.m0[i] +
                                   frames[i].tau * d.m2[i]));
        r2 = std::max(r2, std::abs(dm2[i] + frames[i].tau * d.m1[i]));
    }
    return {r1, r2};
}

double reconstruction_identity_residual(const std::vector<GVector>& alpha,
                                        const std::vector<FrenetSample>& frames,
                                        const Decomposition& d) {
    double sup = 0.0;
    for (size_t i = 0; i < alpha.size(); ++i) {
        const FrenetSample& f = frames[i];
        const GVector rebuilt =
            d.m0[i] * f.T + d.m1[i] * f.N + d.m2[i] * f.B + d.origin;
        sup = std::max({sup, std::abs(alpha[i].x - rebuilt.x),
                        std::abs(alpha[i].y - rebuilt.y), std::abs(alpha[i].z - rebuilt.z)});
    }
    return sup;
}

namespace {

/// For a fixed origin x the quadratic part of q in (origin y, origin z) is
/// constant along the curve, so the variance-minimizing (y, z) solves an
/// ordinary linear least-squares problem: q = F + y G + z H + const.
struct PlanarSolve {
    double y = 0.0;
    double z = 0.0;
    double variance = 0.0;
};

PlanarSolve solve_planar_origin(const std::vector<FrenetSample>& frames,
                                const std::vector<double>& m1_0,
                                const std::vector<double>& m2_0,
                                const std::vector<double>& tn,
                                const std::vector<double>& tb, double px) {
    const size_t n = frames.size();
    std::vector<double> F(n), G(n), H(n);
    for (size_t i = 0; i < n; ++i) {
        const FrenetSample& f = frames[i];
        const double M1 = m1_0[i] - px * tn[i];
        const double M2 = m2_0[i] + px * tb[i];
        F[i] = M2 * M2 - M1 * M1;
        G[i] = -2.0 * (M2 * f.B.y + M1 * f.N.y);
        H[i] = 2.0 * (M2 * f.B.z + M1 * f.N.z);
    }
    const double fm = mean(F), gm = mean(G), hm = mean(H);
    double gg = 0.0, gh = 0.0, hh = 0.0, fg = 0.0, fh = 0.0, ff = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double g = G[i] - gm, h = H[i] - hm, fv = F[i] - fm;
        gg += g * g;
        gh += g * h;
        hh += h * h;
        fg += fv * g;
        fh += fv * h;
        ff += fv * fv;
    }
    PlanarSolve out;
    const double det = gg * hh - gh * gh;
    if (std::abs(det) > 1e-14 * (gg * hh + 1e-300)) {
        out.y = -(fg * hh - fh * gh) / det;
        out.z = -(fh * gg - fg * gh) / det;
    } else if (gg > 0.0) {
        out.y = -fg / gg;
    } else if (hh > 0.0) {
        out.z = -fh / hh;
    }
    out.variance = (ff + 2.0 * out.y * fg + 2.0 * out.z * fh + out.y * out.y * gg +
                    2.0 * out.y * out.z * gh + out.z * out.z * hh) /
                   static_cast<double>(n);
    return out;
}

} // namespace

OriginSearchResult search_origin(const std::vector<GVector>& alpha,
                                 const std::vector<FrenetSample>& frames,
                                 Decomposition::Backing backing) {
    const size_t n = frames.size();
    const auto base = decompose(alpha, frames, {}, backing);
    std::vector<double> tn(n), tb(n);
    for (size_t i = 0; i < n; ++i) {
        tn[i] = planar_product(frames[i].T, frames[i].N);
        tb[i] = planar_product(frames[i].T, frames[i].B);
    }

    double span = 1.0;
    for (const GVector& p : alpha) {
        span = std::max({span, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
    }

    auto scan = [&](double center, double radius, int steps) {
        double best_px = center;
        PlanarSolve best;
        best.variance = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= steps; ++i) {
            const double px = center + radius * (2.0 * i / steps - 1.0);
            const PlanarSolve cand = solve_planar_origin(frames, base.m1, base.m2, tn, tb, px);
            if (cand.variance < best.variance) {
                best = cand;
                best_px = px;
            }
        }
        return std::pair<double, PlanarSolve>{best_px, best};
    };

    double radius = 2.0 * span;
    double px = 0.0;
    PlanarSolve planar;
    for (int round = 0; round < 6; ++round) {
        auto [bp, sol] = scan(px, radius, 40);
        px = bp;
        planar = sol;
        radius /= 8.0;
    }

    OriginSearchResult out;
    out.origin = {px, planar.y, planar.z};
    out.q_variance = std::max(0.0, planar.variance);
    const auto d = decompose(alpha, frames, out.origin, backing);
    out.q_relative_deviation = relative_deviation(d.q);
    return out;
}

} // namespace pgc
