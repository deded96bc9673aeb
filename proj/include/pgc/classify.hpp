#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgc/expr.hpp"
#include "pgc/frenet.hpp"
#include "pgc/geometry.hpp"

namespace pgc {

/// Tri-state verdict: residuals between the pass threshold and ten times
/// the threshold come back indeterminate instead of being overclaimed.
enum class Verdict { True, False, Indeterminate };

std::string to_string(Verdict v);

/// Verdict from a deviation measure against a threshold.
Verdict verdict_from(double deviation, double tol, double indeterminate_factor = 10.0);

/// Position-vector coefficients m0, m1, m2 along the curve, relative to a
/// chosen origin, plus the signed normal invariant q = m2^2 - m1^2.
/// `backing` records whether the frames came from symbolic derivatives or
/// quadrature, which picks the constancy tolerance downstream.
struct Decomposition {
    enum class Backing { Symbolic, Quadrature };

    std::vector<double> s;
    std::vector<double> m0;
    std::vector<double> m1;
    std::vector<double> m2;
    std::vector<double> q;
    GVector origin;
    Backing backing = Backing::Symbolic;
    double c0 = 0.0; // m0 = s + c0

    /// Squared lengths of the tangential and normal components: m0^2 and
    /// |q| (the normal part lives in the degenerate plane, so its squared
    /// length is the absolute planar product).
    std::vector<double> tangential_norm2() const;
    std::vector<double> normal_norm2() const;
};

/// Projects alpha - origin onto the frame: m0 is the first component (the
/// tangent is the only frame vector with a nonzero first component), and
/// the isotropic remainder splits as m1 N + m2 B with m1 = -g(r, N),
/// m2 = g(r, B). Throws FrameError when g(N, N) strays from -1.
Decomposition decompose(const std::vector<GVector>& alpha,
                        const std::vector<FrenetSample>& frames, const GVector& origin,
                        Decomposition::Backing backing);

/// Convenience overload for graph curves: frames and positions on a grid.
Decomposition decompose(const GraphCurve& c, const std::vector<double>& grid,
                        const GVector& origin);

struct ConstantRatioResult {
    Verdict verdict = Verdict::False;
    double c3 = 0.0;              // fitted ratio m0^2 / (m2^2 - m1^2)
    double relative_deviation = 0.0;
};

/// Constant-ratio test on rho(s) = m0^2 / (m2^2 - m1^2). Throws
/// DegenerateNormalError if the normal part is lightlike anywhere.
ConstantRatioResult classify_constant_ratio(const Decomposition& d, double tol,
                                            double indeterminate_factor = 10.0);

/// Residual of the constant-ratio characterization
///   d/ds [ (kappa' - kappa^3 c3 (s+c0)) / (c3 kappa^2 tau) ] + tau/(c3 kappa)
/// with all derivatives symbolic. kappa and tau are expressions in s.
double constant_ratio_ode_residual(const Expr& kappa, const Expr& tau, double c3, double c0,
                                   const std::vector<double>& grid, double tau_eps = 1e-9);

struct TConstantResult {
    Verdict verdict = Verdict::False;
    double slope = 0.0;
    double intercept = 0.0;
    std::string note;
};

/// Fits m0 to an affine function. For arc-length graph input the slope is
/// identically 1, so the verdict is false for every admissible curve.
TConstantResult detect_t_constant(const Decomposition& d, double tol);

enum class NConstantKind { None, First, Second };

struct NConstantResult {
    Verdict verdict = Verdict::False;
    NConstantKind kind = NConstantKind::None;
    double q_mean = 0.0;
    double c4 = 0.0; // generator convention: q = -c4
    double relative_deviation = 0.0;
    double constancy_residual = 0.0; // sup |m2 m2' - m1 m1'|
    std::optional<double> second_kind_relation_residual; // sup |m2' - tau m1|
};

/// Normal-constancy test on q = m2^2 - m1^2: first kind when q stays at
/// zero relative to the normal size, second kind when q is a nonzero
/// constant.
NConstantResult detect_n_constant(const Decomposition& d,
                                  const std::vector<FrenetSample>& frames, double tol,
                                  double indeterminate_factor = 10.0);

struct NormalProfile {
    std::vector<double> s;
    std::vector<double> u; // c5 + integral of tau
    std::vector<double> m1;
    std::vector<double> m2;
};

/// The second-kind normal-constant coefficient profile
///   m2 = (1/4) e^-u (-4 c4 + e^2u),  m1 = m2 - (1/2) e^u,
/// with u = c5 + integral of tau by cumulative quadrature. Satisfies
/// m2^2 - m1^2 = -c4 identically. Throws NumericError past |u| > 300.
NormalProfile normal_constant_profile(const Expr& tau, double c4, double c5, double lo,
                                      double hi, int n);

struct SphereFit {
    Verdict verdict = Verdict::False;
    GVector center;               // absolute coordinate immaterial; x = 0
    double r2 = 0.0;
    int sign = +1;
    double center_deviation = 0.0;
    double radius_deviation = 0.0;
    bool relation_fit_valid = false;
    double fitted_c4 = 0.0;
    double fitted_c5 = 0.0;
    double radius_relation_residual = 0.0;    // m1-style equality
    double curvature_relation_residual = 0.0; // m2-style equality
};

/// Candidate center series c(s) = alpha - (1/kappa) N + (kappa'/(kappa^2
/// tau)) B; spherical verdict iff the (y, z) center stays constant and the
/// planar product of alpha - center is constant. The exponential-profile
/// equalities are fitted and reported as secondary diagnostics.
SphereFit sphere_fit(const std::vector<GVector>& alpha,
                     const std::vector<FrenetSample>& frames, double tol,
                     double tau_eps = 1e-9, double indeterminate_factor = 10.0);

struct CircleResult {
    bool verdict = false;
    double kappa_relative_deviation = 0.0;
    double tau_max_abs = 0.0;
    double q_mean = 0.0;
    double q_relative_deviation = 0.0;
    bool q_constant = false;
};

/// Circle predicate: kappa constant and tau identically zero. The q(s)
/// statistics ride along without any constancy assertion; a circle with
/// non-constant q is reported with the discrepancy flagged, not hidden.
CircleResult circle_check(const Decomposition& d, const std::vector<FrenetSample>& frames,
                          double kappa_tol = 1e-6, double tau_tol = 1e-9);

/// sup |m2 m2' - m1 m1' - (s + c0)/c3|, derivatives by central differences.
double ratio_relation_residual(const Decomposition& d, double c3);

/// Master self-test: the decomposed coefficients of any admissible curve
/// satisfy m1' + kappa m0 + tau m2 = 0 and m2' + tau m1 = 0. Returns the
/// two sup-norm residuals.
std::pair<double, double> coefficient_system_residuals(
    const Decomposition& d, const std::vector<FrenetSample>& frames);

/// sup over the grid of the componentwise gap in
/// alpha - origin = m0 T + m1 N + m2 B.
double reconstruction_identity_residual(const std::vector<GVector>& alpha,
                                        const std::vector<FrenetSample>& frames,
                                        const Decomposition& d);

struct OriginSearchResult {
    GVector origin;
    double q_variance = 0.0;
    double q_relative_deviation = 0.0;
};

/// Coarse-to-fine grid search for the origin minimizing the variance of
/// q(s); the classifications depend on the origin, and this makes that
/// dependence auditable.
OriginSearchResult search_origin(const std::vector<GVector>& alpha,
                                 const std::vector<FrenetSample>& frames,
                                 Decomposition::Backing backing);

} // namespace pgc
