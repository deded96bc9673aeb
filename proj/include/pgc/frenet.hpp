#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "pgc/config.hpp"
#include "pgc/expr.hpp"
#include "pgc/geometry.hpp"

namespace pgc {

/// A curve in graph form alpha(x) = (x, y(x), z(x)) on a closed interval.
/// The x coordinate doubles as the arc-length parameter, so the curve is
/// never reparametrized. Derivatives up to fourth order are held
/// symbolically so curvature and torsion carry no differencing noise.
class GraphCurve {
public:
    GraphCurve(Expr y, Expr z, double lo, double hi, GVector origin = {});

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const GVector& origin() const { return origin_; }

    /// k-th derivative of the component expressions, k = 0..4.
    const Expr& y(int k = 0) const { return y_[static_cast<size_t>(k)]; }
    const Expr& z(int k = 0) const { return z_[static_cast<size_t>(k)]; }

    GVector position(double s) const;

private:
    std::array<Expr, 5> y_;
    std::array<Expr, 5> z_;
    double lo_;
    double hi_;
    GVector origin_;
};

/// One grid record of the moving frame: tangent, principal normal, binormal,
/// the orientation sign, curvature and torsion at arc length s.
struct FrenetSample {
    double s = 0.0;
    GVector T;
    GVector N;
    GVector B;
    int eps = -1;
    double kappa = 0.0;
    double tau = 0.0;
};

struct AdmissibilityReport {
    bool ok = true;
    /// (s, y''^2 - z''^2) at every grid point that fails the threshold.
    std::vector<std::pair<double, double>> violations;
};

enum class Causality { Spacelike, Timelike, Mixed };

struct CausalityReport {
    Causality verdict = Causality::Spacelike;
    /// Subintervals [s_i, s_i+1] over which the sign of y''^2 - z''^2 flips.
    std::vector<std::pair<double, double>> crossings;
};

std::vector<double> sample_grid(const GraphCurve& c, int n);

/// Checks |y''^2 - z''^2| > adm_eps at every grid point. Violations are
/// reported as data, not thrown.
AdmissibilityReport check_admissible(const GraphCurve& c, const std::vector<double>& grid,
                                     double adm_eps = 1e-9);

/// The full frame at one parameter value. Throws AdmissibilityError where
/// |y''^2 - z''^2| <= adm_eps.
FrenetSample frame_at(const GraphCurve& c, double s, double adm_eps = 1e-9);

/// Frames at every grid point. Throws FrameError if the orientation sign
/// flips across the grid (that signals an inadmissible crossing).
std::vector<FrenetSample> frame_grid(const GraphCurve& c, const std::vector<double>& grid,
                                     double adm_eps = 1e-9);

/// Torsion by the 3x3 determinant of (alpha', alpha'', alpha''') over
/// kappa^2; an independent route that must agree with FrenetSample::tau.
double torsion_det(const GraphCurve& c, double s, double adm_eps = 1e-9);

/// Spacelike iff y''^2 - z''^2 < 0 on the whole grid; mixed-sign grids are
/// reported with their crossing subintervals.
CausalityReport spacelike_check(const GraphCurve& c, const std::vector<double>& grid);

/// The image of a graph curve under a motion, again in graph form (the
/// abscissa translates by m.a and the components are rebuilt symbolically).
GraphCurve transform(const GraphCurve& c, const Motion& m);

/// A uniformly sampled curve, for inputs that exist only as data. When the
/// tangent component series are present (reconstructed curves provide
/// them), second and third derivatives are taken from them rather than
/// from the positions, which keeps the differencing noise at first-order
/// level.
struct SampledCurve {
    std::vector<double> s;
    std::vector<double> y;
    std::vector<double> z;
    std::optional<std::vector<double>> ty; // dy/ds samples
    std::optional<std::vector<double>> tz; // dz/ds samples
};

/// Frames along a sampled curve via finite differences (sliding stencils,
/// fourth-order). Spacelike torsion is evaluated through the frame angle
/// artanh(-y''/z''), whose first derivative equals the torsion; this is
/// algebraically the determinant formula but avoids third differences.
std::vector<FrenetSample> analyze_samples(const SampledCurve& c, double adm_eps = 1e-9);

/// Sup-norm residuals of the three frame derivative identities
/// (T' - kappa N, N' - tau B, B' - tau N), frame derivatives taken by
/// five-point central differences of the sampled frames.
std::array<double, 3> frenet_ode_residuals(const std::vector<FrenetSample>& frames);

/// Curvature and torsion of a graph curve as expressions in the parameter,
/// for the residual operations that need their symbolic derivatives. `eps`
/// is the orientation sign on the admissibility component in question.
std::pair<Expr, Expr> curvature_torsion_exprs(const GraphCurve& c, int eps);

} // namespace pgc
