#pragma once

namespace pgc {

inline constexpr const char* kToolName = "pgc";
inline constexpr const char* kToolVersion = "0.1.0";

/// Every tolerance used by the toolkit, in one place. Defaults are the
/// documented values; the CLI can override them from a JSON config file.
struct Tolerances {
    /// Taxonomy cutoff used only by classify_vector (numerically computed
    /// vectors carry rounding; analytic inputs branch exactly).
    double iso_eps = 1e-12;

    /// Admissibility threshold on |y''^2 - z''^2|.
    double adm_eps = 1e-9;

    /// Below this, the torsion counts as zero for operations dividing by it.
    double tau_eps = 1e-9;

    /// Relative-constancy thresholds for the classification verdicts.
    /// Symbolically differentiated inputs are held to the tight value,
    /// quadrature-backed (reconstructed or sampled) inputs to the loose one.
    double constancy_symbolic = 1e-6;
    double constancy_quadrature = 1e-3;

    /// Circle predicate: relative deviation of kappa, absolute bound on tau.
    double circle_kappa = 1e-6;
    double circle_tau = 1e-9;

    /// Residual thresholds for the verification table.
    double frenet_ode = 1e-6;
    double coeff_system = 1e-5;
    double third_order_symbolic = 1e-6;
    double third_order_quadrature = 1e-5;
    double torsion_agreement = 1e-9;
    double reconstruction_identity = 1e-9;

    /// Verdicts between the pass threshold and factor * threshold are
    /// reported as indeterminate rather than overclaimed.
    double indeterminate_factor = 10.0;
};

} // namespace pgc
