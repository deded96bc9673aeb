#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgc/classify.hpp"
#include "pgc/config.hpp"
#include "pgc/frenet.hpp"
#include "pgc/geometry.hpp"
#include "pgc/reconstruct.hpp"
#include "pgc/specfile.hpp"

namespace pgc {

/// One line of the verification table.
struct ResidualRow {
    std::string identity;
    double sup_residual = 0.0;
    double threshold = 0.0;
    std::string status; // "pass", "fail", "skip"
    std::string note;
};

struct FrenetSummary {
    bool admissible = true;
    std::string causality;
    int eps = -1;
    double kappa_min = 0.0;
    double kappa_max = 0.0;
    double tau_min = 0.0;
    double tau_max = 0.0;
};

/// Everything one analysis run produces; the report writers and the CLI
/// consume this.
struct AnalysisResult {
    CurveSpec spec;
    Tolerances tol;
    Decomposition::Backing backing = Decomposition::Backing::Symbolic;

    std::vector<double> grid;
    std::vector<GVector> alpha;
    std::vector<FrenetSample> frames;
    Decomposition decomposition;

    FrenetSummary frenet;
    ConstantRatioResult constant_ratio;
    std::optional<double> constant_ratio_ode;
    TConstantResult t_constant;
    NConstantResult n_constant;
    std::optional<SphereFit> sphere;
    std::string sphere_skip_reason;
    CircleResult circle;

    double reconstruction_residual = 0.0;
    double coefficient_residual_m1 = 0.0;
    double coefficient_residual_m2 = 0.0;

    std::vector<ResidualRow> residuals;
    std::optional<OriginSearchResult> origin_search;
    std::vector<std::string> warnings;

    double constancy_tol() const {
        return backing == Decomposition::Backing::Symbolic ? tol.constancy_symbolic
                                                           : tol.constancy_quadrature;
    }
};

/// Runs the full apparatus + classification pipeline on a curve spec.
/// Throws AdmissibilityError for inadmissible or non-spacelike input (the
/// classification theory needs a timelike normal), SpecError for bad
/// specs, DomainError/NumericError for evaluation failures.
AnalysisResult analyze_curve(const CurveSpec& spec, const Tolerances& tol,
                             bool with_origin_search = false);

/// Reconstruction command core: rebuild the curve from intrinsic data and
/// compare the re-derived curvature and torsion against the inputs.
struct ReconstructionResult {
    CurveSpec spec;
    ReconstructedCurve curve;
    double kappa_sup_error = 0.0;
    double tau_sup_error = 0.0;
    std::optional<CoefficientSeries> closed_form;
    std::optional<double> closed_vs_rk4;
    std::optional<ClosedFormDiagnostics> variants;
};
ReconstructionResult reconstruct_from_spec(const CurveSpec& spec, const Tolerances& tol,
                                           bool with_coefficients);

/// The IntrinsicSpec view of an intrinsic-form curve spec.
IntrinsicSpec intrinsic_of(const CurveSpec& spec);

} // namespace pgc
