#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pgc/config.hpp"
#include "pgc/expr.hpp"
#include "pgc/geometry.hpp"

namespace pgc {

enum class CurveForm { Graph, Intrinsic, Samples };

/// A parsed curve specification file. Graph curves carry y(x), z(x);
/// intrinsic curves carry kappa(s), tau(s) plus the representation
/// constants; sampled curves carry rows of (s, x, y, z) with x = s.
struct CurveSpec {
    std::string name;
    CurveForm form = CurveForm::Graph;

    // graph
    std::string y_text;
    std::string z_text;
    Expr y;
    Expr z;

    // intrinsic
    std::string kappa_text;
    std::string tau_text;
    Expr kappa;
    Expr tau;
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double u0 = 0.0;
    double c5 = 0.0;

    // samples
    std::vector<std::array<double, 4>> points;

    double lo = 0.0;
    double hi = 1.0;
    int samples = 1001;
    GVector origin;
};

/// Loads and validates a JSON curve specification. Throws SpecError with
/// the offending field named; expression errors keep their column info in
/// the message.
CurveSpec load_curve_spec(const std::string& path);

/// Same, from a JSON string (the file loader and tests share it).
CurveSpec parse_curve_spec(const std::string& json_text);

/// Applies `--config` overrides from a JSON file onto the defaults.
Tolerances load_tolerances(const std::string& path);

} // namespace pgc
