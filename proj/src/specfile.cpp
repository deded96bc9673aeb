#include "pgc/specfile.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pgc/errors.hpp"

namespace pgc {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw SpecError("field '" + field + "' must be a number", field);
    return j.get<double>();
}

Expr parse_field(const json& j, const std::string& field, const std::string& varname) {
    if (!j.is_string()) {
        throw SpecError("field '" + field + "' must be an expression string", field);
    }
    try {
        return parse(j.get<std::string>(), varname);
    } catch (const ParseError& e) {
        throw SpecError("field '" + field + "': " + e.what(), field);
    }
}

} // namespace

namespace {
CurveSpec parse_curve_spec_impl(const json& j);
}

CurveSpec parse_curve_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SpecError("spec must be a JSON object");
    try {
        return parse_curve_spec_impl(j);
    } catch (const json::exception& e) {
        throw SpecError(std::string("malformed spec: ") + e.what());
    }
}

namespace {
CurveSpec parse_curve_spec_impl(const json& j) {
    CurveSpec spec;
    spec.name = j.value("name", std::string{});

    const std::string form = j.value("form", std::string{});
    if (form == "graph") {
        spec.form = CurveForm::Graph;
    } else if (form == "intrinsic") {
        spec.form = CurveForm::Intrinsic;
    } else if (form == "samples") {
        spec.form = CurveForm::Samples;
    } else {
        throw SpecError("field 'form' must be one of \"graph\", \"intrinsic\", \"samples\"",
                        "form");
    }

    if (spec.form != CurveForm::Samples) {
        if (!j.contains("domain") || !j["domain"].is_array() || j["domain"].size() != 2) {
            throw SpecError("field 'domain' must be [a, b]", "domain");
        }
        spec.lo = require_number(j["domain"][0], "domain");
        spec.hi = require_number(j["domain"][1], "domain");
        if (!(spec.lo < spec.hi)) {
            throw SpecError("field 'domain' must satisfy a < b", "domain");
        }
    }

    if (j.contains("samples")) {
        if (!j["samples"].is_number_integer()) {
            throw SpecError("field 'samples' must be an integer", "samples");
        }
        spec.samples = j["samples"].get<int>();
        if (spec.samples < 9) throw SpecError("field 'samples' must be >= 9", "samples");
        if (spec.samples % 2 == 0) ++spec.samples; // forced odd
    }

    if (j.contains("origin")) {
        if (!j["origin"].is_array() || j["origin"].size() != 3) {
            throw SpecError("field 'origin' must be [x, y, z]", "origin");
        }
        spec.origin = {require_number(j["origin"][0], "origin"),
                       require_number(j["origin"][1], "origin"),
                       require_number(j["origin"][2], "origin")};
    }

    switch (spec.form) {
    case CurveForm::Graph:
        if (!j.contains("y") || !j.contains("z")) {
            throw SpecError("graph form needs expression fields 'y' and 'z'",
                            j.contains("y") ? "z" : "y");
        }
        spec.y = parse_field(j["y"], "y", "x");
        spec.z = parse_field(j["z"], "z", "x");
        spec.y_text = j["y"].get<std::string>();
        spec.z_text = j["z"].get<std::string>();
        break;
    case CurveForm::Intrinsic: {
        if (!j.contains("kappa") || !j.contains("tau")) {
            throw SpecError("intrinsic form needs expression fields 'kappa' and 'tau'",
                            j.contains("kappa") ? "tau" : "kappa");
        }
        spec.kappa = parse_field(j["kappa"], "kappa", "s");
        spec.tau = parse_field(j["tau"], "tau", "s");
        spec.kappa_text = j["kappa"].get<std::string>();
        spec.tau_text = j["tau"].get<std::string>();
        if (j.contains("constants")) {
            const json& c = j["constants"];
            if (!c.is_object()) throw SpecError("field 'constants' must be an object", "constants");
            spec.c0 = c.contains("c0") ? require_number(c["c0"], "constants.c0") : 0.0;
            spec.c1 = c.contains("c1") ? require_number(c["c1"], "constants.c1") : 0.0;
            spec.c2 = c.contains("c2") ? require_number(c["c2"], "constants.c2") : 0.0;
            spec.u0 = c.contains("u0") ? require_number(c["u0"], "constants.u0") : 0.0;
            spec.c5 = c.contains("c5") ? require_number(c["c5"], "constants.c5") : 0.0;
        }
        break;
    }
    case CurveForm::Samples: {
        if (!j.contains("points") || !j["points"].is_array() || j["points"].size() < 9) {
            throw SpecError("samples form needs a 'points' array of at least 9 rows",
                            "points");
        }
        for (const auto& row : j["points"]) {
            if (!row.is_array() || row.size() != 4) {
                throw SpecError("each samples row must be [s, x, y, z]", "points");
            }
            spec.points.push_back({require_number(row[0], "points"),
                                   require_number(row[1], "points"),
                                   require_number(row[2], "points"),
                                   require_number(row[3], "points")});
        }
        // Arc length and abscissa must coincide, on a uniform grid.
        const double h0 = spec.points[1][0] - spec.points[0][0];
        for (size_t i = 0; i < spec.points.size(); ++i) {
            const auto& row = spec.points[i];
            if (std::abs(row[0] - row[1]) > 1e-9 * (1.0 + std::abs(row[0]))) {
                throw SpecError("samples must be arc-length parametrized (x = s)", "points");
            }
            if (i > 0) {
                const double h = row[0] - spec.points[i - 1][0];
                if (!(h > 0.0) || std::abs(h - h0) > 1e-9 * std::abs(h0)) {
                    throw SpecError("samples must sit on a uniform increasing s grid",
                                    "points");
                }
            }
        }
        spec.lo = spec.points.front()[0];
        spec.hi = spec.points.back()[0];
        break;
    }
    }
    return spec;
}
} // namespace

CurveSpec load_curve_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_spec(buf.str());
}

Tolerances load_tolerances(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("config is not valid JSON: ") + e.what());
    }
    Tolerances t;
    auto get = [&](const char* key, double& slot) {
        if (j.contains(key)) slot = require_number(j[key], key);
    };
    get("iso_eps", t.iso_eps);
    get("adm_eps", t.adm_eps);
    get("tau_eps", t.tau_eps);
    get("constancy_symbolic", t.constancy_symbolic);
    get("constancy_quadrature", t.constancy_quadrature);
    get("circle_kappa", t.circle_kappa);
    get("circle_tau", t.circle_tau);
    get("frenet_ode", t.frenet_ode);
    get("coeff_system", t.coeff_system);
    get("third_order_symbolic", t.third_order_symbolic);
    get("third_order_quadrature", t.third_order_quadrature);
    get("torsion_agreement", t.torsion_agreement);
    get("reconstruction_identity", t.reconstruction_identity);
    get("indeterminate_factor", t.indeterminate_factor);
    return t;
}

} // namespace pgc
