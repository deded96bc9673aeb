#include "pgc/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <sstream>

namespace pgc {

namespace {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

/// Minimal ordered JSON emitter. nlohmann would reorder keys and use
/// shortest-round-trip floats; the report format pins both.
class JsonWriter {
public:
    void begin_object() {
        comma();
        out_ += '{';
        first_ = true;
    }
    void end_object() {
        out_ += '}';
        first_ = false;
    }
    void begin_array() {
        comma();
        out_ += '[';
        first_ = true;
    }
    void end_array() {
        out_ += ']';
        first_ = false;
    }
    void key(const std::string& k) {
        comma();
        out_ += '"' + escape(k) + "\":";
        first_ = true; // the upcoming value must not emit a comma
    }
    void value(double v) {
        comma();
        out_ += fmt_double(v);
    }
    void value(int v) {
        comma();
        out_ += std::to_string(v);
    }
    void value(bool v) {
        comma();
        out_ += v ? "true" : "false";
    }
    void value(const std::string& v) {
        comma();
        out_ += '"' + escape(v) + '"';
    }
    void value(const char* v) { value(std::string(v)); }
    void null() {
        comma();
        out_ += "null";
    }
    std::string take() { return std::move(out_); }

private:
    void comma() {
        if (!first_) out_ += ',';
        first_ = false;
    }
    std::string out_;
    bool first_ = true;
};

void write_vector(JsonWriter& w, const GVector& v) {
    w.begin_array();
    w.value(v.x);
    w.value(v.y);
    w.value(v.z);
    w.end_array();
}

void write_input_echo(JsonWriter& w, const CurveSpec& spec) {
    w.key("input");
    w.begin_object();
    w.key("name");
    w.value(spec.name);
    w.key("form");
    switch (spec.form) {
    case CurveForm::Graph:
        w.value("graph");
        w.key("y");
        w.value(spec.y_text);
        w.key("z");
        w.value(spec.z_text);
        break;
    case CurveForm::Intrinsic:
        w.value("intrinsic");
        w.key("kappa");
        w.value(spec.kappa_text);
        w.key("tau");
        w.value(spec.tau_text);
        w.key("constants");
        w.begin_object();
        w.key("c0");
        w.value(spec.c0);
        w.key("c1");
        w.value(spec.c1);
        w.key("c2");
        w.value(spec.c2);
        w.key("u0");
        w.value(spec.u0);
        w.key("c5");
        w.value(spec.c5);
        w.end_object();
        break;
    case CurveForm::Samples:
        w.value("samples");
        w.key("points");
        w.value(static_cast<int>(spec.points.size()));
        break;
    }
    w.key("domain");
    w.begin_array();
    w.value(spec.lo);
    w.value(spec.hi);
    w.end_array();
    w.key("samples");
    w.value(spec.samples);
    w.key("origin");
    write_vector(w, spec.origin);
    w.end_object();
}

void write_tool(JsonWriter& w) {
    w.key("tool");
    w.begin_object();
    w.key("name");
    w.value(kToolName);
    w.key("version");
    w.value(kToolVersion);
    w.end_object();
}

std::string kind_name(NConstantKind k) {
    switch (k) {
    case NConstantKind::None: return "none";
    case NConstantKind::First: return "first";
    case NConstantKind::Second: return "second";
    }
    return "none";
}

} // namespace

std::string analysis_report_json(const AnalysisResult& r) {
    JsonWriter w;
    w.begin_object();
    write_tool(w);
    write_input_echo(w, r.spec);

    w.key("frenet");
    w.begin_object();
    w.key("admissible");
    w.value(r.frenet.admissible);
    w.key("causality");
    w.value(r.frenet.causality);
    w.key("eps");
    w.value(r.frenet.eps);
    w.key("kappa_min");
    w.value(r.frenet.kappa_min);
    w.key("kappa_max");
    w.value(r.frenet.kappa_max);
    w.key("tau_min");
    w.value(r.frenet.tau_min);
    w.key("tau_max");
    w.value(r.frenet.tau_max);
    w.end_object();

    w.key("decomposition");
    w.begin_object();
    w.key("origin");
    write_vector(w, r.decomposition.origin);
    w.key("backing");
    w.value(r.backing == Decomposition::Backing::Symbolic ? "symbolic" : "quadrature");
    w.key("c0");
    w.value(r.decomposition.c0);
    w.key("m0_slope");
    w.value(r.t_constant.slope);
    w.key("reconstruction_residual");
    w.value(r.reconstruction_residual);
    w.key("coefficient_residual_m1");
    w.value(r.coefficient_residual_m1);
    w.key("coefficient_residual_m2");
    w.value(r.coefficient_residual_m2);
    w.end_object();

    w.key("classification");
    w.begin_object();

    w.key("constant_ratio");
    w.begin_object();
    w.key("verdict");
    w.value(to_string(r.constant_ratio.verdict));
    w.key("c3");
    w.value(r.constant_ratio.c3);
    w.key("relative_deviation");
    w.value(r.constant_ratio.relative_deviation);
    w.key("ode_residual");
    if (r.constant_ratio_ode) {
        w.value(*r.constant_ratio_ode);
    } else {
        w.null();
    }
    w.end_object();

    w.key("t_constant");
    w.begin_object();
    w.key("verdict");
    w.value(to_string(r.t_constant.verdict));
    w.key("slope");
    w.value(r.t_constant.slope);
    w.key("intercept");
    w.value(r.t_constant.intercept);
    w.key("note");
    w.value(r.t_constant.note);
    w.end_object();

    w.key("n_constant");
    w.begin_object();
    w.key("verdict");
    w.value(to_string(r.n_constant.verdict));
    w.key("kind");
    w.value(kind_name(r.n_constant.kind));
    w.key("q_mean");
    w.value(r.n_constant.q_mean);
    w.key("c4");
    w.value(r.n_constant.c4);
    w.key("relative_deviation");
    w.value(r.n_constant.relative_deviation);
    w.key("constancy_residual");
    w.value(r.n_constant.constancy_residual);
    w.key("second_kind_relation_residual");
    if (r.n_constant.second_kind_relation_residual) {
        w.value(*r.n_constant.second_kind_relation_residual);
    } else {
        w.null();
    }
    w.end_object();

    w.key("spherical");
    w.begin_object();
    if (r.sphere) {
        w.key("verdict");
        w.value(to_string(r.sphere->verdict));
        w.key("center");
        write_vector(w, r.sphere->center);
        w.key("r2");
        w.value(r.sphere->r2);
        w.key("sign");
        w.value(r.sphere->sign);
        w.key("center_deviation");
        w.value(r.sphere->center_deviation);
        w.key("radius_deviation");
        w.value(r.sphere->radius_deviation);
        w.key("relation_fit_valid");
        w.value(r.sphere->relation_fit_valid);
        w.key("fitted_c4");
        w.value(r.sphere->fitted_c4);
        w.key("fitted_c5");
        w.value(r.sphere->fitted_c5);
        w.key("radius_relation_residual");
        w.value(r.sphere->radius_relation_residual);
        w.key("curvature_relation_residual");
        w.value(r.sphere->curvature_relation_residual);
    } else {
        w.key("skipped");
        w.value(r.sphere_skip_reason);
    }
    w.end_object();

    w.key("circle");
    w.begin_object();
    w.key("verdict");
    w.value(r.circle.verdict);
    w.key("kappa_relative_deviation");
    w.value(r.circle.kappa_relative_deviation);
    w.key("tau_max_abs");
    w.value(r.circle.tau_max_abs);
    w.key("q_mean");
    w.value(r.circle.q_mean);
    w.key("q_relative_deviation");
    w.value(r.circle.q_relative_deviation);
    w.key("q_constant");
    w.value(r.circle.q_constant);
    w.end_object();

    w.end_object(); // classification

    w.key("residuals");
    w.begin_array();
    for (const auto& row : r.residuals) {
        w.begin_object();
        w.key("identity");
        w.value(row.identity);
        w.key("sup_residual");
        w.value(row.sup_residual);
        w.key("threshold");
        w.value(row.threshold);
        w.key("status");
        w.value(row.status);
        if (!row.note.empty()) {
            w.key("note");
            w.value(row.note);
        }
        w.end_object();
    }
    w.end_array();

    if (r.origin_search) {
        w.key("origin_search");
        w.begin_object();
        w.key("origin");
        write_vector(w, r.origin_search->origin);
        w.key("q_variance");
        w.value(r.origin_search->q_variance);
        w.key("q_relative_deviation");
        w.value(r.origin_search->q_relative_deviation);
        w.end_object();
    }

    w.key("warnings");
    w.begin_array();
    for (const auto& warning : r.warnings) w.value(warning);
    w.end_array();

    w.end_object();
    std::string out = w.take();
    out += '\n';
    return out;
}

std::string reconstruction_report_json(const ReconstructionResult& r) {
    JsonWriter w;
    w.begin_object();
    write_tool(w);
    write_input_echo(w, r.spec);
    w.key("roundtrip");
    w.begin_object();
    w.key("kappa_sup_error");
    w.value(r.kappa_sup_error);
    w.key("tau_sup_error");
    w.value(r.tau_sup_error);
    w.end_object();
    if (r.closed_vs_rk4) {
        w.key("coefficients");
        w.begin_object();
        w.key("closed_form_vs_rk4_sup");
        w.value(*r.closed_vs_rk4);
        if (r.variants) {
            w.key("closed_form_variants");
            w.begin_object();
            w.key("primary_residual");
            w.value(r.variants->primary_residual);
            w.key("alternate_sign_residual");
            w.value(r.variants->alternate_sign_residual);
            w.key("extra_jacobian_residual");
            w.value(r.variants->extra_jacobian_residual);
            w.end_object();
        }
        w.end_object();
    }
    w.end_object();
    std::string out = w.take();
    out += '\n';
    return out;
}

std::string analysis_csv(const AnalysisResult& r) {
    std::string out = "s,kappa,tau,m0,m1,m2,q,rho\n";
    for (size_t i = 0; i < r.grid.size(); ++i) {
        const double q = r.decomposition.q[i];
        const double m0 = r.decomposition.m0[i];
        const double rho = q != 0.0 ? m0 * m0 / q : NAN;
        out += fmt_double(r.grid[i]) + ',' + fmt_double(r.frames[i].kappa) + ',' +
               fmt_double(r.frames[i].tau) + ',' + fmt_double(m0) + ',' +
               fmt_double(r.decomposition.m1[i]) + ',' + fmt_double(r.decomposition.m2[i]) +
               ',' + fmt_double(q) + ',' + (std::isnan(rho) ? "nan" : fmt_double(rho)) + '\n';
    }
    return out;
}

std::string curve_csv(const ReconstructedCurve& curve) {
    std::string out = "s,x,y,z\n";
    for (size_t i = 0; i < curve.s.size(); ++i) {
        out += fmt_double(curve.s[i]) + ',' + fmt_double(curve.alpha[i].x) + ',' +
               fmt_double(curve.alpha[i].y) + ',' + fmt_double(curve.alpha[i].z) + '\n';
    }
    return out;
}

std::string residual_table_text(const AnalysisResult& r) {
    std::ostringstream out;
    size_t width = 10;
    for (const auto& row : r.residuals) width = std::max(width, row.identity.size());
    for (const auto& row : r.residuals) {
        char buf[160];
        if (row.status == "skip") {
            std::snprintf(buf, sizeof(buf), "%-*s  %-4s  (%s)\n", static_cast<int>(width),
                          row.identity.c_str(), "skip", row.note.c_str());
        } else {
            std::snprintf(buf, sizeof(buf), "%-*s  %-4s  sup %.3e  threshold %.3e\n",
                          static_cast<int>(width), row.identity.c_str(), row.status.c_str(),
                          row.sup_residual, row.threshold);
        }
        out << buf;
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write to '" + tmp + "'");
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

} // namespace pgc
