#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgc/errors.hpp"
#include "pgc/pipeline.hpp"
#include "pgc/report.hpp"
#include "pgc/specfile.hpp"
#include "pgc/svgplot.hpp"

namespace {

using namespace pgc;

GVector parse_origin(const std::string& text) {
    GVector v;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &v.x, &v.y, &v.z) != 3) {
        throw SpecError("--origin expects x,y,z", "origin");
    }
    return v;
}

struct Options {
    std::string spec_path;
    std::string csv_path;
    std::string out_path;
    std::string svg_path;
    std::string config_path;
    std::string origin_text;
    std::string projection = "yz";
    int samples = 0;
    bool mcoeffs = false;
    bool origin_search = false;
};

CurveSpec load_spec(const Options& opt) {
    CurveSpec spec = load_curve_spec(opt.spec_path);
    if (opt.samples > 0) {
        spec.samples = opt.samples % 2 == 0 ? opt.samples + 1 : opt.samples;
        if (spec.samples < 9) throw SpecError("--samples must be >= 9", "samples");
    }
    if (!opt.origin_text.empty()) spec.origin = parse_origin(opt.origin_text);
    if (spec.name.empty()) spec.name = opt.spec_path;
    return spec;
}

Tolerances load_config(const Options& opt) {
    return opt.config_path.empty() ? Tolerances{} : load_tolerances(opt.config_path);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
    } else {
        write_file_atomic(path, content);
    }
}

int cmd_analyze(const Options& opt) {
    const CurveSpec spec = load_spec(opt);
    const AnalysisResult result = analyze_curve(spec, load_config(opt), opt.origin_search);
    emit(opt.out_path, analysis_report_json(result));
    if (!opt.csv_path.empty()) write_file_atomic(opt.csv_path, analysis_csv(result));
    return 0;
}

int cmd_reconstruct(const Options& opt) {
    const CurveSpec spec = load_spec(opt);
    const ReconstructionResult result =
        reconstruct_from_spec(spec, load_config(opt), opt.mcoeffs);
    emit(opt.out_path, reconstruction_report_json(result));
    if (!opt.csv_path.empty()) write_file_atomic(opt.csv_path, curve_csv(result.curve));
    return 0;
}

int cmd_verify(const Options& opt) {
    const CurveSpec spec = load_spec(opt);
    const AnalysisResult result = analyze_curve(spec, load_config(opt), false);
    std::cout << residual_table_text(result);
    if (!opt.out_path.empty()) write_file_atomic(opt.out_path, analysis_report_json(result));
    return 0;
}

int cmd_plot(const Options& opt) {
    const CurveSpec spec = load_spec(opt);
    const Projection projection = parse_projection(opt.projection);

    std::vector<GVector> alpha;
    std::string footer = "kappa/tau ranges unavailable";
    switch (spec.form) {
    case CurveForm::Graph: {
        const GraphCurve curve(spec.y, spec.z, spec.lo, spec.hi, spec.origin);
        for (double s : sample_grid(curve, spec.samples)) alpha.push_back(curve.position(s));
        break;
    }
    case CurveForm::Intrinsic: {
        const auto curve = reconstruct_curve(intrinsic_of(spec), spec.samples);
        alpha = curve.alpha;
        break;
    }
    case CurveForm::Samples:
        for (const auto& row : spec.points) alpha.push_back({row[1], row[2], row[3]});
        break;
    }

    try {
        const AnalysisResult r = analyze_curve(spec, load_config(opt), false);
        char buf[128];
        std::snprintf(buf, sizeof(buf), "kappa in [%.6g, %.6g], tau in [%.6g, %.6g]",
                      r.frenet.kappa_min, r.frenet.kappa_max, r.frenet.tau_min,
                      r.frenet.tau_max);
        footer = buf;
    } catch (const std::exception&) {
        // The plot stays useful for curves the classifier refuses.
    }

    std::vector<std::pair<double, double>> points;
    points.reserve(alpha.size());
    for (const GVector& p : alpha) {
        switch (projection) {
        case Projection::YZ: points.emplace_back(p.y, p.z); break;
        case Projection::XY: points.emplace_back(p.x, p.y); break;
        case Projection::XZ: points.emplace_back(p.x, p.z); break;
        }
    }

    PlotSpec plot;
    plot.title = spec.name;
    plot.footer = footer;
    plot.x_label = projection == Projection::YZ ? "y" : "x";
    plot.y_label = projection == Projection::XY ? "y" : "z";
    emit(opt.svg_path, svg_polyline(points, plot));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pgc: Frenet apparatus, reconstruction and classification of "
                 "spacelike curves in the pseudo-Galilean space"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("spec", opt.spec_path, "curve specification file (JSON)")
            ->required();
        cmd->add_option("--config", opt.config_path, "tolerance overrides (JSON)");
        cmd->add_option("--samples", opt.samples, "grid size override (forced odd)");
        cmd->add_option("--origin", opt.origin_text, "classification origin x,y,z");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Frenet apparatus + classification");
    add_common(analyze);
    analyze->add_option("--out", opt.out_path, "report path (stdout when absent)");
    analyze->add_option("--csv", opt.csv_path, "per-grid-point series CSV");
    analyze->add_flag("--origin-search", opt.origin_search,
                      "search the origin minimizing the q variance");

    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "rebuild a curve from intrinsic data");
    add_common(reconstruct);
    reconstruct->add_option("--out", opt.out_path, "report path (stdout when absent)");
    reconstruct->add_option("--csv", opt.csv_path, "sampled curve CSV");
    reconstruct->add_flag("--mcoeffs", opt.mcoeffs,
                          "also cross-check the coefficient closed form against RK4");

    CLI::App* verify = app.add_subcommand("verify", "print the identity residual table");
    add_common(verify);
    verify->add_option("--out", opt.out_path, "also write the full JSON report here");

    CLI::App* plot = app.add_subcommand("plot", "projected SVG plot of the curve");
    add_common(plot);
    plot->add_option("--svg", opt.svg_path, "output path (stdout when absent)");
    plot->add_option("--projection", opt.projection, "yz (default), xy or xz");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (reconstruct->parsed()) return cmd_reconstruct(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (plot->parsed()) return cmd_plot(opt);
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const AdmissibilityError& e) {
        std::cerr << "inadmissible curve: " << e.what() << "\n";
        return 1;
    } catch (const FrameError& e) {
        std::cerr << "inadmissible curve: " << e.what() << "\n";
        return 1;
    } catch (const ZeroTorsionError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
}
