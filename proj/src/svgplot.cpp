#include "pgc/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pgc/errors.hpp"

namespace pgc {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

Projection parse_projection(const std::string& name) {
    if (name == "yz") return Projection::YZ;
    if (name == "xy") return Projection::XY;
    if (name == "xz") return Projection::XZ;
    throw SpecError("projection must be one of yz, xy, xz", "projection");
}

std::string svg_polyline(const std::vector<std::pair<double, double>>& points,
                         const PlotSpec& spec) {
    if (points.empty()) throw std::invalid_argument("svg_polyline: no points");

    double umin = points[0].first, umax = points[0].first;
    double vmin = points[0].second, vmax = points[0].second;
    for (const auto& [u, v] : points) {
        if (!std::isfinite(u) || !std::isfinite(v)) {
            throw NumericError("plot data contains non-finite values");
        }
        umin = std::min(umin, u);
        umax = std::max(umax, u);
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    if (umax == umin) {
        umin -= 0.5;
        umax += 0.5;
    }
    if (vmax == vmin) {
        vmin -= 0.5;
        vmax += 0.5;
    }

    const double plot_w = kWidth - 2.0 * kMargin;
    const double plot_h = kHeight - 2.0 * kMargin;
    auto map_x = [&](double u) { return kMargin + (u - umin) / (umax - umin) * plot_w; };
    auto map_y = [&](double v) {
        return kHeight - kMargin - (v - vmin) / (vmax - vmin) * plot_h;
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg += "  <rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" +
           num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"#404040\" stroke-width=\"1\"/>\n";

    // Five evenly spaced ticks per axis, labels in %.6g.
    svg += "  <g font-family=\"monospace\" font-size=\"11\" fill=\"#202020\">\n";
    for (int i = 0; i < 5; ++i) {
        const double fu = umin + (umax - umin) * i / 4.0;
        const double fx = map_x(fu);
        svg += "    <line x1=\"" + num(fx) + "\" y1=\"" + num(kHeight - kMargin) +
               "\" x2=\"" + num(fx) + "\" y2=\"" + num(kHeight - kMargin + 5) +
               "\" stroke=\"#404040\"/>\n";
        svg += "    <text x=\"" + num(fx) + "\" y=\"" + num(kHeight - kMargin + 18) +
               "\" text-anchor=\"middle\">" + num(fu) + "</text>\n";

        const double fv = vmin + (vmax - vmin) * i / 4.0;
        const double fy = map_y(fv);
        svg += "    <line x1=\"" + num(kMargin - 5) + "\" y1=\"" + num(fy) + "\" x2=\"" +
               num(kMargin) + "\" y2=\"" + num(fy) + "\" stroke=\"#404040\"/>\n";
        svg += "    <text x=\"" + num(kMargin - 8) + "\" y=\"" + num(fy + 4) +
               "\" text-anchor=\"end\">" + num(fv) + "</text>\n";
    }
    svg += "  </g>\n";

    svg += "  <polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < points.size(); ++i) {
        if (i) svg += ' ';
        svg += num(map_x(points[i].first)) + ',' + num(map_y(points[i].second));
    }
    svg += "\"/>\n";

    svg += "  <text x=\"" + num(kWidth / 2) +
           "\" y=\"24\" font-family=\"monospace\" font-size=\"15\" "
           "text-anchor=\"middle\" fill=\"#101010\">" +
           escape_xml(spec.title) + "</text>\n";
    svg += "  <text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 8) +
           "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\" "
           "fill=\"#404040\">" +
           escape_xml(spec.footer) + "</text>\n";
    svg += "  <text x=\"" + num(kWidth - kMargin) + "\" y=\"" + num(kHeight - kMargin - 6) +
           "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\" "
           "fill=\"#404040\">" +
           escape_xml(spec.x_label) + "</text>\n";
    svg += "  <text x=\"" + num(kMargin + 6) + "\" y=\"" + num(kMargin + 14) +
           "\" font-family=\"monospace\" font-size=\"11\" fill=\"#404040\">" +
           escape_xml(spec.y_label) + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace pgc
