#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pgc {

enum class Projection { YZ, XY, XZ };

Projection parse_projection(const std::string& name); // throws SpecError

struct PlotSpec {
    std::string title;
    std::string footer;
    std::string x_label;
    std::string y_label;
};

/// Deterministic SVG polyline plot: fixed 800x600 viewport, 40 px margins,
/// linear fit of the data bounding box, five ticks per axis.
std::string svg_polyline(const std::vector<std::pair<double, double>>& points,
                         const PlotSpec& spec);

} // namespace pgc
