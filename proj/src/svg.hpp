// Minimal SVG line-chart emitter used for the figure artifacts; axes,
// polylines, and a legend, nothing more.

#pragma once

#include <string>
#include <vector>

namespace latwave::detail {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    double stroke_width = 1.0;
    std::string color = "#000000";
};

/// Renders the chart to a string; the echo lines are embedded as an XML
/// comment so the artifact records the spec that produced it.
std::string render_svg_chart(const std::string& title, const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<SvgSeries>& series,
                             const std::vector<std::string>& echo);

}  // namespace latwave::detail
