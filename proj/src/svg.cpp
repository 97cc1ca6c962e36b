#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace latwave::detail {

namespace {

constexpr double kWidth = 900.0, kHeight = 560.0;
constexpr double kLeft = 72.0, kRight = 24.0, kTop = 40.0, kBottom = 56.0;

std::string num(double v, const char* fmt = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg_chart(const std::string& title, const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<SvgSeries>& series,
                             const std::vector<std::string>& echo) {
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series) {
        for (const auto v : s.x) {
            x_min = std::min(x_min, v);
            x_max = std::max(x_max, v);
        }
        for (const auto v : s.y) {
            y_min = std::min(y_min, v);
            y_max = std::max(y_max, v);
        }
    }
    if (!(x_min < x_max)) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    if (!(y_min < y_max)) {
        y_min -= 1.0;
        y_max += 1.0;
    }
    // breathing room so curves do not sit on the frame
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double v) { return kLeft + (v - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double v) { return kTop + (y_max - v) / (y_max - y_min) * plot_h; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth, "%.0f") +
           "\" height=\"" + num(kHeight, "%.0f") + "\" viewBox=\"0 0 " +
           num(kWidth, "%.0f") + " " + num(kHeight, "%.0f") + "\">\n";
    out += "<!--\n";
    for (const auto& line : echo) out += escape(line) + "\n";
    out += "-->\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + escape(title) + "</text>\n";

    // frame and ticks
    out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
           num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = x_min + (x_max - x_min) * i / 5.0;
        const double fy = y_min + (y_max - y_min) * i / 5.0;
        out += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(kTop + plot_h) +
               "\" x2=\"" + num(px(fx)) + "\" y2=\"" + num(kTop + plot_h + 5) +
               "\" stroke=\"#444\"/>\n";
        out += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kTop + plot_h + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               num(fx, "%.4g") + "</text>\n";
        out += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(fy)) + "\" x2=\"" +
               num(kLeft) + "\" y2=\"" + num(py(fy)) + "\" stroke=\"#444\"/>\n";
        out += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py(fy) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               num(fy, "%.4g") + "</text>\n";
    }
    out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           escape(x_label) + "</text>\n";
    out += "<text x=\"18\" y=\"" + num(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " + num(kTop + plot_h / 2) + ")\">" +
           escape(y_label) + "</text>\n";

    for (const auto& s : series) {
        out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"" +
               num(s.stroke_width, "%.1f") + "\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) out += " ";
            out += num(px(s.x[i])) + "," + num(py(s.y[i]));
        }
        out += "\"/>\n";
    }

    double ly = kTop + 16.0;
    for (const auto& s : series) {
        const double lx = kLeft + plot_w - 180.0;
        out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
               num(lx + 28) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + s.color +
               "\" stroke-width=\"" + num(s.stroke_width, "%.1f") + "\"/>\n";
        out += "<text x=\"" + num(lx + 34) + "\" y=\"" + num(ly) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) +
               "</text>\n";
        ly += 18.0;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace latwave::detail
