#include "oklab/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace oklab {

namespace {

constexpr int kWidth = 640, kHeight = 420;
constexpr int kLeft = 64, kRight = 24, kTop = 40, kBottom = 48;

const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string svg_line_plot(const SvgOptions& options, const std::vector<SvgSeries>& series) {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    auto view_y = [&](double y) {
        return options.log_y ? std::log10(std::max(y, 1e-300)) : y;
    };
    for (const SvgSeries& s : series)
        for (std::size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) {
            const double x = s.xs[i], y = view_y(s.ys[i]);
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            } else {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
    const double xpad = 0.02 * (xmax - xmin), ypad = 0.05 * (ymax - ymin);
    xmin -= xpad; xmax += xpad; ymin -= ypad; ymax += ypad;

    auto px = [&](double x) {
        return kLeft + (x - xmin) / (xmax - xmin) * (kWidth - kLeft - kRight);
    };
    auto py = [&](double y) {
        return kHeight - kBottom - (y - ymin) / (ymax - ymin) * (kHeight - kTop - kBottom);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
           "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 " +
           std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + std::to_string(kWidth / 2) +
           "\" y=\"22\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">" +
           escape(options.title) + "</text>\n";

    // Axes with min/max tick labels.
    svg += "<rect x=\"" + std::to_string(kLeft) + "\" y=\"" + std::to_string(kTop) +
           "\" width=\"" + std::to_string(kWidth - kLeft - kRight) + "\" height=\"" +
           std::to_string(kHeight - kTop - kBottom) +
           "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    const std::string ylab = options.log_y ? "log10 " + options.y_label : options.y_label;
    svg += "<text x=\"" + std::to_string(kWidth / 2) + "\" y=\"" + std::to_string(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" +
           escape(options.x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + std::to_string(kHeight / 2) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" transform=\"rotate(-90 16 " +
           std::to_string(kHeight / 2) + ")\">" + escape(ylab) + "</text>\n";
    svg += "<text x=\"" + std::to_string(kLeft) + "\" y=\"" + std::to_string(kHeight - kBottom + 16) +
           "\" font-family=\"monospace\" font-size=\"10\">" + num(xmin) + "</text>\n";
    svg += "<text x=\"" + std::to_string(kWidth - kRight) + "\" y=\"" +
           std::to_string(kHeight - kBottom + 16) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\">" + num(xmax) +
           "</text>\n";
    svg += "<text x=\"" + std::to_string(kLeft - 6) + "\" y=\"" + std::to_string(kHeight - kBottom) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\">" + num(ymin) +
           "</text>\n";
    svg += "<text x=\"" + std::to_string(kLeft - 6) + "\" y=\"" + std::to_string(kTop + 10) +
           "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\">" + num(ymax) +
           "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % 6];
        std::string points;
        for (std::size_t i = 0; i < series[s].xs.size() && i < series[s].ys.size(); ++i) {
            const double x = series[s].xs[i], y = view_y(series[s].ys[i]);
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            points += num(px(x)) + "," + num(py(y)) + " ";
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
        svg += "<text x=\"" + std::to_string(kLeft + 8) + "\" y=\"" +
               std::to_string(kTop + 14 + 14 * static_cast<int>(s)) +
               "\" font-family=\"monospace\" font-size=\"11\" fill=\"" + color + "\">" +
               escape(series[s].label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace oklab
