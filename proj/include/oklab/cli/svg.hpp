#pragma once
// Dependency-free SVG line plots: fixed layout, fixed palette, fixed number
// formatting, so plots are byte-identical across runs.

#include <string>
#include <vector>

namespace oklab {

struct SvgSeries {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
};

struct SvgOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;  // plot log10 of the (positive) values
};

std::string svg_line_plot(const SvgOptions& options, const std::vector<SvgSeries>& series);

}  // namespace oklab
