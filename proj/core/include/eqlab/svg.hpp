#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace eqlab {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

// Self-contained SVG line plot: axes with tick labels, one polyline per
// series, legend, and the generating command embedded as a comment.
void write_svg_plot(const std::filesystem::path& file, const std::string& title,
                    const std::string& command, const std::vector<PlotSeries>& series,
                    bool log_y = false);

}  // namespace eqlab
