#include "eqlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace eqlab {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 520.0;
constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape(const std::string& s) {
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

std::string num(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

}  // namespace

void write_svg_plot(const std::filesystem::path& file, const std::string& title,
                    const std::string& command, const std::vector<PlotSeries>& series,
                    bool log_y) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            if (log_y && y <= 0.0)
                throw std::invalid_argument("log-scale plot needs positive values");
            double yy = log_y ? std::log10(y) : y;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, yy);
            ymax = std::max(ymax, yy);
        }
    if (!std::isfinite(xmin)) throw std::invalid_argument("plot has no points");
    if (xmax - xmin < 1e-30) xmax = xmin + 1.0;
    if (ymax - ymin < 1e-30) ymax = ymin + 1.0;

    double plot_w = kWidth - kMarginLeft - kMarginRight;
    double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto px = [&](double x) { return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) {
        double yy = log_y ? std::log10(y) : y;
        return kMarginTop + (ymax - yy) / (ymax - ymin) * plot_h;
    };

    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<!-- " << escape(command) << " -->\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">"
        << escape(title) << "</text>\n";

    // Axes and ticks.
    out << "<g stroke=\"#333\" stroke-width=\"1\">\n"
        << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h << "\"/>\n"
        << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
        << kMarginLeft << "\" y2=\"" << kMarginTop + plot_h << "\"/>\n</g>\n";
    const int ticks = 5;
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= ticks; ++i) {
        double fx = xmin + (xmax - xmin) * i / ticks;
        double gx = px(fx);
        out << "<line x1=\"" << gx << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << gx
            << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"#333\"/>\n"
            << "<text x=\"" << gx << "\" y=\"" << kMarginTop + plot_h + 18
            << "\" text-anchor=\"middle\">" << num(fx) << "</text>\n";
        double fy = ymin + (ymax - ymin) * i / ticks;
        double gy = kMarginTop + (ymax - fy) / (ymax - ymin) * plot_h;
        out << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << gy << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << gy << "\" stroke=\"#333\"/>\n"
            << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << gy + 4
            << "\" text-anchor=\"end\">" << (log_y ? "1e" + num(fy) : num(fy))
            << "</text>\n";
    }
    out << "</g>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % (sizeof kPalette / sizeof kPalette[0])];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : series[si].points) out << num(px(x)) << ',' << num(py(y)) << ' ';
        out << "\"/>\n";
        if (!series[si].label.empty())
            out << "<text x=\"" << kMarginLeft + plot_w - 6 << "\" y=\""
                << kMarginTop + 16 + 16 * static_cast<double>(si)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
                << color << "\">" << escape(series[si].label) << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("failed writing " + file.string());
}

}  // namespace eqlab
