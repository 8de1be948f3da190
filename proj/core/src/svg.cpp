#include "leaguestats/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "leaguestats/format.hpp"

namespace leaguestats {
namespace {

// Fixed layout: 800x600 viewport with margins for the axis labels and the
// legend. All coordinates are emitted with shortest round-trip formatting,
// so identical input series give byte-identical documents.
constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 170.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

constexpr const char* kSeriesColors[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string escape_xml(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
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

}  // namespace

std::string emit_svg(std::span<const SvgSeries> series, const SvgOptions& options) {
    std::size_t total_points = 0;
    for (const auto& s : series) total_points += s.points.size();
    if (series.empty() || total_points == 0) {
        throw EmptySeries("nothing to plot");
    }

    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = x_min;
    double y_max = -x_min;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max == x_min) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (y_max == y_min) {
        y_min -= 0.5;
        y_max += 0.5;
    }

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto px = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return kMarginTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    svg += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        svg += "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"16\">" + escape_xml(options.title) + "</text>\n";
    }

    // Frame.
    svg += "<rect x=\"" + format_double(kMarginLeft) + "\" y=\"" + format_double(kMarginTop) +
           "\" width=\"" + format_double(plot_w) + "\" height=\"" + format_double(plot_h) +
           "\" fill=\"none\" stroke=\"black\"/>\n";

    // Min/max tick labels. A categorical x axis labels the first and last
    // entry instead of the numeric range.
    std::string x_lo_label = options.x_labels.empty() ? format_double(x_min)
                                                      : escape_xml(options.x_labels.front());
    std::string x_hi_label = options.x_labels.empty() ? format_double(x_max)
                                                      : escape_xml(options.x_labels.back());
    svg += "<text x=\"" + format_double(kMarginLeft) + "\" y=\"" +
           format_double(kHeight - kMarginBottom + 20.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           x_lo_label + "</text>\n";
    svg += "<text x=\"" + format_double(kWidth - kMarginRight) + "\" y=\"" +
           format_double(kHeight - kMarginBottom + 20.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           x_hi_label + "</text>\n";
    svg += "<text x=\"" + format_double(kMarginLeft - 8.0) + "\" y=\"" +
           format_double(kHeight - kMarginBottom + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
           format_double(y_min) + "</text>\n";
    svg += "<text x=\"" + format_double(kMarginLeft - 8.0) + "\" y=\"" +
           format_double(kMarginTop + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
           format_double(y_max) + "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kSeriesColors[s % std::size(kSeriesColors)];
        if (series[s].points.empty()) continue;
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [x, y] : series[s].points) {
            if (!first) svg += ' ';
            first = false;
            svg += format_double(px(x));
            svg += ',';
            svg += format_double(py(y));
        }
        svg += "\"/>\n";
    }

    // Legend, one swatch per named series.
    double ly = kMarginTop + 10.0;
    for (std::size_t s = 0; s < series.size(); ++s) {
        if (series[s].name.empty()) continue;
        const char* color = kSeriesColors[s % std::size(kSeriesColors)];
        double lx = kWidth - kMarginRight + 12.0;
        svg += "<line x1=\"" + format_double(lx) + "\" y1=\"" + format_double(ly) + "\" x2=\"" +
               format_double(lx + 22.0) + "\" y2=\"" + format_double(ly) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + format_double(lx + 28.0) + "\" y=\"" + format_double(ly + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + escape_xml(series[s].name) +
               "</text>\n";
        ly += 18.0;
    }

    svg += "</svg>\n";
    return svg;
}

std::string emit_svg(const LorenzCurve& curve, const SvgOptions& options) {
    SvgSeries equality{"equality", {{0.0, 0.0}, {1.0, 1.0}}};
    SvgSeries lorenz_series{"lorenz", {}};
    lorenz_series.points.reserve(curve.points.size());
    for (const auto& pt : curve.points) lorenz_series.points.emplace_back(pt.p, pt.L);
    std::vector<SvgSeries> series = {std::move(lorenz_series), std::move(equality)};
    return emit_svg(series, options);
}

}  // namespace leaguestats
