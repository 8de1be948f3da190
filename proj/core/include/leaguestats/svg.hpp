#pragma once

#include <span>
#include <string>
#include <vector>

#include "leaguestats/inequality.hpp"

namespace leaguestats {

struct SvgSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct SvgOptions {
    std::string title;
    // When set, x tick labels come from these (categorical axis, x = index);
    // otherwise numeric min/max labels are used.
    std::vector<std::string> x_labels;
};

// Standalone 800x600 SVG: framed plot area, min/max tick labels on both
// axes, one polyline per series, legend from series names. Byte-identical
// output for identical input. Throws EmptySeries when there is nothing to
// plot.
std::string emit_svg(std::span<const SvgSeries> series, const SvgOptions& options = {});

std::string emit_svg(const LorenzCurve& curve, const SvgOptions& options = {});

}  // namespace leaguestats
