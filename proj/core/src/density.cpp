#include "leaguestats/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "leaguestats/format.hpp"

namespace leaguestats {
namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;

double trapezoid(std::span<const double> y, double dx) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        sum += (y[i] + y[i + 1]) / 2.0;
    }
    return sum * dx;
}

// Linearly interpolated quantile on a sorted copy (the common "type 7" rule).
double quantile_sorted(const std::vector<double>& sorted, double p) {
    double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

std::vector<double> normalize(std::span<const double> values) {
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (values.empty() || *hi == *lo) {
        throw DegenerateRange("normalize needs a non-constant vector");
    }
    double min = *lo;
    double range = *hi - *lo;
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(),
                   [&](double v) { return (v - min) / range; });
    return out;
}

std::vector<double> scale_by_peak(std::span<const double> values) {
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, std::abs(v));
    if (values.empty() || peak == 0.0) {
        throw DegenerateRange("scale_by_peak needs a nonzero vector");
    }
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(),
                   [&](double v) { return v / peak; });
    return out;
}

double silverman_bandwidth(std::span<const double> values) {
    const double n = static_cast<double>(values.size());
    if (values.size() < 2) {
        throw DegenerateRange("bandwidth needs at least 2 values");
    }
    double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    double sd = std::sqrt(ss / (n - 1.0));
    if (sd == 0.0) {
        throw DegenerateRange("bandwidth undefined for a constant vector");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
    double scale = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
    return 0.9 * scale * std::pow(n, -0.2);
}

DensityEstimate kde(std::span<const double> values, const GridSpec& grid) {
    if (grid.points < 2 || grid.hi <= grid.lo) {
        throw UsageError("kde grid must have >= 2 points and hi > lo");
    }
    DensityEstimate est;
    est.bandwidth = silverman_bandwidth(values);

    const double dx = (grid.hi - grid.lo) / static_cast<double>(grid.points - 1);
    est.grid.resize(static_cast<std::size_t>(grid.points));
    est.density.resize(static_cast<std::size_t>(grid.points));
    const double n = static_cast<double>(values.size());
    for (int i = 0; i < grid.points; ++i) {
        double x = grid.lo + dx * static_cast<double>(i);
        double sum = 0.0;
        for (double v : values) {
            double z = (x - v) / est.bandwidth;
            sum += std::exp(-0.5 * z * z);
        }
        est.grid[static_cast<std::size_t>(i)] = x;
        est.density[static_cast<std::size_t>(i)] = sum * kInvSqrt2Pi / (n * est.bandwidth);
    }
    double integral = trapezoid(est.density, dx);
    for (double& d : est.density) d /= integral;
    return est;
}

OverlapResult overlap(const DensityEstimate& fa, const DensityEstimate& fb) {
    if (fa.grid.size() != fb.grid.size() || fa.grid != fb.grid) {
        throw GridMismatch("overlap requires both densities on the same grid");
    }
    if (fa.grid.size() < 2) {
        throw GridMismatch("overlap grid is too small");
    }
    std::vector<double> pointwise_min(fa.grid.size());
    for (std::size_t i = 0; i < fa.grid.size(); ++i) {
        pointwise_min[i] = std::min(fa.density[i], fb.density[i]);
    }
    double dx = fa.grid[1] - fa.grid[0];
    OverlapResult out;
    out.overlap = trapezoid(pointwise_min, dx);
    out.non_overlap = 1.0 - out.overlap;
    return out;
}

std::pair<DensityEstimate, DensityEstimate> pair_densities(const SeasonTable& table,
                                                           Descriptor a, Descriptor b) {
    std::vector<double> xa = scale_by_peak(descriptor_column(table, a));
    std::vector<double> xb = scale_by_peak(descriptor_column(table, b));
    return {kde(xa, kSymmetricGrid), kde(xb, kSymmetricGrid)};
}

std::vector<NonOverlapRow> nonoverlap_table(const Corpus& corpus) {
    std::vector<NonOverlapRow> rows;
    rows.reserve(corpus.size());
    for (const auto& table : corpus.seasons()) {
        NonOverlapRow row;
        row.season = table.season();
        DensityEstimate points =
            kde(scale_by_peak(descriptor_column(table, Descriptor::Points)), kSymmetricGrid);
        for (std::size_t c = 0; c < kRankedDescriptors.size(); ++c) {
            DensityEstimate other = kde(
                scale_by_peak(descriptor_column(table, kRankedDescriptors[c])), kSymmetricGrid);
            OverlapResult result = overlap(points, other);
            result.a = Descriptor::Points;
            result.b = kRankedDescriptors[c];
            result.season = table.season();
            row.values[c] = result.non_overlap;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double overlap_pct(const SeasonTable& table, Descriptor a, Descriptor b) {
    if (a == b) {
        throw UsageError("overlap_pct needs two different descriptors");
    }
    auto [fa, fb] = pair_densities(table, a, b);
    return 100.0 * overlap(fa, fb).overlap;
}

std::string density_csv(const DensityEstimate& estimate) {
    std::string out = "x,f\n";
    for (std::size_t i = 0; i < estimate.grid.size(); ++i) {
        out += format_double(estimate.grid[i]);
        out += ',';
        out += format_double(estimate.density[i]);
        out += '\n';
    }
    return out;
}

std::string nonoverlap_table_csv(std::span<const NonOverlapRow> rows) {
    std::string out = "season,ratio,player_spend,foreign_spend,profit,expenditure\n";
    // Newest season first, matching the published layout.
    std::vector<const NonOverlapRow*> ordered;
    ordered.reserve(rows.size());
    for (const auto& r : rows) ordered.push_back(&r);
    std::sort(ordered.begin(), ordered.end(),
              [](const NonOverlapRow* a, const NonOverlapRow* b) { return a->season > b->season; });
    for (const auto* r : ordered) {
        out += r->season;
        for (double v : r->values) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace leaguestats
