#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "leaguestats/corpus.hpp"

namespace leaguestats {

struct GridSpec {
    double lo = -0.2;
    double hi = 1.2;
    int points = 512;
};

// Default grid for min-max normalized data (margin for kernel tails).
inline constexpr GridSpec kUnitGrid{-0.2, 1.2, 512};
// Grid for peak-scaled data, which lives in [-1, 1] (profit columns carry
// negative mass). Used by the overlap pipeline; see docs/calibration.md.
inline constexpr GridSpec kSymmetricGrid{-1.2, 1.2, 512};

struct DensityEstimate {
    std::vector<double> grid;
    std::vector<double> density;  // non-negative, trapezoid-integrates to 1
    double bandwidth = 0.0;
};

// Affine min-max map onto [0,1]. Throws DegenerateRange on constant input.
std::vector<double> normalize(std::span<const double> values);

// Sign-preserving scale division x -> x / max|x|, onto [-1,1]. Keeps zero at
// zero so profit losses stay on the negative axis. Throws DegenerateRange on
// an all-zero vector.
std::vector<double> scale_by_peak(std::span<const double> values);

// Silverman's rule: 0.9 * min(sd, IQR/1.34) * n^(-1/5), sample sd, linearly
// interpolated quartiles. Falls back to sd alone when the IQR is zero.
double silverman_bandwidth(std::span<const double> values);

// Gaussian-kernel KDE on a fixed uniform grid, renormalized so the
// trapezoidal integral over the grid is exactly 1. Needs >= 2 distinct
// values.
DensityEstimate kde(std::span<const double> values, const GridSpec& grid = kUnitGrid);

struct OverlapResult {
    double overlap = 0.0;      // in [0,1]; trapezoidal integral of min(f,g)
    double non_overlap = 0.0;  // 1 - overlap
    // Filled by the table/pair helpers; meaningless for bare overlap() calls.
    Descriptor a = Descriptor::Points;
    Descriptor b = Descriptor::Points;
    std::string season;
};

// Symmetric in its arguments. Throws GridMismatch unless both estimates share
// the same grid.
OverlapResult overlap(const DensityEstimate& fa, const DensityEstimate& fb);

struct NonOverlapRow {
    std::string season;
    // Column order: Ratio, PlayerSpend, ForeignSpend, Profit, Expenditure.
    std::array<double, 5> values{};
};

// Non-overlap between points and each descriptor, one row per corpus season
// (chronological). Peak-scaled inputs on the symmetric grid.
std::vector<NonOverlapRow> nonoverlap_table(const Corpus& corpus);

// 100 * overlap of two descriptor densities for one season. a != b.
double overlap_pct(const SeasonTable& table, Descriptor a, Descriptor b);

// Pairwise densities on a shared grid, as used by overlap_pct.
std::pair<DensityEstimate, DensityEstimate> pair_densities(const SeasonTable& table,
                                                           Descriptor a, Descriptor b);

// "x,f" two-column CSV.
std::string density_csv(const DensityEstimate& estimate);

// Season row label + 5 numeric columns, newest season first.
std::string nonoverlap_table_csv(std::span<const NonOverlapRow> rows);

}  // namespace leaguestats
