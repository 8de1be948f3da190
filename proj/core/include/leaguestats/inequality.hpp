#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leaguestats/corpus.hpp"

namespace leaguestats {

// Cumulative population share p (steps of 1/n, starting at 0) against
// cumulative value share L, values sorted ascending. n+1 points.
struct LorenzCurve {
    struct Point {
        double p;
        double L;
    };
    std::vector<Point> points;
};

LorenzCurve lorenz(std::span<const double> values);

// 1 - 2 * (trapezoidal area under the Lorenz curve). In [0,1) for
// non-negative inputs; may exceed 1 when negatives are present (not
// clamped). Throws NonPositiveTotal when the mean is <= 0.
double gini(std::span<const double> values);

// Theil index T = (1/n) sum (x_i/mu) ln(x_i/mu). Inputs with any value <= 0
// are shifted to x - min(x) + 0.01 * range(x) first; shift_applied reports
// the offset added (0 when no shift was needed).
struct TheilResult {
    double value = 0.0;
    double shift_applied = 0.0;
};

TheilResult theil(std::span<const double> values);

struct SeasonInequality {
    std::string season;
    std::optional<double> gini;  // nullopt = undefined (season total <= 0)
    double theil = 0.0;
    double theil_shift = 0.0;
};

// One entry per corpus season, chronological. Per-season gini errors become
// undefined markers rather than exceptions.
std::vector<SeasonInequality> inequality_series(const Corpus& corpus, Descriptor d);

// Gini and Theil for all five descriptors of one season, with notes on any
// undefined values or applied shifts.
struct InequalityReport {
    std::string season;
    std::map<Descriptor, std::optional<double>> gini;
    std::map<Descriptor, double> theil;
    std::map<Descriptor, double> theil_shift;
    std::vector<std::string> flags;
};

InequalityReport inequality_report(const SeasonTable& table);

// "p,L" two-column CSV.
std::string lorenz_csv(const LorenzCurve& curve);

// JSON with explicit "undefined" markers and shift_applied fields.
std::string inequality_report_json(const InequalityReport& report);
std::string inequality_series_json(const std::vector<InequalityReport>& reports);

}  // namespace leaguestats
