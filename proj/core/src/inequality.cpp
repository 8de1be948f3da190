#include "leaguestats/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "leaguestats/format.hpp"

namespace leaguestats {
namespace {

constexpr double kTheilEpsilon = 0.01;

std::vector<double> sorted_ascending(std::span<const double> values) {
    std::vector<double> x(values.begin(), values.end());
    std::stable_sort(x.begin(), x.end());
    return x;
}

double accurate_sum(std::span<const double> values) {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

}  // namespace

LorenzCurve lorenz(std::span<const double> values) {
    if (values.size() < 2) {
        throw DegenerateRange("lorenz needs at least 2 values");
    }
    double total = accurate_sum(values);
    if (total == 0.0) {
        throw ZeroTotal("value shares are undefined for a zero column total");
    }
    std::vector<double> x = sorted_ascending(values);
    const double n = static_cast<double>(x.size());

    LorenzCurve curve;
    curve.points.reserve(x.size() + 1);
    curve.points.push_back({0.0, 0.0});
    double partial = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        partial += x[k];
        curve.points.push_back({static_cast<double>(k + 1) / n, partial / total});
    }
    return curve;
}

double gini(std::span<const double> values) {
    if (values.size() < 2) {
        throw DegenerateRange("gini needs at least 2 values");
    }
    double total = accurate_sum(values);
    if (total <= 0.0) {
        throw NonPositiveTotal("gini undefined for mean <= 0 (total " +
                               format_double(total) + ")");
    }
    LorenzCurve curve = lorenz(values);
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
        const auto& a = curve.points[i];
        const auto& b = curve.points[i + 1];
        area += (b.p - a.p) * (a.L + b.L) / 2.0;
    }
    return 1.0 - 2.0 * area;
}

TheilResult theil(std::span<const double> values) {
    if (values.size() < 2) {
        throw DegenerateRange("theil needs at least 2 values");
    }
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    double min = *lo;
    double range = *hi - *lo;

    TheilResult out;
    std::vector<double> x(values.begin(), values.end());
    if (min <= 0.0) {
        if (range == 0.0) {
            throw DegenerateRange("theil undefined: all values equal and <= 0");
        }
        out.shift_applied = -min + kTheilEpsilon * range;
        for (double& v : x) v += out.shift_applied;
    }
    double mean = accurate_sum(x) / static_cast<double>(x.size());
    double t = 0.0;
    for (double v : x) {
        double s = v / mean;
        if (s > 0.0) t += s * std::log(s);
    }
    out.value = t / static_cast<double>(x.size());
    return out;
}

std::vector<SeasonInequality> inequality_series(const Corpus& corpus, Descriptor d) {
    std::vector<SeasonInequality> out;
    out.reserve(corpus.size());
    for (const auto& table : corpus.seasons()) {
        SeasonInequality entry;
        entry.season = table.season();
        std::vector<double> column = descriptor_column(table, d);
        try {
            entry.gini = gini(column);
        } catch (const NonPositiveTotal&) {
            entry.gini = std::nullopt;
        }
        TheilResult t = theil(column);
        entry.theil = t.value;
        entry.theil_shift = t.shift_applied;
        out.push_back(std::move(entry));
    }
    return out;
}

InequalityReport inequality_report(const SeasonTable& table) {
    InequalityReport report;
    report.season = table.season();
    for (Descriptor d : kRankedDescriptors) {
        std::vector<double> column = descriptor_column(table, d);
        try {
            report.gini[d] = gini(column);
        } catch (const NonPositiveTotal&) {
            report.gini[d] = std::nullopt;
            report.flags.push_back(std::string(to_string(d)) +
                                   ": gini undefined (column total <= 0)");
        }
        TheilResult t = theil(column);
        report.theil[d] = t.value;
        report.theil_shift[d] = t.shift_applied;
        if (t.shift_applied != 0.0) {
            report.flags.push_back(std::string(to_string(d)) + ": theil computed on values shifted by " +
                                   format_double(t.shift_applied));
        }
    }
    return report;
}

std::string lorenz_csv(const LorenzCurve& curve) {
    std::string out = "p,L\n";
    for (const auto& pt : curve.points) {
        out += format_double(pt.p);
        out += ',';
        out += format_double(pt.L);
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::ordered_json report_to_json(const InequalityReport& report) {
    nlohmann::ordered_json j;
    j["season"] = report.season;
    for (Descriptor d : kRankedDescriptors) {
        nlohmann::ordered_json entry;
        const auto& g = report.gini.at(d);
        if (g.has_value()) {
            entry["gini"] = *g;
        } else {
            entry["gini"] = "undefined";
        }
        entry["theil"] = report.theil.at(d);
        entry["shift_applied"] = report.theil_shift.at(d);
        j[std::string(to_string(d))] = std::move(entry);
    }
    j["flags"] = report.flags;
    return j;
}

}  // namespace

std::string inequality_report_json(const InequalityReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string inequality_series_json(const std::vector<InequalityReport>& reports) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    return j.dump(2) + "\n";
}

}  // namespace leaguestats
