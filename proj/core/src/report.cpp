#include "leaguestats/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "leaguestats/density.hpp"
#include "leaguestats/format.hpp"
#include "leaguestats/inequality.hpp"
#include "leaguestats/multivariate.hpp"
#include "leaguestats/ranking.hpp"
#include "leaguestats/reference.hpp"
#include "leaguestats/svg.hpp"

namespace leaguestats {
namespace {

using nlohmann::ordered_json;

constexpr double kPcaTolerance = 0.02;

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    f << content;
    if (!f) {
        throw UsageError("--out: cannot write '" + path.string() + "'");
    }
}

void emit(const ReportRequest& request, std::ostream& out, const std::string& content) {
    if (request.output_path) {
        write_file(*request.output_path, content);
    } else {
        out << content;
    }
}

void reject_flag(bool present, std::string_view flag, std::string_view command) {
    if (present) {
        throw UsageError(std::string(flag) + ": not accepted by the " + std::string(command) +
                         " command");
    }
}

Descriptor require_ranked(std::optional<Descriptor> d, std::string_view flag) {
    if (d == Descriptor::Points) {
        throw UsageError(std::string(flag) + ": points is the reference variable, pick one of "
                         "ratio, player_spend, foreign_spend, profit, expenditure");
    }
    return *d;
}

Corpus filter_season(Corpus corpus, const std::optional<std::string>& season) {
    if (!season) return corpus;
    const SeasonTable* table = corpus.find(*season);
    if (table == nullptr) {
        throw UsageError("--season: unknown season '" + *season + "'");
    }
    return Corpus({*table});
}

ordered_json json_or_undefined(const std::optional<double>& v) {
    if (v.has_value()) return *v;
    return "undefined";
}

std::vector<std::string> season_labels(const Corpus& corpus) {
    std::vector<std::string> labels;
    for (const auto& t : corpus.seasons()) labels.push_back(t.season());
    return labels;
}

// ---- rerank ----------------------------------------------------------

std::string rerank_csv_all(const Corpus& corpus) {
    std::string out =
        "season,expense_rank,profit_rank,player_spend_rank,foreign_spend_rank,ratio_rank,"
        "position,team,points,ratio,player_spend,foreign_spend,profit,expenditure\n";
    for (const auto& table : corpus.seasons()) {
        std::string body = rerank_table_csv(table, rerank_all(table));
        std::size_t pos = body.find('\n') + 1;  // drop the header
        while (pos < body.size()) {
            std::size_t next = body.find('\n', pos);
            out += table.season();
            out += ',';
            out.append(body, pos, next - pos + 1);
            pos = next + 1;
        }
    }
    return out;
}

ordered_json rerank_json_one(const SeasonTable& table) {
    RankTable ranks = rerank_all(table);
    ordered_json teams = ordered_json::array();
    for (std::size_t i = 0; i < table.records().size(); ++i) {
        const auto& r = table.records()[i];
        ordered_json row;
        row["team"] = r.team;
        row["position"] = r.position;
        row["points"] = r.points;
        row["ratio"] = r.ratio;
        row["player_spend"] = r.player_spend;
        row["foreign_spend"] = r.foreign_spend;
        row["profit"] = r.profit;
        row["expenditure"] = r.expenditure;
        ordered_json rk;
        for (Descriptor d : kRankedDescriptors) {
            rk[std::string(to_string(d))] = ranks.ranks.at(d)[i];
        }
        row["ranks"] = std::move(rk);
        teams.push_back(std::move(row));
    }
    ordered_json j;
    j["season"] = table.season();
    j["teams"] = std::move(teams);
    return j;
}

int run_rerank(const ReportRequest& request, const Corpus& corpus, std::ostream& out) {
    switch (request.format) {
        case OutputFormat::Csv:
            if (request.season) {
                const SeasonTable& table = corpus.seasons().front();
                emit(request, out, rerank_table_csv(table, rerank_all(table)));
            } else {
                emit(request, out, rerank_csv_all(corpus));
            }
            return 0;
        case OutputFormat::Json: {
            if (request.season) {
                emit(request, out, rerank_json_one(corpus.seasons().front()).dump(2) + "\n");
            } else {
                ordered_json j = ordered_json::array();
                for (const auto& t : corpus.seasons()) j.push_back(rerank_json_one(t));
                emit(request, out, j.dump(2) + "\n");
            }
            return 0;
        }
        case OutputFormat::Svg:
            throw UsageError("--format: svg not supported for rerank");
    }
    return 2;
}

// ---- inequality ------------------------------------------------------

std::string inequality_series_csv(const Corpus& corpus,
                                  const std::vector<Descriptor>& descriptors) {
    std::string out = "descriptor,season,gini,theil,shift_applied\n";
    for (Descriptor d : descriptors) {
        for (const auto& e : inequality_series(corpus, d)) {
            out += std::string(to_string(d)) + ',' + e.season + ',';
            out += e.gini ? format_double(*e.gini) : "undefined";
            out += ',' + format_double(e.theil) + ',' + format_double(e.theil_shift) + '\n';
        }
    }
    return out;
}

std::string inequality_series_svg(const Corpus& corpus,
                                  const std::vector<Descriptor>& descriptors, bool use_theil) {
    std::vector<SvgSeries> series;
    for (Descriptor d : descriptors) {
        SvgSeries s;
        s.name = std::string(to_string(d));
        auto entries = inequality_series(corpus, d);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (use_theil) {
                s.points.emplace_back(static_cast<double>(i), entries[i].theil);
            } else if (entries[i].gini) {
                s.points.emplace_back(static_cast<double>(i), *entries[i].gini);
            }
        }
        series.push_back(std::move(s));
    }
    SvgOptions options;
    options.title = use_theil ? "Theil index by season" : "Gini coefficient by season";
    options.x_labels = season_labels(corpus);
    return emit_svg(series, options);
}

int run_inequality(const ReportRequest& request, const Corpus& corpus, std::ostream& out) {
    std::vector<Descriptor> descriptors;
    if (request.descriptor) {
        descriptors = {require_ranked(request.descriptor, "--descriptor")};
    } else {
        descriptors.assign(kRankedDescriptors.begin(), kRankedDescriptors.end());
    }

    if (request.season && request.descriptor) {
        // One season, one descriptor: the Lorenz curve is the object of
        // interest; gini/theil ride along in the JSON form.
        const SeasonTable& table = corpus.seasons().front();
        std::vector<double> column = descriptor_column(table, descriptors.front());
        switch (request.format) {
            case OutputFormat::Csv:
                emit(request, out, lorenz_csv(lorenz(column)));
                return 0;
            case OutputFormat::Svg: {
                SvgOptions options;
                options.title = table.season() + " " +
                                std::string(to_string(descriptors.front())) + " Lorenz curve";
                emit(request, out, emit_svg(lorenz(column), options));
                return 0;
            }
            case OutputFormat::Json: {
                InequalityReport report = inequality_report(table);
                ordered_json j;
                j["season"] = table.season();
                j["descriptor"] = std::string(to_string(descriptors.front()));
                j["gini"] = json_or_undefined(report.gini.at(descriptors.front()));
                j["theil"] = report.theil.at(descriptors.front());
                j["shift_applied"] = report.theil_shift.at(descriptors.front());
                emit(request, out, j.dump(2) + "\n");
                return 0;
            }
        }
    }

    switch (request.format) {
        case OutputFormat::Csv:
            emit(request, out, inequality_series_csv(corpus, descriptors));
            return 0;
        case OutputFormat::Json: {
            std::vector<InequalityReport> reports;
            for (const auto& t : corpus.seasons()) reports.push_back(inequality_report(t));
            emit(request, out, inequality_series_json(reports));
            return 0;
        }
        case OutputFormat::Svg:
            emit(request, out, inequality_series_svg(corpus, descriptors, false));
            return 0;
    }
    return 2;
}

// ---- overlap ---------------------------------------------------------

ordered_json nonoverlap_json(const std::vector<NonOverlapRow>& rows) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["season"] = r.season;
        for (std::size_t c = 0; c < kRankedDescriptors.size(); ++c) {
            row[std::string(to_string(kRankedDescriptors[c]))] = r.values[c];
        }
        j.push_back(std::move(row));
    }
    return j;
}

int run_overlap(const ReportRequest& request, const Corpus& corpus, std::ostream& out) {
    if (!request.pair) {
        std::vector<NonOverlapRow> rows = nonoverlap_table(corpus);
        switch (request.format) {
            case OutputFormat::Csv:
                emit(request, out, nonoverlap_table_csv(rows));
                return 0;
            case OutputFormat::Json:
                emit(request, out, nonoverlap_json(rows).dump(2) + "\n");
                return 0;
            case OutputFormat::Svg: {
                std::vector<SvgSeries> series(kRankedDescriptors.size());
                for (std::size_t c = 0; c < kRankedDescriptors.size(); ++c) {
                    series[c].name = std::string(to_string(kRankedDescriptors[c]));
                    for (std::size_t i = 0; i < rows.size(); ++i) {
                        series[c].points.emplace_back(static_cast<double>(i), rows[i].values[c]);
                    }
                }
                SvgOptions options;
                options.title = "Points-vs-descriptor non-overlap by season";
                options.x_labels = season_labels(corpus);
                emit(request, out, emit_svg(series, options));
                return 0;
            }
        }
        return 2;
    }

    auto [a, b] = *request.pair;
    if (a == b) {
        throw UsageError("--pair: the two descriptors must differ");
    }
    if (request.season) {
        const SeasonTable& table = corpus.seasons().front();
        auto [fa, fb] = pair_densities(table, a, b);
        OverlapResult result = overlap(fa, fb);
        switch (request.format) {
            case OutputFormat::Csv: {
                std::string csv = "x,f_" + std::string(to_string(a)) + ",f_" +
                                  std::string(to_string(b)) + "\n";
                for (std::size_t i = 0; i < fa.grid.size(); ++i) {
                    csv += format_double(fa.grid[i]);
                    csv += ',';
                    csv += format_double(fa.density[i]);
                    csv += ',';
                    csv += format_double(fb.density[i]);
                    csv += '\n';
                }
                emit(request, out, csv);
                return 0;
            }
            case OutputFormat::Json: {
                ordered_json j;
                j["season"] = table.season();
                j["a"] = std::string(to_string(a));
                j["b"] = std::string(to_string(b));
                j["overlap"] = result.overlap;
                j["non_overlap"] = result.non_overlap;
                j["overlap_pct"] = 100.0 * result.overlap;
                emit(request, out, j.dump(2) + "\n");
                return 0;
            }
            case OutputFormat::Svg: {
                std::vector<SvgSeries> series(2);
                series[0].name = std::string(to_string(a));
                series[1].name = std::string(to_string(b));
                for (std::size_t i = 0; i < fa.grid.size(); ++i) {
                    series[0].points.emplace_back(fa.grid[i], fa.density[i]);
                    series[1].points.emplace_back(fb.grid[i], fb.density[i]);
                }
                SvgOptions options;
                options.title = table.season() + " density overlap";
                emit(request, out, emit_svg(series, options));
                return 0;
            }
        }
        return 2;
    }

    // Pair over all seasons.
    switch (request.format) {
        case OutputFormat::Csv: {
            std::string csv = "season,overlap,non_overlap,overlap_pct\n";
            for (const auto& table : corpus.seasons()) {
                double pct = overlap_pct(table, a, b);
                csv += table.season() + ',' + format_double(pct / 100.0) + ',' +
                       format_double(1.0 - pct / 100.0) + ',' + format_double(pct) + '\n';
            }
            emit(request, out, csv);
            return 0;
        }
        case OutputFormat::Json: {
            ordered_json j = ordered_json::array();
            for (const auto& table : corpus.seasons()) {
                double pct = overlap_pct(table, a, b);
                ordered_json row;
                row["season"] = table.season();
                row["a"] = std::string(to_string(a));
                row["b"] = std::string(to_string(b));
                row["overlap"] = pct / 100.0;
                row["non_overlap"] = 1.0 - pct / 100.0;
                row["overlap_pct"] = pct;
                j.push_back(std::move(row));
            }
            emit(request, out, j.dump(2) + "\n");
            return 0;
        }
        case OutputFormat::Svg: {
            SvgSeries s;
            s.name = std::string(to_string(a)) + " vs " + std::string(to_string(b)) +
                     " non-overlap";
            std::size_t i = 0;
            for (const auto& table : corpus.seasons()) {
                s.points.emplace_back(static_cast<double>(i++),
                                      1.0 - overlap_pct(table, a, b) / 100.0);
            }
            std::vector<SvgSeries> series = {std::move(s)};
            SvgOptions options;
            options.x_labels = season_labels(corpus);
            emit(request, out, emit_svg(series, options));
            return 0;
        }
    }
    return 2;
}

// ---- correlation -----------------------------------------------------

std::string correlation_csv(const std::vector<CorrelationRow>& rows) {
    std::string out = "season,ratio,player_spend,foreign_spend,profit,expenditure\n";
    for (const auto& r : rows) {
        out += r.season;
        for (double v : r.r) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

int run_correlation(const ReportRequest& request, const Corpus& corpus, std::ostream& out) {
    if (request.descriptor) {
        Descriptor d = require_ranked(request.descriptor, "--descriptor");
        CorrelationSeries series = correlation_series(corpus, d);
        switch (request.format) {
            case OutputFormat::Csv: {
                std::string csv = "season,r\n";
                for (const auto& [season, r] : series.entries) {
                    csv += season + ',' + format_double(r) + '\n';
                }
                emit(request, out, csv);
                return 0;
            }
            case OutputFormat::Json: {
                ordered_json j;
                j["descriptor"] = std::string(to_string(d));
                ordered_json entries = ordered_json::array();
                for (const auto& [season, r] : series.entries) {
                    entries.push_back({{"season", season}, {"r", r}});
                }
                j["entries"] = std::move(entries);
                emit(request, out, j.dump(2) + "\n");
                return 0;
            }
            case OutputFormat::Svg: {
                SvgSeries s;
                s.name = std::string(to_string(d));
                for (std::size_t i = 0; i < series.entries.size(); ++i) {
                    s.points.emplace_back(static_cast<double>(i), series.entries[i].second);
                }
                std::vector<SvgSeries> svg_series = {std::move(s)};
                SvgOptions options;
                options.title = "Points correlation by season";
                options.x_labels = season_labels(corpus);
                emit(request, out, emit_svg(svg_series, options));
                return 0;
            }
        }
        return 2;
    }

    std::vector<CorrelationRow> rows = correlation_matrix(corpus);
    switch (request.format) {
        case OutputFormat::Csv:
            emit(request, out, correlation_csv(rows));
            return 0;
        case OutputFormat::Json: {
            ordered_json j = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json row;
                row["season"] = r.season;
                for (std::size_t c = 0; c < kRankedDescriptors.size(); ++c) {
                    row[std::string(to_string(kRankedDescriptors[c]))] = r.r[c];
                }
                j.push_back(std::move(row));
            }
            emit(request, out, j.dump(2) + "\n");
            return 0;
        }
        case OutputFormat::Svg: {
            std::vector<SvgSeries> series(kRankedDescriptors.size());
            for (std::size_t c = 0; c < kRankedDescriptors.size(); ++c) {
                series[c].name = std::string(to_string(kRankedDescriptors[c]));
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    series[c].points.emplace_back(static_cast<double>(i), rows[i].r[c]);
                }
            }
            SvgOptions options;
            options.title = "Points correlation by season";
            options.x_labels = season_labels(corpus);
            emit(request, out, emit_svg(series, options));
            return 0;
        }
    }
    return 2;
}

// ---- pca -------------------------------------------------------------

ordered_json pca_json_object(const SeasonTable& table) {
    PcaResult result = pca(table);
    ordered_json j;
    j["season"] = table.season();
    j["variables"] = result.variables;
    j["loadings"] = result.loadings;
    j["eigenvalues"] = result.eigenvalues;
    j["explained"] = result.explained;
    return j;
}

int run_pca(const ReportRequest& request, const Corpus& corpus, std::ostream& out) {
    switch (request.format) {
        case OutputFormat::Csv: {
            if (request.season) {
                emit(request, out, pca_csv(pca(corpus.seasons().front())));
                return 0;
            }
            std::string csv = "season,variable,pca_1,pca_2,pca_3,pca_4,pca_5,pca_6\n";
            for (const auto& table : corpus.seasons()) {
                std::string body = pca_csv(pca(table));
                std::size_t pos = body.find('\n') + 1;
                while (pos < body.size()) {
                    std::size_t next = body.find('\n', pos);
                    csv += table.season();
                    csv += ',';
                    csv.append(body, pos, next - pos + 1);
                    pos = next + 1;
                }
            }
            emit(request, out, csv);
            return 0;
        }
        case OutputFormat::Json: {
            if (request.season) {
                emit(request, out, pca_json_object(corpus.seasons().front()).dump(2) + "\n");
                return 0;
            }
            ordered_json j = ordered_json::array();
            for (const auto& table : corpus.seasons()) j.push_back(pca_json_object(table));
            emit(request, out, j.dump(2) + "\n");
            return 0;
        }
        case OutputFormat::Svg:
            throw UsageError("--format: svg not supported for pca");
    }
    return 2;
}

}  // namespace

Corpus resolve_corpus(const ReportRequest& request) {
    ParseOptions opts;
    opts.allow_partial = request.allow_partial;
    if (request.input_dir) {
        try {
            return load_corpus_dir(*request.input_dir, opts);
        } catch (const UsageError& e) {
            throw UsageError("--input: " + std::string(e.what()));
        }
    }
    if (const char* env = std::getenv("LEAGUESTATS_DATA"); env != nullptr && *env != '\0') {
        return load_corpus_dir(env, opts);
    }
    return load_embedded_corpus();
}

bool ReproduceSummary::oracles_pass() const {
    auto ok = [](const OracleComparison& c) { return c.pass; };
    return std::all_of(rank_comparisons.begin(), rank_comparisons.end(), ok) &&
           std::all_of(pca_comparisons.begin(), pca_comparisons.end(), ok) &&
           !rank_comparisons.empty() && !pca_comparisons.empty();
}

ReproduceSummary reproduce(const Corpus& corpus, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw UsageError("--out: cannot create '" + out_dir.string() + "'");
    }

    ReproduceSummary summary;
    auto record = [&](const std::filesystem::path& p, const std::string& content) {
        write_file(p, content);
        summary.artifacts.push_back(p.filename().string());
    };

    // Rank tables, checked cell-for-cell against the published columns.
    for (const auto& table : corpus.seasons()) {
        RankTable ranks = rerank_all(table);
        record(out_dir / ("rerank_" + season_file_tag(table.season()) + ".csv"),
               rerank_table_csv(table, ranks));
        for (const auto& ref : reference_rank_tables()) {
            if (ref.season != table.season()) continue;
            OracleComparison cmp;
            cmp.name = "rerank " + table.season();
            int worst = 0;
            for (Descriptor d : kRankedDescriptors) {
                const auto& got = ranks.ranks.at(d);
                const auto& want = ref.ranks.at(d);
                for (std::size_t i = 0; i < got.size(); ++i) {
                    worst = std::max(worst, std::abs(got[i] - want[i]));
                }
            }
            cmp.max_abs_deviation = worst;
            cmp.pass = worst == 0;
            summary.rank_comparisons.push_back(std::move(cmp));
        }
    }

    // Inequality series.
    record(out_dir / "inequality.csv",
           inequality_series_csv(corpus, {kRankedDescriptors.begin(), kRankedDescriptors.end()}));
    {
        std::vector<InequalityReport> reports;
        for (const auto& t : corpus.seasons()) reports.push_back(inequality_report(t));
        record(out_dir / "inequality.json", inequality_series_json(reports));
        record(out_dir / "gini_series.svg",
               inequality_series_svg(corpus, {kRankedDescriptors.begin(), kRankedDescriptors.end()},
                                     false));
        record(out_dir / "theil_series.svg",
               inequality_series_svg(corpus, {kRankedDescriptors.begin(), kRankedDescriptors.end()},
                                     true));
    }

    // Non-overlap matrix plus calibration against the published values.
    {
        std::vector<NonOverlapRow> rows = nonoverlap_table(corpus);
        record(out_dir / "nonoverlap.csv", nonoverlap_table_csv(rows));
        std::vector<SvgSeries> series(kRankedDescriptors.size());
        for (std::size_t c = 0; c < kRankedDescriptors.size(); ++c) {
            series[c].name = std::string(to_string(kRankedDescriptors[c]));
            for (std::size_t i = 0; i < rows.size(); ++i) {
                series[c].points.emplace_back(static_cast<double>(i), rows[i].values[c]);
            }
        }
        SvgOptions options;
        options.title = "Points-vs-descriptor non-overlap by season";
        options.x_labels = season_labels(corpus);
        record(out_dir / "nonoverlap.svg", emit_svg(series, options));

        summary.profit_column_row_max = !rows.empty();
        double dev_sum = 0.0;
        int dev_count = 0;
        for (const auto& row : rows) {
            constexpr std::size_t kProfitColumn = 3;
            for (std::size_t c = 0; c < row.values.size(); ++c) {
                if (c != kProfitColumn && row.values[c] >= row.values[kProfitColumn]) {
                    summary.profit_column_row_max = false;
                }
            }
            for (const auto& ref : reference_nonoverlap()) {
                if (ref.season != row.season) continue;
                for (std::size_t c = 0; c < row.values.size(); ++c) {
                    dev_sum += std::abs(row.values[c] - ref.values[c]);
                    ++dev_count;
                }
            }
        }
        summary.table2_mad = dev_count > 0 ? dev_sum / dev_count : 0.0;
    }

    // Correlation matrix and the published prose checks.
    {
        std::vector<CorrelationRow> rows = correlation_matrix(corpus);
        record(out_dir / "correlation.csv", correlation_csv(rows));
        std::vector<SvgSeries> series(kRankedDescriptors.size());
        for (std::size_t c = 0; c < kRankedDescriptors.size(); ++c) {
            series[c].name = std::string(to_string(kRankedDescriptors[c]));
            for (std::size_t i = 0; i < rows.size(); ++i) {
                series[c].points.emplace_back(static_cast<double>(i), rows[i].r[c]);
            }
        }
        SvgOptions options;
        options.title = "Points correlation by season";
        options.x_labels = season_labels(corpus);
        record(out_dir / "correlation.svg", emit_svg(series, options));

        const CorrelationRow* row_1516 = nullptr;
        for (const auto& r : rows) {
            if (r.season == "2015/16") row_1516 = &r;
        }
        if (row_1516 != nullptr) {
            constexpr std::size_t kProfitColumn = 3;
            summary.profit_correlation_positive_2015_16 = row_1516->r[kProfitColumn] > 0.0;
            summary.lowest_correlations_2015_16 = true;
            for (std::size_t c : {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{4}}) {
                for (const auto& r : rows) {
                    if (r.r[c] < row_1516->r[c]) summary.lowest_correlations_2015_16 = false;
                }
            }
        }
    }

    // PCA tables, PC1 checked against the published loadings.
    for (const auto& table : corpus.seasons()) {
        PcaResult result = pca(table);
        record(out_dir / ("pca_" + season_file_tag(table.season()) + ".csv"), pca_csv(result));
        const auto& excluded = pca_reference_exclusions();
        if (std::find(excluded.begin(), excluded.end(), table.season()) != excluded.end()) {
            continue;
        }
        for (const auto& ref : reference_pca_pc1()) {
            if (ref.season != table.season()) continue;
            double dev_plus = 0.0;
            double dev_minus = 0.0;
            for (std::size_t i = 0; i < 6; ++i) {
                dev_plus = std::max(dev_plus, std::abs(result.loadings[i][0] - ref.loadings[i]));
                dev_minus = std::max(dev_minus, std::abs(-result.loadings[i][0] - ref.loadings[i]));
            }
            OracleComparison cmp;
            cmp.name = "pca pc1 " + table.season();
            cmp.max_abs_deviation = std::min(dev_plus, dev_minus);
            cmp.pass = cmp.max_abs_deviation <= kPcaTolerance;
            summary.pca_comparisons.push_back(std::move(cmp));
        }
    }

    std::string text = summary_text(summary);
    record(out_dir / "summary.txt", text);
    return summary;
}

std::string summary_text(const ReproduceSummary& summary) {
    std::string out;
    auto line = [&](const OracleComparison& c, bool integral) {
        out += c.name + ": " + (c.pass ? "PASS" : "FAIL") + " (max |delta| ";
        out += integral ? std::to_string(static_cast<int>(c.max_abs_deviation))
                        : format_double(c.max_abs_deviation);
        out += ")\n";
    };
    for (const auto& c : summary.rank_comparisons) line(c, true);
    for (const auto& c : summary.pca_comparisons) line(c, false);
    out += "non-overlap profit column is the row maximum: ";
    out += summary.profit_column_row_max ? "PASS" : "FAIL";
    out += "\nnon-overlap mean absolute deviation vs published: " +
           format_double(summary.table2_mad) + " (target <= 0.15): ";
    out += summary.table2_mad <= 0.15 ? "PASS" : "FAIL";
    out += "\n2015/16 points-profit correlation positive: ";
    out += summary.profit_correlation_positive_2015_16 ? "PASS" : "FAIL";
    out += "\n2015/16 ratio/player/foreign/expenditure correlations at series minimum: ";
    out += summary.lowest_correlations_2015_16 ? "PASS" : "FAIL";
    out += "\nartifacts written: " + std::to_string(summary.artifacts.size()) + "\n";
    return out;
}

int run(const ReportRequest& request, std::ostream& out, std::ostream& err) {
    try {
        switch (request.command) {
            case Command::Rerank:
                reject_flag(request.pair.has_value(), "--pair", "rerank");
                reject_flag(request.descriptor.has_value(), "--descriptor", "rerank");
                break;
            case Command::Inequality:
                reject_flag(request.pair.has_value(), "--pair", "inequality");
                break;
            case Command::Overlap:
                reject_flag(request.descriptor.has_value(), "--descriptor", "overlap");
                break;
            case Command::Correlation:
                reject_flag(request.pair.has_value(), "--pair", "correlation");
                break;
            case Command::Pca:
                reject_flag(request.pair.has_value(), "--pair", "pca");
                reject_flag(request.descriptor.has_value(), "--descriptor", "pca");
                break;
            case Command::Reproduce:
                reject_flag(request.pair.has_value(), "--pair", "reproduce");
                reject_flag(request.descriptor.has_value(), "--descriptor", "reproduce");
                reject_flag(request.season.has_value(), "--season", "reproduce");
                break;
        }

        Corpus corpus = resolve_corpus(request);
        if (request.command == Command::Reproduce) {
            std::filesystem::path dir = request.output_path.value_or("reproduce");
            ReproduceSummary summary = reproduce(corpus, dir);
            out << summary_text(summary);
            return 0;
        }

        Corpus filtered = filter_season(std::move(corpus), request.season);
        if (filtered.empty()) {
            throw EmptySeries("no seasons to analyze");
        }
        switch (request.command) {
            case Command::Rerank: return run_rerank(request, filtered, out);
            case Command::Inequality: return run_inequality(request, filtered, out);
            case Command::Overlap: return run_overlap(request, filtered, out);
            case Command::Correlation: return run_correlation(request, filtered, out);
            case Command::Pca: return run_pca(request, filtered, out);
            case Command::Reproduce: break;  // handled above
        }
        return 0;
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
    }
}

}  // namespace leaguestats
