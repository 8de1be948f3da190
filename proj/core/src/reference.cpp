#include "leaguestats/reference.hpp"

#include <charconv>

#include "leaguestats/ranking.hpp"

namespace leaguestats {
namespace detail {
std::string_view embedded_reference_file(std::string_view name);
}

namespace {

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
        pos = next == std::string_view::npos ? text.size() : next + 1;
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double to_double(std::string_view s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw InvariantViolation("bad numeric cell in reference data: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

const std::vector<ReferenceRanks>& reference_rank_tables() {
    static const std::vector<ReferenceRanks> tables = [] {
        std::vector<ReferenceRanks> out;
        for (const auto& season : load_embedded_corpus().seasons()) {
            std::string name = "rerank_" + season_file_tag(season.season()) + ".csv";
            auto [table, ranks] =
                parse_rerank_csv(detail::embedded_reference_file(name), season.season());
            ReferenceRanks ref;
            ref.season = season.season();
            ref.ranks = std::move(ranks.ranks);
            // The value columns of the reference tables and the corpus must
            // agree; both transcribe the same source.
            if (serialize_season_csv(table) != serialize_season_csv(season)) {
                throw InvariantViolation(season.season() +
                                         ": reference table disagrees with the corpus");
            }
            out.push_back(std::move(ref));
        }
        return out;
    }();
    return tables;
}

const std::vector<ReferencePc1>& reference_pca_pc1() {
    static const std::vector<ReferencePc1> rows = [] {
        std::vector<ReferencePc1> out;
        auto lines = lines_of(detail::embedded_reference_file("pca_pc1.csv"));
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto f = split(lines[i]);
            if (f.size() != 7) {
                throw InvariantViolation("pca_pc1.csv row needs 7 fields");
            }
            ReferencePc1 row;
            row.season = std::string(f[0]);
            for (std::size_t k = 0; k < 6; ++k) row.loadings[k] = to_double(f[k + 1]);
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

const std::vector<NonOverlapRow>& reference_nonoverlap() {
    static const std::vector<NonOverlapRow> rows = [] {
        std::vector<NonOverlapRow> out;
        auto lines = lines_of(detail::embedded_reference_file("table2_nonoverlap.csv"));
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto f = split(lines[i]);
            if (f.size() != 6) {
                throw InvariantViolation("table2_nonoverlap.csv row needs 6 fields");
            }
            NonOverlapRow row;
            row.season = std::string(f[0]);
            for (std::size_t k = 0; k < 5; ++k) row.values[k] = to_double(f[k + 1]);
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

const std::vector<std::string>& pca_reference_exclusions() {
    static const std::vector<std::string> excluded = {"2013/14"};
    return excluded;
}

}  // namespace leaguestats
