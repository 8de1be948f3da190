#include "leaguestats/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "leaguestats/format.hpp"

namespace leaguestats {
namespace {

// Secondary sort keys for equal descriptor values. Derived by checking every
// rule against the embedded reference rank tables: ratio ties follow the
// official position, equal player spends order by the foreign component,
// and equal foreign spends order by club name. Official position is the
// final fallback everywhere, which makes the order total and deterministic.
bool tie_before(Descriptor d, const TeamSeasonRecord& a, const TeamSeasonRecord& b) {
    switch (d) {
        case Descriptor::PlayerSpend:
            if (a.foreign_spend != b.foreign_spend) return a.foreign_spend < b.foreign_spend;
            break;
        case Descriptor::ForeignSpend:
            if (a.team != b.team) return a.team < b.team;
            break;
        default:
            break;
    }
    return a.position < b.position;
}

}  // namespace

std::vector<int> rerank(const SeasonTable& table, Descriptor d) {
    if (d == Descriptor::Points) {
        throw UsageError("rerank expects one of the five descriptors, not points");
    }
    if (!table.column_present(d)) {
        throw AbsentColumn(table.season() + ": " + std::string(to_string(d)) +
                           " column unavailable for this partial season");
    }
    const auto& records = table.records();
    std::vector<int> order(records.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const auto& a = records[static_cast<std::size_t>(i)];
        const auto& b = records[static_cast<std::size_t>(j)];
        double va = a.descriptor(d);
        double vb = b.descriptor(d);
        if (va != vb) return va < vb;
        return tie_before(d, a, b);
    });
    std::vector<int> ranks(records.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        ranks[static_cast<std::size_t>(order[k])] = static_cast<int>(k) + 1;
    }
    return ranks;
}

RankTable rerank_all(const SeasonTable& table) {
    RankTable out;
    out.season = table.season();
    for (Descriptor d : kRankedDescriptors) {
        out.ranks[d] = rerank(table, d);
    }
    return out;
}

std::vector<std::string> official_order(const SeasonTable& table) {
    std::vector<const TeamSeasonRecord*> rows;
    rows.reserve(table.records().size());
    for (const auto& r : table.records()) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(), [](const TeamSeasonRecord* a, const TeamSeasonRecord* b) {
        if (a->points != b->points) return a->points > b->points;
        return a->position < b->position;
    });
    std::vector<std::string> names;
    names.reserve(rows.size());
    for (const auto* r : rows) names.push_back(r->team);
    return names;
}

std::vector<int> rank_displacement(const SeasonTable& table, Descriptor d) {
    std::vector<int> ranks = rerank(table, d);
    std::vector<int> out(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        out[i] = ranks[i] - table.records()[i].position;
    }
    return out;
}

std::string rerank_table_csv(const SeasonTable& table, const RankTable& ranks) {
    std::string out =
        "expense_rank,profit_rank,player_spend_rank,foreign_spend_rank,ratio_rank,"
        "position,team,points,ratio,player_spend,foreign_spend,profit,expenditure\n";
    const auto& records = table.records();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out += std::to_string(ranks.ranks.at(Descriptor::Expenditure)[i]);
        out += ',';
        out += std::to_string(ranks.ranks.at(Descriptor::Profit)[i]);
        out += ',';
        out += std::to_string(ranks.ranks.at(Descriptor::PlayerSpend)[i]);
        out += ',';
        out += std::to_string(ranks.ranks.at(Descriptor::ForeignSpend)[i]);
        out += ',';
        out += std::to_string(ranks.ranks.at(Descriptor::Ratio)[i]);
        out += ',';
        out += std::to_string(r.position);
        out += ',';
        out += r.team;
        out += ',';
        out += std::to_string(r.points);
        out += ',';
        out += format_double(r.ratio);
        out += ',';
        out += format_double(r.player_spend);
        out += ',';
        out += format_double(r.foreign_spend);
        out += ',';
        out += format_double(r.profit);
        out += ',';
        out += format_double(r.expenditure);
        out += '\n';
    }
    return out;
}

std::pair<SeasonTable, RankTable> parse_rerank_csv(std::string_view text,
                                                   std::string_view season_label) {
    // parse_season_csv validates the extended schema and the table; re-read
    // the rank columns here.
    SeasonTable table = parse_season_csv(text, season_label);

    RankTable ranks;
    ranks.season = std::string(season_label);
    for (Descriptor d : kRankedDescriptors) {
        ranks.ranks[d] = std::vector<int>();
        ranks.ranks[d].reserve(SeasonTable::kTeamCount);
    }

    std::size_t pos = text.find('\n');
    pos = pos == std::string_view::npos ? text.size() : pos + 1;
    std::vector<std::vector<int>> columns(5);
    std::vector<int> positions;
    while (pos < text.size()) {
        std::size_t next = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
        pos = next == std::string_view::npos ? text.size() : next + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        int values[6] = {0};
        std::size_t start = 0;
        for (int k = 0; k < 6; ++k) {
            std::size_t comma = line.find(',', start);
            std::string_view cell = line.substr(start, comma - start);
            values[k] = std::stoi(std::string(cell));
            start = comma + 1;
        }
        for (int k = 0; k < 5; ++k) columns[static_cast<std::size_t>(k)].push_back(values[k]);
        positions.push_back(values[5]);
    }
    // Rows may arrive in any order; parse_season_csv normalized the table to
    // ascending position, so mirror that here.
    std::vector<std::size_t> order(positions.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return positions[a] < positions[b]; });
    const Descriptor layout[5] = {Descriptor::Expenditure, Descriptor::Profit,
                                  Descriptor::PlayerSpend, Descriptor::ForeignSpend,
                                  Descriptor::Ratio};
    for (int c = 0; c < 5; ++c) {
        auto& dst = ranks.ranks[layout[c]];
        for (std::size_t row : order) dst.push_back(columns[static_cast<std::size_t>(c)][row]);
    }
    return {std::move(table), std::move(ranks)};
}

}  // namespace leaguestats
