#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "leaguestats/ranking.hpp"
#include "leaguestats/reference.hpp"

using namespace leaguestats;

namespace {

const SeasonTable& season(const char* label) {
    return load_embedded_corpus().at(label);
}

int rank_of(const SeasonTable& t, const std::vector<int>& ranks, const char* team) {
    const TeamSeasonRecord* r = t.find_team(team);
    REQUIRE(r != nullptr);
    return ranks[static_cast<std::size_t>(r->position - 1)];
}

// A synthetic table with strictly distinct values in every column.
SeasonTable distinct_table() {
    std::vector<TeamSeasonRecord> records;
    for (int i = 0; i < 20; ++i) {
        TeamSeasonRecord r;
        r.team = "Club" + std::to_string(i + 1);
        r.position = i + 1;
        r.points = 90 - 3 * i;
        r.ratio = 0.3 + 0.1 * i;
        r.player_spend = 100.0 - 4.5 * i;
        r.foreign_spend = 50.0 - 2.0 * i;
        r.profit = -40.0 + 5.0 * i;
        r.expenditure = 300.0 - 11.0 * i;
        records.push_back(std::move(r));
    }
    return SeasonTable("2020/21", std::move(records));
}

}  // namespace

TEST_CASE("rerank reproduces the published 2009/10 columns") {
    const SeasonTable& t = season("2009/10");

    std::vector<int> exp = rerank(t, Descriptor::Expenditure);
    CHECK(rank_of(t, exp, "Wigan") == 1);
    CHECK(rank_of(t, exp, "Portsmouth") == 2);
    CHECK(rank_of(t, exp, "Chelsea") == 20);

    // Equal ratios 0.52632: the higher-placed club comes first.
    std::vector<int> ratio = rerank(t, Descriptor::Ratio);
    CHECK(rank_of(t, ratio, "Birmingham") == 1);
    CHECK(rank_of(t, ratio, "Burnley") == 2);

    // Three clubs with zero foreign spend.
    std::vector<int> foreign = rerank(t, Descriptor::ForeignSpend);
    CHECK(rank_of(t, foreign, "Birmingham") == 1);
    CHECK(rank_of(t, foreign, "Burnley") == 2);
    CHECK(rank_of(t, foreign, "Portsmouth") == 3);
}

TEST_CASE("rerank_all matches the reference tables for the spec'd seasons") {
    for (const char* label : {"2009/10", "2016/17"}) {
        const SeasonTable& t = season(label);
        RankTable computed = rerank_all(t);
        for (const auto& ref : reference_rank_tables()) {
            if (ref.season != label) continue;
            for (Descriptor d : kRankedDescriptors) {
                CHECK(computed.ranks.at(d) == ref.ranks.at(d));
            }
        }
    }
}

TEST_CASE("tie groups that the uniform position rule cannot order") {
    // 2010/11: two zero foreign spends; club-name order decides.
    std::vector<int> foreign_1011 = rerank(season("2010/11"), Descriptor::ForeignSpend);
    CHECK(rank_of(season("2010/11"), foreign_1011, "Blackpool") == 1);
    CHECK(rank_of(season("2010/11"), foreign_1011, "Stoke") == 2);

    // 2011/12: three clubs on 6.6m player spend; foreign component decides.
    std::vector<int> player_1112 = rerank(season("2011/12"), Descriptor::PlayerSpend);
    CHECK(rank_of(season("2011/12"), player_1112, "Bolton") == 4);
    CHECK(rank_of(season("2011/12"), player_1112, "Wigan") == 5);
    CHECK(rank_of(season("2011/12"), player_1112, "Everton") == 6);
}

TEST_CASE("every rerank output is a permutation of 1..20") {
    for (const auto& t : load_embedded_corpus().seasons()) {
        for (Descriptor d : kRankedDescriptors) {
            std::vector<int> ranks = rerank(t, d);
            std::vector<int> sorted = ranks;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> expected(20);
            std::iota(expected.begin(), expected.end(), 1);
            CHECK(sorted == expected);
        }
    }
}

TEST_CASE("monotonicity: smaller value implies smaller rank") {
    for (const auto& t : load_embedded_corpus().seasons()) {
        for (Descriptor d : kRankedDescriptors) {
            std::vector<int> ranks = rerank(t, d);
            const auto& rec = t.records();
            for (std::size_t i = 0; i < rec.size(); ++i) {
                for (std::size_t j = 0; j < rec.size(); ++j) {
                    if (rec[i].descriptor(d) < rec[j].descriptor(d)) {
                        CHECK(ranks[i] < ranks[j]);
                    }
                }
            }
        }
    }
}

TEST_CASE("tie determinism: repeated calls agree") {
    const SeasonTable& t = season("2014/15");
    for (Descriptor d : kRankedDescriptors) {
        CHECK(rerank(t, d) == rerank(t, d));
    }
}

TEST_CASE("distinct values reduce to the ascending-sort permutation") {
    SeasonTable t = distinct_table();
    for (Descriptor d : kRankedDescriptors) {
        std::vector<int> ranks = rerank(t, d);
        std::vector<std::size_t> order(20);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return t.records()[a].descriptor(d) < t.records()[b].descriptor(d);
        });
        for (std::size_t k = 0; k < order.size(); ++k) {
            CHECK(ranks[order[k]] == static_cast<int>(k) + 1);
        }
    }
}

TEST_CASE("rerank rejects points and absent columns") {
    CHECK_THROWS_AS(rerank(season("2009/10"), Descriptor::Points), UsageError);
}

TEST_CASE("official_order sorts by points with position as the tiebreak") {
    std::vector<std::string> order_0910 = official_order(season("2009/10"));
    CHECK(order_0910.front() == "Chelsea");
    CHECK(order_0910.back() == "Portsmouth");
    CHECK(official_order(season("2015/16")).front() == "Leicester");

    // Corpus tables are already position-sorted, so the official order is the
    // stored order even across points ties (e.g. two clubs on 50 points).
    for (const auto& t : load_embedded_corpus().seasons()) {
        std::vector<std::string> expected;
        for (const auto& r : t.records()) expected.push_back(r.team);
        CHECK(official_order(t) == expected);
    }
}

TEST_CASE("rank displacement") {
    const SeasonTable& t = season("2009/10");
    std::vector<int> disp_exp = rank_displacement(t, Descriptor::Expenditure);
    CHECK(disp_exp[0] == 19);  // Chelsea: rank 20, position 1

    std::vector<int> disp_profit = rank_displacement(t, Descriptor::Profit);
    const TeamSeasonRecord* city = t.find_team("Manchester City");
    REQUIRE(city != nullptr);
    CHECK(disp_profit[static_cast<std::size_t>(city->position - 1)] == -4);

    for (const auto& table : load_embedded_corpus().seasons()) {
        for (Descriptor d : kRankedDescriptors) {
            std::vector<int> disp = rank_displacement(table, d);
            CHECK(std::accumulate(disp.begin(), disp.end(), 0) == 0);
        }
    }
}

TEST_CASE("rank-extended CSV round-trips") {
    const SeasonTable& t = season("2012/13");
    RankTable ranks = rerank_all(t);
    std::string csv = rerank_table_csv(t, ranks);

    auto [table2, ranks2] = parse_rerank_csv(csv, t.season());
    CHECK(serialize_season_csv(table2) == serialize_season_csv(t));
    for (Descriptor d : kRankedDescriptors) {
        CHECK(ranks2.ranks.at(d) == ranks.ranks.at(d));
    }

    // and the plain parser accepts the extended schema
    SeasonTable table3 = parse_season_csv(csv, t.season());
    CHECK(serialize_season_csv(table3) == serialize_season_csv(t));
}

TEST_CASE("extended schema validates rank permutations") {
    const SeasonTable& t = season("2012/13");
    std::string csv = rerank_table_csv(t, rerank_all(t));
    // Duplicate a rank: first data row, first column 16 -> 1 (1 appears twice).
    std::size_t header_end = csv.find('\n') + 1;
    REQUIRE(csv.compare(header_end, 3, "16,") == 0);
    csv.replace(header_end, 3, "1,");
    CHECK_THROWS_AS(parse_season_csv(csv, t.season()), InvariantViolation);
}
