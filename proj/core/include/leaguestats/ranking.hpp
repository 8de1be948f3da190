#pragma once

#include <map>
#include <string>
#include <vector>

#include "leaguestats/corpus.hpp"

namespace leaguestats {

// Per-descriptor rank permutations for one season. ranks[d][i] is the rank
// (1 = smallest descriptor value) of the team at official position i+1.
struct RankTable {
    std::string season;
    std::map<Descriptor, std::vector<int>> ranks;
};

// Ranks teams by ascending descriptor value; rank 1 = smallest. Output is
// indexed by official position order and is always a permutation of 1..20.
// Tie handling follows the embedded reference tables (see rerank in
// ranking.cpp for the exact per-descriptor rules).
std::vector<int> rerank(const SeasonTable& table, Descriptor d);

// All five descriptor rank vectors.
RankTable rerank_all(const SeasonTable& table);

// Team names sorted by descending points; ties keep the stored official
// position order (goal data is not part of the corpus).
std::vector<std::string> official_order(const SeasonTable& table);

// Signed difference (descriptor rank - official position) per team, in
// official position order. Always sums to zero.
std::vector<int> rank_displacement(const SeasonTable& table, Descriptor d);

// 13-column CSV in the rank-extended schema; re-parses under
// parse_season_csv.
std::string rerank_table_csv(const SeasonTable& table, const RankTable& ranks);

// Parses the rank-extended schema, returning both the season table and the
// five rank columns.
std::pair<SeasonTable, RankTable> parse_rerank_csv(std::string_view text,
                                                   std::string_view season_label);

}  // namespace leaguestats
