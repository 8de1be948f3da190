#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "leaguestats/corpus.hpp"
#include "leaguestats/density.hpp"

namespace leaguestats {

// Published values the pipeline is checked against (shipped under
// data/reference/ and compiled in). The rank tables are exact oracles; the
// PC1 loadings are quantitative oracles; the non-overlap figures are
// calibration targets only.

struct ReferenceRanks {
    std::string season;
    std::map<Descriptor, std::vector<int>> ranks;  // official-position order
};

const std::vector<ReferenceRanks>& reference_rank_tables();

struct ReferencePc1 {
    std::string season;
    // Loading per variable: Pts, Ratio, PlayerSpend, ForeignSpend, Profit, Exp.
    std::array<double, 6> loadings{};
};

const std::vector<ReferencePc1>& reference_pca_pc1();

// Published points-vs-descriptor non-overlap matrix (chronological rows).
const std::vector<NonOverlapRow>& reference_nonoverlap();

// Seasons whose published PC1 column is excluded from quantitative
// comparison (the 2013/14 print duplicates the 2016/17 table).
const std::vector<std::string>& pca_reference_exclusions();

}  // namespace leaguestats
