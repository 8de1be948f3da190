#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leaguestats/error.hpp"

namespace leaguestats {

enum class Descriptor {
    Points,
    Ratio,
    PlayerSpend,
    ForeignSpend,
    Profit,
    Expenditure,
};

// The five re-ranking criteria, in the column order used throughout
// (rank tables, non-overlap matrix, correlation matrix).
inline constexpr std::array<Descriptor, 5> kRankedDescriptors = {
    Descriptor::Ratio,       Descriptor::PlayerSpend, Descriptor::ForeignSpend,
    Descriptor::Profit,      Descriptor::Expenditure,
};

std::string_view to_string(Descriptor d);
std::optional<Descriptor> descriptor_from_string(std::string_view name);

struct TeamSeasonRecord {
    std::string team;
    int position = 0;         // official end-of-season rank, 1..20
    int points = 0;
    double ratio = 0.0;       // foreign players / British players
    double player_spend = 0.0;   // GBP millions, all transfers
    double foreign_spend = 0.0;  // GBP millions, foreign players only
    double profit = 0.0;         // GBP millions, negative = loss
    double expenditure = 0.0;    // GBP millions, total club expenditure

    double descriptor(Descriptor d) const;
};

// One season's 20-team table, row order normalized to ascending position.
// Immutable after construction; construction validates all invariants.
class SeasonTable {
public:
    static constexpr int kTeamCount = 20;

    // `absent` lists descriptors whose values are unavailable (only Profit
    // and Expenditure may be absent, and only for partial seasons).
    SeasonTable(std::string season, std::vector<TeamSeasonRecord> records,
                std::vector<Descriptor> absent = {});

    const std::string& season() const noexcept { return season_; }
    const std::vector<TeamSeasonRecord>& records() const noexcept { return records_; }
    const TeamSeasonRecord& at_position(int position) const;
    const TeamSeasonRecord* find_team(std::string_view team) const;
    bool column_present(Descriptor d) const noexcept;
    bool complete() const noexcept { return absent_.empty(); }

private:
    std::string season_;
    std::vector<TeamSeasonRecord> records_;
    std::vector<Descriptor> absent_;
};

// Column values in ascending-position order. Throws AbsentColumn for a
// descriptor marked absent on a partial season.
std::vector<double> descriptor_column(const SeasonTable& table, Descriptor d);

// Ordered collection of season tables (chronological by label).
class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<SeasonTable> seasons);

    const std::vector<SeasonTable>& seasons() const noexcept { return seasons_; }
    const SeasonTable* find(std::string_view season) const;
    const SeasonTable& at(std::string_view season) const;  // throws UsageError
    bool empty() const noexcept { return seasons_.empty(); }
    std::size_t size() const noexcept { return seasons_.size(); }

private:
    std::vector<SeasonTable> seasons_;
};

struct ParseOptions {
    // Permit empty profit/expenditure fields; a column with every field empty
    // is marked absent on the resulting table.
    bool allow_partial = false;
};

// Parses one season CSV. Accepts the base 8-column schema
//   team,position,points,ratio,player_spend,foreign_spend,profit,expenditure
// and the rank-extended 13-column schema produced by `leaguestats rerank`
// (rank columns are validated as permutations and dropped).
SeasonTable parse_season_csv(std::string_view text, std::string_view season_label,
                             const ParseOptions& opts = {});

// Inverse of parse_season_csv for complete tables: base schema, ascending
// position, shortest round-trip numbers, LF line endings.
std::string serialize_season_csv(const SeasonTable& table);

// The eight seasons 2009/10..2016/17 compiled into the library; validated
// once on first use, byte-identical to the shipped data/epl_*.csv files.
const Corpus& load_embedded_corpus();

// Raw embedded CSV text for one season label, as shipped.
std::string_view embedded_season_csv(std::string_view season_label);

// Loads every epl_YYYY_YY.csv in a directory.
Corpus load_corpus_dir(const std::filesystem::path& dir, const ParseOptions& opts = {});

// Clubs appear under several spellings in the source material
// ("Man U", "Manchester United"); all are folded to one canonical name.
std::string canonical_team_name(std::string_view name);

// "2009/10" -> "2009_10" (file-name form); inverse of season_label_from_tag.
std::string season_file_tag(std::string_view season_label);
std::optional<std::string> season_label_from_filename(std::string_view filename);

}  // namespace leaguestats
