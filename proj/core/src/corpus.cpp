#include "leaguestats/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "leaguestats/format.hpp"

namespace leaguestats {
namespace {

constexpr std::string_view kBaseHeader =
    "team,position,points,ratio,player_spend,foreign_spend,profit,expenditure";
constexpr std::string_view kRankHeader =
    "expense_rank,profit_rank,player_spend_rank,foreign_spend_rank,ratio_rank,"
    "position,team,points,ratio,player_spend,foreign_spend,profit,expenditure";

constexpr double kSpendTolerance = 1e-9;

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

int parse_int_field(std::string_view s, std::string_view what, int row) {
    int value = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw MalformedRow("row " + std::to_string(row) + ": non-integer " +
                           std::string(what) + " '" + std::string(s) + "'");
    }
    return value;
}

double parse_real_field(std::string_view s, std::string_view what, int row) {
    // from_chars(double) keeps parsing strict: no locale, no trailing junk.
    double value = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw MalformedRow("row " + std::to_string(row) + ": non-numeric " +
                           std::string(what) + " '" + std::string(s) + "'");
    }
    return value;
}

const std::map<std::string_view, std::string_view>& alias_map() {
    static const std::map<std::string_view, std::string_view> aliases = {
        {"Man U", "Manchester United"},
        {"Man Utd", "Manchester United"},
        {"Man United", "Manchester United"},
        {"Man C", "Manchester City"},
        {"Man City", "Manchester City"},
        {"Aston V", "Aston Villa"},
        {"Fullham", "Fulham"},
        {"Wolvs", "Wolverhampton"},
        {"Wolves", "Wolverhampton"},
        {"Wolverhampton Wanderers", "Wolverhampton"},
        {"West Brom", "West Bromwich"},
        {"West Bromwich Albion", "West Bromwich"},
        {"Queens Park Rangers", "QPR"},
        {"Leicester City", "Leicester"},
        {"Stoke City", "Stoke"},
        {"Hull City", "Hull"},
        {"Birmingham City", "Birmingham"},
        {"Blackburn Rovers", "Blackburn"},
        {"Bolton Wanderers", "Bolton"},
        {"West Ham United", "West Ham"},
        {"Wigan Athletic", "Wigan"},
        {"Swansea City", "Swansea"},
        {"Norwich City", "Norwich"},
        {"Cardiff City", "Cardiff"},
        {"Tottenham Hotspur", "Tottenham"},
        {"Newcastle United", "Newcastle"},
    };
    return aliases;
}

struct ParsedRow {
    TeamSeasonRecord record;
    bool profit_empty = false;
    bool expenditure_empty = false;
};

ParsedRow parse_base_fields(const std::vector<std::string_view>& f, std::size_t offset,
                            int row, const ParseOptions& opts) {
    ParsedRow out;
    TeamSeasonRecord& r = out.record;
    r.team = canonical_team_name(f[offset + 0]);
    if (r.team.empty()) {
        throw MalformedRow("row " + std::to_string(row) + ": empty team name");
    }
    r.position = parse_int_field(f[offset + 1], "position", row);
    r.points = parse_int_field(f[offset + 2], "points", row);
    r.ratio = parse_real_field(f[offset + 3], "ratio", row);
    r.player_spend = parse_real_field(f[offset + 4], "player_spend", row);
    r.foreign_spend = parse_real_field(f[offset + 5], "foreign_spend", row);

    if (opts.allow_partial && f[offset + 6].empty()) {
        out.profit_empty = true;
        r.profit = std::numeric_limits<double>::quiet_NaN();
    } else {
        r.profit = parse_real_field(f[offset + 6], "profit", row);
    }
    if (opts.allow_partial && f[offset + 7].empty()) {
        out.expenditure_empty = true;
        r.expenditure = std::numeric_limits<double>::quiet_NaN();
    } else {
        r.expenditure = parse_real_field(f[offset + 7], "expenditure", row);
    }

    if (r.points < 0) {
        throw InvariantViolation("row " + std::to_string(row) + ": negative points");
    }
    if (r.ratio < 0 || r.player_spend < 0 || r.foreign_spend < 0 ||
        (!out.expenditure_empty && r.expenditure < 0)) {
        throw InvariantViolation("row " + std::to_string(row) +
                                 ": negative value in a non-negative column");
    }
    if (r.foreign_spend > r.player_spend + kSpendTolerance) {
        throw InvariantViolation(
            "row " + std::to_string(row) + " (" + r.team + "): foreign_spend " +
            format_double(r.foreign_spend) + " exceeds player_spend " +
            format_double(r.player_spend));
    }
    return out;
}

void check_rank_columns(const std::vector<std::vector<int>>& columns) {
    for (const auto& col : columns) {
        std::vector<int> sorted = col;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < SeasonTable::kTeamCount; ++i) {
            if (sorted[static_cast<std::size_t>(i)] != i + 1) {
                throw InvariantViolation("rank column is not a permutation of 1..20");
            }
        }
    }
}

}  // namespace

std::string_view to_string(Descriptor d) {
    switch (d) {
        case Descriptor::Points: return "points";
        case Descriptor::Ratio: return "ratio";
        case Descriptor::PlayerSpend: return "player_spend";
        case Descriptor::ForeignSpend: return "foreign_spend";
        case Descriptor::Profit: return "profit";
        case Descriptor::Expenditure: return "expenditure";
    }
    return "unknown";
}

std::optional<Descriptor> descriptor_from_string(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "points" || lower == "pts") return Descriptor::Points;
    if (lower == "ratio") return Descriptor::Ratio;
    if (lower == "player_spend" || lower == "playerspend" || lower == "player-spend")
        return Descriptor::PlayerSpend;
    if (lower == "foreign_spend" || lower == "foreignspend" || lower == "foreign-spend")
        return Descriptor::ForeignSpend;
    if (lower == "profit" || lower == "profits") return Descriptor::Profit;
    if (lower == "expenditure" || lower == "exp") return Descriptor::Expenditure;
    return std::nullopt;
}

double TeamSeasonRecord::descriptor(Descriptor d) const {
    switch (d) {
        case Descriptor::Points: return static_cast<double>(points);
        case Descriptor::Ratio: return ratio;
        case Descriptor::PlayerSpend: return player_spend;
        case Descriptor::ForeignSpend: return foreign_spend;
        case Descriptor::Profit: return profit;
        case Descriptor::Expenditure: return expenditure;
    }
    return 0.0;
}

std::string canonical_team_name(std::string_view name) {
    // Trim surrounding spaces, collapse nothing else; then apply aliases.
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    auto it = alias_map().find(name);
    if (it != alias_map().end()) return std::string(it->second);
    return std::string(name);
}

SeasonTable::SeasonTable(std::string season, std::vector<TeamSeasonRecord> records,
                         std::vector<Descriptor> absent)
    : season_(std::move(season)), records_(std::move(records)), absent_(std::move(absent)) {
    if (records_.size() != kTeamCount) {
        throw WrongRowCount(season_ + ": expected 20 rows, got " +
                            std::to_string(records_.size()));
    }
    for (Descriptor d : absent_) {
        if (d != Descriptor::Profit && d != Descriptor::Expenditure) {
            throw InvariantViolation(season_ + ": only profit/expenditure may be absent");
        }
    }
    std::sort(records_.begin(), records_.end(),
              [](const TeamSeasonRecord& a, const TeamSeasonRecord& b) {
                  return a.position < b.position;
              });
    for (int i = 0; i < kTeamCount; ++i) {
        if (records_[static_cast<std::size_t>(i)].position != i + 1) {
            throw InvariantViolation(season_ + ": positions are not a permutation of 1..20");
        }
    }
    for (std::size_t i = 0; i + 1 < records_.size(); ++i) {
        if (records_[i].points < records_[i + 1].points) {
            throw InvariantViolation(season_ + ": points increase from position " +
                                     std::to_string(i + 1) + " to " + std::to_string(i + 2));
        }
    }
    std::vector<std::string_view> names;
    names.reserve(records_.size());
    for (const auto& r : records_) names.push_back(r.team);
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
        throw InvariantViolation(season_ + ": duplicate team name");
    }
}

const TeamSeasonRecord& SeasonTable::at_position(int position) const {
    if (position < 1 || position > kTeamCount) {
        throw UsageError("position " + std::to_string(position) + " out of 1..20");
    }
    return records_[static_cast<std::size_t>(position - 1)];
}

const TeamSeasonRecord* SeasonTable::find_team(std::string_view team) const {
    std::string canonical = canonical_team_name(team);
    for (const auto& r : records_) {
        if (r.team == canonical) return &r;
    }
    return nullptr;
}

bool SeasonTable::column_present(Descriptor d) const noexcept {
    return std::find(absent_.begin(), absent_.end(), d) == absent_.end();
}

std::vector<double> descriptor_column(const SeasonTable& table, Descriptor d) {
    if (!table.column_present(d)) {
        throw AbsentColumn(table.season() + ": " + std::string(to_string(d)) +
                           " column unavailable for this partial season");
    }
    std::vector<double> out;
    out.reserve(table.records().size());
    for (const auto& r : table.records()) out.push_back(r.descriptor(d));
    return out;
}

Corpus::Corpus(std::vector<SeasonTable> seasons) : seasons_(std::move(seasons)) {
    std::sort(seasons_.begin(), seasons_.end(),
              [](const SeasonTable& a, const SeasonTable& b) { return a.season() < b.season(); });
    for (std::size_t i = 0; i + 1 < seasons_.size(); ++i) {
        if (seasons_[i].season() == seasons_[i + 1].season()) {
            throw InvariantViolation("duplicate season " + seasons_[i].season());
        }
    }
}

const SeasonTable* Corpus::find(std::string_view season) const {
    for (const auto& t : seasons_) {
        if (t.season() == season) return &t;
    }
    return nullptr;
}

const SeasonTable& Corpus::at(std::string_view season) const {
    const SeasonTable* t = find(season);
    if (t == nullptr) {
        throw UsageError("unknown season '" + std::string(season) + "'");
    }
    return *t;
}

SeasonTable parse_season_csv(std::string_view text, std::string_view season_label,
                             const ParseOptions& opts) {
    std::size_t eol = text.find('\n');
    std::string_view header = text.substr(0, eol == std::string_view::npos ? text.size() : eol);
    if (!header.empty() && header.back() == '\r') header.remove_suffix(1);

    bool extended = false;
    std::size_t offset = 0;
    std::size_t fields = 8;
    if (header == kBaseHeader) {
        // base schema
    } else if (header == kRankHeader) {
        extended = true;
        offset = 6;  // position leads the record block in the extended layout
        fields = 13;
    } else {
        throw MalformedRow("unrecognized header '" + std::string(header) + "'");
    }

    std::vector<TeamSeasonRecord> records;
    std::vector<std::vector<int>> rank_columns(5);
    int profit_empty = 0;
    int expenditure_empty = 0;

    std::size_t pos = eol == std::string_view::npos ? text.size() : eol + 1;
    int row = 1;
    while (pos < text.size()) {
        std::size_t next = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
        pos = next == std::string_view::npos ? text.size() : next + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        auto f = split_csv(line);
        if (f.size() != fields) {
            throw MalformedRow("row " + std::to_string(row) + ": expected " +
                               std::to_string(fields) + " fields, got " +
                               std::to_string(f.size()));
        }
        ParsedRow parsed;
        if (extended) {
            // rank columns first, then position,team, then values; reorder to
            // the base layout (team first) for the shared field parser.
            std::vector<std::string_view> base = {f[6], f[5],  f[7],  f[8],
                                                  f[9], f[10], f[11], f[12]};
            parsed = parse_base_fields(base, 0, row, opts);
            for (int c = 0; c < 5; ++c) {
                rank_columns[static_cast<std::size_t>(c)].push_back(
                    parse_int_field(f[static_cast<std::size_t>(c)], "rank", row));
            }
        } else {
            parsed = parse_base_fields(f, 0, row, opts);
        }
        profit_empty += parsed.profit_empty ? 1 : 0;
        expenditure_empty += parsed.expenditure_empty ? 1 : 0;
        records.push_back(std::move(parsed.record));
        ++row;
    }

    if (records.size() != SeasonTable::kTeamCount) {
        throw WrongRowCount(std::string(season_label) + ": expected 20 rows, got " +
                            std::to_string(records.size()));
    }
    if (extended) check_rank_columns(rank_columns);

    // A partial column must be empty for every team or none.
    std::vector<Descriptor> absent;
    if (profit_empty > 0) {
        if (profit_empty != SeasonTable::kTeamCount) {
            throw MalformedRow("profit column is partially filled");
        }
        absent.push_back(Descriptor::Profit);
    }
    if (expenditure_empty > 0) {
        if (expenditure_empty != SeasonTable::kTeamCount) {
            throw MalformedRow("expenditure column is partially filled");
        }
        absent.push_back(Descriptor::Expenditure);
    }
    return SeasonTable(std::string(season_label), std::move(records), std::move(absent));
}

std::string serialize_season_csv(const SeasonTable& table) {
    std::string out(kBaseHeader);
    out += '\n';
    for (const auto& r : table.records()) {
        out += r.team;
        out += ',';
        out += std::to_string(r.position);
        out += ',';
        out += std::to_string(r.points);
        out += ',';
        out += format_double(r.ratio);
        out += ',';
        out += format_double(r.player_spend);
        out += ',';
        out += format_double(r.foreign_spend);
        out += ',';
        out += table.column_present(Descriptor::Profit) ? format_double(r.profit) : "";
        out += ',';
        out += table.column_present(Descriptor::Expenditure) ? format_double(r.expenditure) : "";
        out += '\n';
    }
    return out;
}

std::string season_file_tag(std::string_view season_label) {
    std::string tag(season_label);
    std::replace(tag.begin(), tag.end(), '/', '_');
    return tag;
}

std::optional<std::string> season_label_from_filename(std::string_view filename) {
    // epl_YYYY_YY.csv -> "YYYY/YY"
    constexpr std::string_view prefix = "epl_";
    constexpr std::string_view suffix = ".csv";
    if (filename.size() != prefix.size() + 7 + suffix.size()) return std::nullopt;
    if (filename.substr(0, prefix.size()) != prefix) return std::nullopt;
    if (filename.substr(filename.size() - suffix.size()) != suffix) return std::nullopt;
    std::string_view tag = filename.substr(prefix.size(), 7);
    if (tag[4] != '_') return std::nullopt;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u}) {
        if (!std::isdigit(static_cast<unsigned char>(tag[i]))) return std::nullopt;
    }
    std::string label(tag);
    label[4] = '/';
    return label;
}

Corpus load_corpus_dir(const std::filesystem::path& dir, const ParseOptions& opts) {
    if (!std::filesystem::is_directory(dir)) {
        throw UsageError("data directory '" + dir.string() + "' does not exist");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() &&
            season_label_from_filename(entry.path().filename().string())) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<SeasonTable> seasons;
    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        auto label = season_label_from_filename(path.filename().string());
        seasons.push_back(parse_season_csv(buf.str(), *label, opts));
    }
    return Corpus(std::move(seasons));
}

}  // namespace leaguestats
