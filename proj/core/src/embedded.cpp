#include <algorithm>
#include <string_view>
#include <vector>

#include "leaguestats/corpus.hpp"

namespace leaguestats {
namespace detail {

struct EmbeddedFile {
    const char* name;
    const char* text;
};

#include "embedded_data.inc"

std::string_view embedded_reference_file(std::string_view name) {
    for (const auto& f : k_reference_files) {
        if (name == f.name) return f.text;
    }
    throw InvariantViolation("embedded reference file '" + std::string(name) + "' missing");
}

}  // namespace detail

std::string_view embedded_season_csv(std::string_view season_label) {
    std::string expected = "epl_" + season_file_tag(season_label) + ".csv";
    for (const auto& f : detail::k_season_files) {
        if (expected == f.name) return f.text;
    }
    throw UsageError("no embedded season '" + std::string(season_label) + "'");
}

const Corpus& load_embedded_corpus() {
    static const Corpus corpus = [] {
        std::vector<SeasonTable> seasons;
        for (const auto& f : detail::k_season_files) {
            auto label = season_label_from_filename(f.name);
            if (!label) {
                throw InvariantViolation(std::string("bad embedded file name ") + f.name);
            }
            seasons.push_back(parse_season_csv(f.text, *label));
        }
        if (seasons.size() != 8) {
            throw InvariantViolation("embedded corpus must hold exactly 8 seasons");
        }
        return Corpus(std::move(seasons));
    }();
    return corpus;
}

}  // namespace leaguestats
