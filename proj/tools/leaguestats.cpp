#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "leaguestats/report.hpp"

namespace {

using leaguestats::Command;
using leaguestats::Descriptor;
using leaguestats::OutputFormat;
using leaguestats::ReportRequest;

struct CliState {
    std::string season;
    std::string descriptor;
    std::string pair;
    std::string input;
    std::string format = "csv";
    std::string out;
    bool allow_partial = false;
};

void add_common_flags(CLI::App* cmd, CliState& state, bool with_out_default) {
    cmd->add_option("--season", state.season, "Season label, e.g. 2009/10 (default: all)");
    cmd->add_option("--input", state.input,
                    "Directory of epl_YYYY_YY.csv files (default: embedded data, or "
                    "$LEAGUESTATS_DATA when set)");
    cmd->add_option("--format", state.format, "Output format: csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    cmd->add_option("--out", state.out,
                    with_out_default ? "Output directory (default: reproduce)"
                                     : "Output file (default: stdout)");
    cmd->add_flag("--allow-partial", state.allow_partial,
                  "Accept seasons with empty profit/expenditure columns");
}

int fail_usage(const std::string& message) {
    std::cerr << "UsageError: " << message << '\n';
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"EPL league-table analytics: re-ranking, inequality, density overlap,\n"
                 "correlation and PCA over the 2009/10-2016/17 seasons"};
    app.require_subcommand(1);

    std::map<std::string, Command> commands = {
        {"rerank", Command::Rerank},         {"inequality", Command::Inequality},
        {"overlap", Command::Overlap},       {"correlation", Command::Correlation},
        {"pca", Command::Pca},               {"reproduce", Command::Reproduce},
    };

    CliState state;
    CLI::App* rerank = app.add_subcommand("rerank", "Descriptor rank columns per season");
    CLI::App* inequality =
        app.add_subcommand("inequality", "Gini / Theil indices and Lorenz curves");
    CLI::App* overlap = app.add_subcommand("overlap", "KDE non-overlap matrix and pairs");
    CLI::App* correlation =
        app.add_subcommand("correlation", "Points-vs-descriptor Pearson correlations");
    CLI::App* pca = app.add_subcommand("pca", "Covariance PCA loadings per season");
    CLI::App* reproduce =
        app.add_subcommand("reproduce", "Regenerate every derived table and check the results");

    for (CLI::App* cmd : {rerank, inequality, overlap, correlation, pca}) {
        add_common_flags(cmd, state, false);
    }
    add_common_flags(reproduce, state, true);
    inequality->add_option("--descriptor", state.descriptor,
                           "ratio, player_spend, foreign_spend, profit or expenditure");
    correlation->add_option("--descriptor", state.descriptor,
                            "ratio, player_spend, foreign_spend, profit or expenditure");
    overlap->add_option("--pair", state.pair,
                        "Two descriptors, comma separated, e.g. points,profit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "UsageError: " << e.what() << '\n';
        return 2;
    }

    ReportRequest request;
    request.command = commands.at(app.get_subcommands().front()->get_name());
    if (!state.season.empty()) request.season = state.season;
    if (!state.input.empty()) request.input_dir = state.input;
    if (!state.out.empty()) request.output_path = state.out;
    request.allow_partial = state.allow_partial;

    if (state.format == "csv") {
        request.format = OutputFormat::Csv;
    } else if (state.format == "json") {
        request.format = OutputFormat::Json;
    } else {
        request.format = OutputFormat::Svg;
    }

    if (!state.descriptor.empty()) {
        auto d = leaguestats::descriptor_from_string(state.descriptor);
        if (!d) return fail_usage("--descriptor: unknown descriptor '" + state.descriptor + "'");
        request.descriptor = *d;
    }
    if (!state.pair.empty()) {
        std::size_t comma = state.pair.find(',');
        if (comma == std::string::npos) {
            return fail_usage("--pair: expected two descriptors separated by a comma");
        }
        auto a = leaguestats::descriptor_from_string(state.pair.substr(0, comma));
        auto b = leaguestats::descriptor_from_string(state.pair.substr(comma + 1));
        if (!a || !b) return fail_usage("--pair: unknown descriptor in '" + state.pair + "'");
        request.pair = std::make_pair(*a, *b);
    }

    return leaguestats::run(request, std::cout, std::cerr);
}
