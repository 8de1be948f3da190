#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "leaguestats/corpus.hpp"

namespace leaguestats {

enum class Command { Rerank, Inequality, Overlap, Correlation, Pca, Reproduce };
enum class OutputFormat { Csv, Json, Svg };

struct ReportRequest {
    Command command = Command::Reproduce;
    std::optional<std::string> season;       // absent = all seasons
    std::optional<Descriptor> descriptor;
    std::optional<std::pair<Descriptor, Descriptor>> pair;
    std::optional<std::filesystem::path> input_dir;  // absent = embedded corpus
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::filesystem::path> output_path;  // absent = stdout
    bool allow_partial = false;
};

// Validates the request, runs the command, writes the artifact. Returns the
// process exit status: 0 success, 1 data error, 2 usage error. Diagnostics
// go to `err` (one line, naming the offending flag for usage errors; module
// error names verbatim for data errors).
int run(const ReportRequest& request, std::ostream& out, std::ostream& err);

// Resolves the corpus for a request: --input directory if given, else the
// LEAGUESTATS_DATA environment directory, else the embedded corpus.
Corpus resolve_corpus(const ReportRequest& request);

struct OracleComparison {
    std::string name;
    bool pass = false;
    double max_abs_deviation = 0.0;
};

struct ReproduceSummary {
    std::vector<OracleComparison> rank_comparisons;  // one per season, exact
    std::vector<OracleComparison> pca_comparisons;   // PC1 vs published, |d| <= 0.02
    double table2_mad = 0.0;             // vs the published non-overlap matrix
    bool profit_column_row_max = false;  // profit is the row max every season
    bool profit_correlation_positive_2015_16 = false;
    bool lowest_correlations_2015_16 = false;
    std::vector<std::string> artifacts;  // files written, in order

    bool oracles_pass() const;  // every rank and PCA comparison
};

// Regenerates every table derived from the corpus into out_dir (rank tables,
// inequality series, non-overlap matrix, correlation matrix, PCA tables,
// SVG charts) and compares the results against the published reference
// values.
ReproduceSummary reproduce(const Corpus& corpus, const std::filesystem::path& out_dir);

// Fixed-order human-readable PASS/FAIL report of a reproduce run.
std::string summary_text(const ReproduceSummary& summary);

}  // namespace leaguestats
