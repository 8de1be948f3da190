#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "leaguestats/ranking.hpp"
#include "leaguestats/report.hpp"
#include "leaguestats/svg.hpp"

using namespace leaguestats;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

RunResult invoke(const ReportRequest& request) {
    std::ostringstream out;
    std::ostringstream err;
    RunResult result;
    result.status = run(request, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::filesystem::path fresh_dir(const char* name) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("emit_svg is byte-deterministic with the fixed viewport") {
    std::vector<SvgSeries> series(1);
    series[0].name = "gini";
    for (int i = 0; i < 8; ++i) {
        series[0].points.emplace_back(static_cast<double>(i), 0.3 + 0.02 * i);
    }
    SvgOptions options;
    options.x_labels = {"2009/10", "2010/11", "2011/12", "2012/13",
                        "2013/14", "2014/15", "2015/16", "2016/17"};
    std::string a = emit_svg(series, options);
    std::string b = emit_svg(series, options);
    CHECK(a == b);
    CHECK(a.find("width=\"800\" height=\"600\"") != std::string::npos);
    CHECK(a.find("2009/10") != std::string::npos);
    CHECK(a.find("2016/17") != std::string::npos);

    // 8 vertices in the polyline: 8 "x,y" pairs separated by 7 spaces.
    std::size_t start = a.find("points=\"");
    REQUIRE(start != std::string::npos);
    std::size_t end = a.find('"', start + 8);
    std::string pts = a.substr(start + 8, end - start - 8);
    CHECK(std::count(pts.begin(), pts.end(), ',') == 8);
    CHECK(std::count(pts.begin(), pts.end(), ' ') == 7);
}

TEST_CASE("emit_svg draws the unit diagonal for a constant-share Lorenz curve") {
    LorenzCurve diagonal;
    for (int k = 0; k <= 4; ++k) {
        diagonal.points.push_back({0.25 * k, 0.25 * k});
    }
    std::string svg = emit_svg(diagonal);
    // plot area corners: (70,550) bottom-left, (630,40) top-right
    CHECK(svg.find("70,550") != std::string::npos);
    CHECK(svg.find("630,40") != std::string::npos);

    CHECK_THROWS_AS(emit_svg(std::vector<SvgSeries>{}), EmptySeries);
    std::vector<SvgSeries> empty_points(1);
    CHECK_THROWS_AS(emit_svg(empty_points), EmptySeries);
}

TEST_CASE("run validates requests before computing") {
    ReportRequest bad_season;
    bad_season.command = Command::Pca;
    bad_season.season = "unknown/yy";
    RunResult r = invoke(bad_season);
    CHECK(r.status == 2);
    CHECK(r.err.find("--season") != std::string::npos);
    CHECK(r.out.empty());

    ReportRequest pair_on_pca;
    pair_on_pca.command = Command::Pca;
    pair_on_pca.pair = std::make_pair(Descriptor::Points, Descriptor::Profit);
    CHECK(invoke(pair_on_pca).status == 2);

    ReportRequest same_pair;
    same_pair.command = Command::Overlap;
    same_pair.pair = std::make_pair(Descriptor::Profit, Descriptor::Profit);
    r = invoke(same_pair);
    CHECK(r.status == 2);
    CHECK(r.err.find("--pair") != std::string::npos);

    ReportRequest svg_rerank;
    svg_rerank.command = Command::Rerank;
    svg_rerank.format = OutputFormat::Svg;
    r = invoke(svg_rerank);
    CHECK(r.status == 2);
    CHECK(r.err.find("--format") != std::string::npos);

    ReportRequest missing_dir;
    missing_dir.command = Command::Correlation;
    missing_dir.input_dir = "/nonexistent/leaguestats-data";
    r = invoke(missing_dir);
    CHECK(r.status == 2);
    CHECK(r.err.find("--input") != std::string::npos);
}

TEST_CASE("run reports data errors with the module error name") {
    std::filesystem::path dir = fresh_dir("leaguestats_bad_data");
    {
        std::ofstream f(dir / "epl_2009_10.csv", std::ios::binary);
        f << "team,position,points,ratio,player_spend,foreign_spend,profit,expenditure\n";
        f << "Chelsea,1,86,2.4444,21.8,21.8,-70.437,257.727\n";  // 19 rows short
    }
    ReportRequest request;
    request.command = Command::Rerank;
    request.input_dir = dir;
    RunResult r = invoke(request);
    CHECK(r.status == 1);
    CHECK(r.err.rfind("WrongRowCount", 0) == 0);
}

TEST_CASE("rerank command output re-parses and matches the library") {
    ReportRequest request;
    request.command = Command::Rerank;
    request.season = "2009/10";
    RunResult r = invoke(request);
    REQUIRE(r.status == 0);

    const SeasonTable& t = load_embedded_corpus().at("2009/10");
    CHECK(r.out == rerank_table_csv(t, rerank_all(t)));

    SeasonTable reparsed = parse_season_csv(r.out, "2009/10");
    CHECK(serialize_season_csv(reparsed) == serialize_season_csv(t));
}

TEST_CASE("rerank all seasons gains a season column") {
    ReportRequest request;
    request.command = Command::Rerank;
    RunResult r = invoke(request);
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("season,expense_rank", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 8 * 20);
}

TEST_CASE("overlap command emits the published matrix layout") {
    ReportRequest request;
    request.command = Command::Overlap;
    RunResult r = invoke(request);
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("season,ratio,player_spend,foreign_spend,profit,expenditure\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);

    ReportRequest pair;
    pair.command = Command::Overlap;
    pair.season = "2009/10";
    pair.pair = std::make_pair(Descriptor::Points, Descriptor::Profit);
    pair.format = OutputFormat::Json;
    RunResult rp = invoke(pair);
    REQUIRE(rp.status == 0);
    nlohmann::json j = nlohmann::json::parse(rp.out);
    CHECK(j["season"] == "2009/10");
    CHECK(j["overlap"].get<double>() + j["non_overlap"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("inequality command: lorenz csv for a season+descriptor, json elsewhere") {
    ReportRequest request;
    request.command = Command::Inequality;
    request.season = "2009/10";
    request.descriptor = Descriptor::Expenditure;
    RunResult r = invoke(request);
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("p,L\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 22);

    ReportRequest json_request;
    json_request.command = Command::Inequality;
    json_request.format = OutputFormat::Json;
    RunResult rj = invoke(json_request);
    REQUIRE(rj.status == 0);
    nlohmann::json j = nlohmann::json::parse(rj.out);
    CHECK(j.is_array());
    CHECK(j.size() == 8);
}

TEST_CASE("correlation and pca commands succeed on the embedded corpus") {
    ReportRequest correlation;
    correlation.command = Command::Correlation;
    RunResult rc = invoke(correlation);
    REQUIRE(rc.status == 0);
    CHECK(std::count(rc.out.begin(), rc.out.end(), '\n') == 9);

    ReportRequest pca_request;
    pca_request.command = Command::Pca;
    pca_request.season = "2012/13";
    RunResult rp = invoke(pca_request);
    REQUIRE(rp.status == 0);
    CHECK(rp.out.rfind("variable,", 0) == 0);

    ReportRequest pca_svg;
    pca_svg.command = Command::Pca;
    pca_svg.format = OutputFormat::Svg;
    CHECK(invoke(pca_svg).status == 2);
}

TEST_CASE("run writes to --out and is byte-deterministic") {
    std::filesystem::path dir = fresh_dir("leaguestats_out");
    ReportRequest request;
    request.command = Command::Correlation;
    request.format = OutputFormat::Svg;
    request.output_path = dir / "correlation.svg";
    REQUIRE(invoke(request).status == 0);
    ReportRequest second = request;
    second.output_path = dir / "correlation2.svg";
    REQUIRE(invoke(second).status == 0);

    std::ifstream a(dir / "correlation.svg", std::ios::binary);
    std::ifstream b(dir / "correlation2.svg", std::ios::binary);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().find("<svg") == 0);
}

TEST_CASE("reproduce passes every oracle on the embedded corpus") {
    std::filesystem::path dir = fresh_dir("leaguestats_reproduce_unit");
    ReproduceSummary summary = reproduce(load_embedded_corpus(), dir);

    CHECK(summary.rank_comparisons.size() == 8);
    CHECK(summary.pca_comparisons.size() == 7);
    CHECK(summary.oracles_pass());
    CHECK(summary.profit_column_row_max);
    CHECK(summary.table2_mad <= 0.15);
    CHECK(summary.profit_correlation_positive_2015_16);
    CHECK(summary.lowest_correlations_2015_16);

    for (const auto& name : summary.artifacts) {
        CHECK(std::filesystem::exists(dir / name));
    }
    std::string text = summary_text(summary);
    CHECK(text.find("rerank 2009/10: PASS") != std::string::npos);
    CHECK(text.find("pca pc1 2016/17: PASS") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("a perturbed value fails exactly the affected comparisons") {
    // Crush Chelsea's 2009/10 expenditure from 257.727 to 2.0: its expense
    // rank flips from 20 to near 1 and PC1 moves well past the tolerance.
    std::string csv(embedded_season_csv("2009/10"));
    std::size_t pos = csv.find("257.727");
    REQUIRE(pos != std::string::npos);
    csv.replace(pos, 7, "2.0");

    std::vector<SeasonTable> seasons;
    for (const auto& t : load_embedded_corpus().seasons()) {
        if (t.season() == "2009/10") {
            seasons.push_back(parse_season_csv(csv, "2009/10"));
        } else {
            seasons.push_back(t);
        }
    }
    std::filesystem::path dir = fresh_dir("leaguestats_reproduce_perturbed");
    ReproduceSummary summary = reproduce(Corpus(std::move(seasons)), dir);

    for (const auto& cmp : summary.rank_comparisons) {
        CHECK(cmp.pass == (cmp.name != "rerank 2009/10"));
    }
    for (const auto& cmp : summary.pca_comparisons) {
        CHECK(cmp.pass == (cmp.name != "pca pc1 2009/10"));
    }
    CHECK_FALSE(summary.oracles_pass());
}

TEST_CASE("reproduce via run() honors --out") {
    std::filesystem::path dir = fresh_dir("leaguestats_reproduce_run");
    ReportRequest request;
    request.command = Command::Reproduce;
    request.output_path = dir;
    RunResult r = invoke(request);
    CHECK(r.status == 0);
    CHECK(r.out.find("rerank 2016/17: PASS") != std::string::npos);
    CHECK(std::filesystem::exists(dir / "summary.txt"));
    CHECK(std::filesystem::exists(dir / "nonoverlap.csv"));
    CHECK(std::filesystem::exists(dir / "correlation.svg"));

    ReportRequest with_season = request;
    with_season.season = "2009/10";
    CHECK(invoke(with_season).status == 2);
}
