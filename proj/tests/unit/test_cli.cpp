#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "surflines/catalog/catalog.hpp"
#include "surflines/cli/parse.hpp"
#include "surflines/harbourne/harbourne.hpp"

using namespace surflines;

namespace {

const std::string data_dir = SURFLINES_DATA_DIR;

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "surflines");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream cells_in(line);
        std::string cell;
        while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST(Cli, AnalyzeFermatCubic) {
    const auto r = invoke({"analyze", "--surface", "fermat", "--degree", "3"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "-27/11")) << r.out;
    EXPECT_TRUE(contains(r.out, "-2.454")) << r.out;
    const auto nearest = invoke({"analyze", "--surface", "fermat", "-n", "3", "--rounding", "nearest"});
    EXPECT_TRUE(contains(nearest.out, "-2.455")) << nearest.out;
}

TEST(Cli, AnalyzeSchurJson) {
    const auto r = invoke({"analyze", "--surface", "schur", "--format", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["h_linear"]["exact"], "-128/51");
    EXPECT_EQ(j["h_linear"]["decimal"], "-2.509");
}

TEST(Cli, AnalyzeFromLinesMatchesClosedForm) {
    const auto r = invoke({"analyze", "--surface", "fermat", "--degree", "4", "--from-lines", "--format", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["h_linear"]["exact"], "-8/3");
}

TEST(Cli, SweepFermatCsv) {
    const auto r = invoke({"sweep", "--surface", "fermat", "--degrees", "3:12", "--format", "csv"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 11U);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "d", "s", "t", "h_linear", "h_linear_decimal", "miyaoka_lhs",
                                                 "miyaoka_rhs", "main_bound"}));
    Rational previous = Rational(0);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const int n = std::stoi(rows[i][0]);
        EXPECT_EQ(n, static_cast<int>(i) + 2);
        const auto h = Rational::parse(rows[i][4]);
        EXPECT_EQ(h, fermat_h_closed(n));
        EXPECT_LT(h, previous);
        EXPECT_GT(h, Rational(-3));
        previous = h;
        if (n == 3) {
            EXPECT_EQ(rows[i][6], "");
            EXPECT_EQ(rows[i][8], "");
        } else {
            EXPECT_EQ(Rational::parse(rows[i][8]), main_theorem_bound(fermat_profile(n)));
        }
    }
}

TEST(Cli, SweepIsDeterministicAcrossThreadCounts) {
    const auto a = invoke({"sweep", "--surface", "rams", "--degrees", "6:40", "--format", "csv"});
    const auto b = invoke({"sweep", "--surface", "rams", "--degrees", "6:40", "--format", "csv", "--threads", "4"});
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    const auto cubic = invoke({"sweep", "--surface", "cubic", "--format", "csv"});
    EXPECT_EQ(parse_csv(cubic.out).size(), 20U);
}

TEST(Cli, BoundRejectsCubic) {
    const auto r = invoke({"bound", "--surface", "cubic", "--eckardt", "18"});
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(contains(r.err, "Miyaoka theorem requires n >= 4")) << r.err;
}

TEST(Cli, BoundBauerProfile) {
    const auto r = invoke({"bound", "--surface", "custom", "--profile", data_dir + "/bauer.json", "--format", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["main_bound"]["exact"], "-9");
    EXPECT_EQ(j["h_linear"]["exact"], "-8");
}

TEST(Cli, AnalyzeWithoutSingularPointsFails) {
    const auto r = invoke({"analyze", "--surface", "custom", "--lines", data_dir + "/two_skew_lines.json"});
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(contains(r.err, "s = 0")) << r.err;
}

TEST(Cli, VerifyValency) {
    const auto good = invoke({"verify", "--surface", "schur", "--valency", "18"});
    EXPECT_EQ(good.status, 0) << good.out;
    const auto bad =
        invoke({"verify", "--surface", "custom", "--profile", data_dir + "/schur_192.json", "--valency", "18"});
    EXPECT_EQ(bad.status, 2);
    EXPECT_TRUE(contains(bad.out, "FAIL")) << bad.out;
}

TEST(Cli, VerifyFermatLines) {
    const auto r = invoke({"verify", "--surface", "fermat", "--degree", "3"});
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "t_2 + 3 t_3 = 135")) << r.out;
    EXPECT_FALSE(contains(r.out, "FAIL")) << r.out;
}

TEST(Cli, CatalogOutputFeedsBackAsCustomLines) {
    const std::string path = ::testing::TempDir() + "fermat4_lines.json";
    const auto written = invoke({"catalog", "--surface", "fermat", "--degree", "4", "--format", "json", "-o", path});
    ASSERT_EQ(written.status, 0) << written.err;
    EXPECT_TRUE(written.out.empty());
    const auto r = invoke({"profile", "--surface", "custom", "--lines", path, "--format", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(io::profile_from_json(nlohmann::json::parse(r.out)), fermat_profile(4));
    std::remove(path.c_str());
}

TEST(Cli, RepeatedLinesRejected) {
    const auto r = invoke({"profile", "--surface", "custom", "--lines", data_dir + "/repeated_line.json"});
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(contains(r.err, "distinctness")) << r.err;
}

TEST(Cli, SearchBauer) {
    const auto r = invoke({"search-bauer", "--surface", "fermat", "--degree", "4", "--format", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["solutions"].size(), 1U);
    EXPECT_EQ(j["solutions"][0]["h_linear"], "-8");
    EXPECT_EQ(j["solutions"][0]["profile"]["t"]["4"], 8);
    const auto schur = invoke({"search-bauer", "--surface", "schur"});
    EXPECT_EQ(schur.status, 1);
}

TEST(Cli, SearchExtremal) {
    const auto r = invoke({"search-extremal", "--degree", "4", "-d", "3", "--kmax", "3", "--format", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["candidates"][0]["h_linear"], "-9");
    EXPECT_TRUE(contains(j["caveat"].get<std::string>(), "not necessarily realized"));
    const auto over = invoke({"search-extremal", "--degree", "4", "-d", "65"});
    EXPECT_EQ(over.status, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).status, 1);
    EXPECT_EQ(invoke({"analyze", "--surface", "klein"}).status, 1);
    EXPECT_EQ(invoke({"analyze", "--surface", "fermat"}).status, 1);
    EXPECT_EQ(invoke({"sweep", "--surface", "fermat", "--degrees", "5:3"}).status, 1);
    EXPECT_EQ(invoke({"analyze", "--surface", "custom", "--profile", data_dir + "/missing.json"}).status, 1);
    EXPECT_EQ(invoke({"analyze", "--surface", "rams", "--degree", "5"}).status, 2);
    EXPECT_EQ(invoke({"--help"}).status, 0);
}
