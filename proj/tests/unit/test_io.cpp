#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "surflines/catalog/catalog.hpp"
#include "surflines/incidence/incidence.hpp"
#include "surflines/io/json.hpp"

using namespace surflines;

namespace {
const std::string data_dir = SURFLINES_DATA_DIR;
}

TEST(Json, CycloNumRoundTripProperty) {
    std::mt19937_64 rng(3);
    for (std::uint32_t m : {2U, 6U, 8U, 12U}) {
        for (int i = 0; i < 50; ++i) {
            const auto x = gen::random_cyclo(rng, m);
            const auto back = io::cyclo_from_json(io::parse_document(io::cyclo_to_json(x).dump(), "test"));
            EXPECT_EQ(back, x);
        }
    }
}

TEST(Json, CycloNumWireFormat) {
    const auto j = io::cyclo_to_json(CycloNum::zeta(6) * Rational(BigInt(-1), BigInt(2)));
    EXPECT_EQ(j.dump(), R"({"coeffs":["0","-1/2"],"m":6})");
    EXPECT_THROW(io::cyclo_from_json(nlohmann::json::parse(R"({"m":0,"coeffs":[]})")), io::FormatError);
    EXPECT_THROW(io::cyclo_from_json(nlohmann::json::parse(R"({"m":6,"coeffs":["x"]})")), io::FormatError);
}

TEST(Json, ArrangementRoundTrip) {
    const auto arr = fermat_lines(3);
    const auto back = io::arrangement_from_json(io::arrangement_to_json(arr));
    ASSERT_EQ(back.size(), arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) EXPECT_EQ(back[i], arr[i]);
    EXPECT_EQ(back.labels(), arr.labels());
    EXPECT_EQ(profile_from_arrangement(back), fermat_profile(3));
}

TEST(Json, ProfileSchema) {
    const auto schur = io::load_custom_profile(data_dir + "/schur.json");
    EXPECT_EQ(schur, schur_profile());
    EXPECT_EQ(io::profile_to_json(schur).dump(), R"({"d":64,"n":4,"t":{"2":336,"3":64,"4":8}})");
    EXPECT_EQ(io::profile_from_json(io::profile_to_json(fermat_profile(7))), fermat_profile(7));

    const auto wrong = io::load_custom_profile(data_dir + "/schur_192.json");
    EXPECT_FALSE(valency_consistent(wrong, 18));
}

TEST(Json, ProfileValidationNamesTheConstraint) {
    auto load = [](const char* text) { return io::profile_from_json(nlohmann::json::parse(text)); };
    try {
        load(R"({"n":4,"d":65,"t":{}})");
        FAIL() << "expected rejection";
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("n(7n - 12)"), std::string::npos);
    }
    try {
        load(R"({"n":4,"d":3,"t":{"2":4}})");
        FAIL() << "expected rejection";
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("pair-count feasibility"), std::string::npos);
    }
    EXPECT_THROW(load(R"({"n":4,"t":{}})"), io::FormatError);
    EXPECT_THROW(load(R"({"n":4,"d":3,"t":{"two":1}})"), io::FormatError);
    EXPECT_THROW(io::parse_document("{not json", "inline"), io::FormatError);
}

TEST(Json, LinesFiles) {
    const auto skew = io::load_custom_lines(data_dir + "/two_skew_lines.json");
    EXPECT_EQ(skew.size(), 2U);
    EXPECT_TRUE(singular_points(skew).empty());
    try {
        io::load_custom_lines(data_dir + "/repeated_line.json");
        FAIL() << "expected rejection";
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("distinctness"), std::string::npos);
    }
    EXPECT_THROW(io::load_custom_lines(data_dir + "/missing.json"), io::FormatError);
}

TEST(Json, ReportCarriesExactAndDecimal) {
    const auto j = io::report_to_json(analyze(schur_profile()), 3, RoundingMode::truncate);
    EXPECT_EQ(j["h_linear"]["exact"], "-128/51");
    EXPECT_EQ(j["h_linear"]["decimal"], "-2.509");
    EXPECT_EQ(j["main_bound"]["exact"], "-155/51");
    EXPECT_EQ(j["miyaoka"]["lhs"], -144);
    EXPECT_EQ(j["miyaoka"]["status"], "holds");

    const auto cubic = io::report_to_json(analyze(cubic_profile(18)), 3, RoundingMode::truncate);
    EXPECT_TRUE(cubic["main_bound"].is_null());
    EXPECT_EQ(cubic["miyaoka"]["status"], "inapplicable");
}
