#include <gtest/gtest.h>

#include <json.hpp>

#include "sumfree/report.hpp"

using namespace sumfree;
using nlohmann::json;

TEST(Report, DecimalDigits) {
    EXPECT_EQ(decimal_digits(128), 36);
    EXPECT_EQ(decimal_digits(256), 74);
    EXPECT_EQ(decimal_digits(16), 6);
}

TEST(Report, CensusJson) {
    const auto g = AbelianGroup::make({3});
    const auto b = census_by_min_k(g);
    const auto j = json::parse(census_json(g, b.total(), &b));
    EXPECT_EQ(j["group"], "Z/3");
    EXPECT_EQ(j["N"], 3);
    EXPECT_EQ(j["total"], "214");
    EXPECT_EQ(j["by_min_k"]["0"], "169");
    EXPECT_EQ(j["by_min_k"]["1"], "45");
    EXPECT_EQ(j["k0_formula"], "169");
    EXPECT_EQ(j["k1_formula"], "171");
    const auto plain = json::parse(census_json(g, BigCount(214)));
    EXPECT_FALSE(plain.contains("by_min_k"));
}

TEST(Report, CensusCsvAndText) {
    const auto g = AbelianGroup::make({2});
    const auto b = census_by_min_k(g);
    EXPECT_EQ(census_csv(g, b.total(), &b), "group,N,k,count\nZ/2,2,total,41\nZ/2,2,0,37\nZ/2,2,1,4\nZ/2,2,2,0\n");
    EXPECT_EQ(census_csv(g, BigCount(41)), "group,N,k,count\nZ/2,2,total,41\n");
    const auto text = census_text(g, b.total(), &b);
    EXPECT_EQ(text.rfind("group Z/2  N=2\ntotal 41\n", 0), 0u);
    EXPECT_NE(text.find("  min=0  37\n"), std::string::npos);
    EXPECT_NE(text.find("k0 formula 37\n"), std::string::npos);
}

TEST(Report, BoundJsonFields) {
    const auto b = theorem1_bounds(7);
    const auto j = json::parse(bound_report_json(b.upper));
    EXPECT_EQ(j["theorem"], "1");
    EXPECT_EQ(j["direction"], "upper");
    EXPECT_EQ(j["parameters"]["p"], "7");
    EXPECT_EQ(j["digits"], 36);
    ASSERT_EQ(j["terms"].size(), 6u);
    EXPECT_EQ(j["terms"][0]["label"], "min=0");
    EXPECT_EQ(j["terms"][0]["exponent"], "7");
    EXPECT_EQ(j["terms"][5]["asymptotic"], true);
    EXPECT_EQ(j["terms"][4]["base"], "458^(1/7)");
    EXPECT_EQ(j["terms"][0]["value_lo"], "4.91520000000000000000000000000000000e+04");

    const auto both = json::parse(bound_reports_json({b.upper, b.lower}, BigCount(85666)));
    EXPECT_EQ(both["reports"].size(), 2u);
    EXPECT_EQ(both["reports"][1]["direction"], "lower");
    EXPECT_EQ(both["exact_census"], "85666");
    EXPECT_FALSE(json::parse(bound_reports_json({b.upper}))["reports"][0].contains("exact_census"));
}

TEST(Report, BoundCsvRows) {
    const auto b = theorem1_bounds(7);
    const auto csv = bound_report_csv(b.upper);
    EXPECT_EQ(csv.rfind("direction,label,base,base_decimal,exponent,coefficient,value_lo,value_hi,asymptotic,digits\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
    EXPECT_NE(csv.find("upper,min>=4,31^(1/4),"), std::string::npos);
    const auto no_header = bound_report_csv(b.lower, false);
    EXPECT_EQ(std::count(no_header.begin(), no_header.end(), '\n'), 5);
    EXPECT_EQ(no_header.rfind("lower,min=0,4,", 0), 0u);
}

TEST(Report, BoundText) {
    const auto text = bound_report_text(theorem1_bounds(7).upper);
    EXPECT_EQ(text.rfind("theorem 1 (upper)  p=7\n", 0), 0u);
    EXPECT_NE(text.find("(1+o(1))"), std::string::npos);
    EXPECT_NE(text.find("  total"), std::string::npos);
}
