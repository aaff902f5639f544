#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sumfree/cli.hpp"
#include "sumfree/error.hpp"

using namespace sumfree;
using namespace sumfree::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CensusText) {
    const auto r = invoke({"census", "--group", "Z/3", "--breakdown", "--threads", "1"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("total 214"), std::string::npos);
    EXPECT_NE(r.out.find("min=0  169"), std::string::npos);
}

TEST(Cli, CensusFormats) {
    const auto j = invoke({"census", "--group", "Z/2xZ/2", "--format", "json"});
    EXPECT_EQ(j.code, kOk);
    EXPECT_EQ(nlohmann::json::parse(j.out)["total"], "1045");
    const auto csv = invoke({"census", "--group", "Z/1", "--format", "csv"});
    EXPECT_EQ(csv.out, "group,N,k,count\nZ/1,1,total,7\n");
}

TEST(Cli, CensusErrors) {
    EXPECT_EQ(invoke({"census", "--group", "Z/17"}).code, kCap);
    EXPECT_EQ(invoke({"census", "--group", "Z/13", "--breakdown"}).code, kCap);
    EXPECT_EQ(invoke({"census", "--group", "Z/q"}).code, kUsage);
    EXPECT_EQ(invoke({"census"}).code, kUsage);
    EXPECT_EQ(invoke({"census", "--group", "Z/3", "--format", "xml"}).code, kUsage);
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
}

TEST(Cli, HelpExitsCleanly) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE((r.out + r.err).find("census"), std::string::npos);
}

TEST(Cli, VerifySingleSuite) {
    const auto r = invoke({"verify", "--claims", "claim3"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("claim3: PASS"), std::string::npos);
}

TEST(Cli, VerifyJsonLines) {
    const auto r = invoke({"verify", "--claims", "claim6", "--format", "json"});
    EXPECT_EQ(r.code, kOk);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        EXPECT_TRUE(nlohmann::json::parse(line).is_object());
        ++n;
    }
    EXPECT_GT(n, 1u);
}

TEST(Cli, VerifyArgumentChecks) {
    EXPECT_EQ(invoke({"verify", "--claims", "supersat"}).code, kUsage);
    EXPECT_EQ(invoke({"verify"}).code, kUsage);
    EXPECT_EQ(invoke({"verify", "--claims", "claim42"}).code, kUsage);
    EXPECT_EQ(invoke({"verify", "--claims", "codegree", "--tau", "0"}).code, kUsage);
    EXPECT_EQ(invoke({"verify", "--claims", "codegree", "--tau", "1/3"}).code, kOk);
    EXPECT_EQ(invoke({"verify", "--claims", "supersat", "--seed", "3", "--trials", "300"}).code, kOk);
}

TEST(Cli, BoundsForPrimeCsv) {
    const auto r = invoke({"bounds", "--theorem", "1", "--p", "7", "--format", "csv"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("upper,min=0,4,"), std::string::npos);
    EXPECT_NE(r.out.find("lower,min=3 C4-free,a+1/a-2,"), std::string::npos);
}

TEST(Cli, BoundsJsonCarriesExactCensus) {
    const auto r = invoke({"bounds", "--theorem", "8", "--group", "Z/9", "--format", "json"});
    EXPECT_EQ(r.code, kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["exact_census"], "1389931");
    EXPECT_EQ(j["reports"].size(), 2u);
}

TEST(Cli, BoundsErrors) {
    EXPECT_EQ(invoke({"bounds", "--theorem", "2", "--p", "7"}).code, kUsage);
    EXPECT_EQ(invoke({"bounds", "--theorem", "1", "--p", "9"}).code, kUsage);
    EXPECT_EQ(invoke({"bounds", "--theorem", "1"}).code, kUsage);
    EXPECT_EQ(invoke({"bounds", "--theorem", "7", "--N", "8", "--precision-bits", "64"}).code, kUsage);
    EXPECT_EQ(invoke({"bounds", "--theorem", "7", "--N", "8"}).code, kOk);
}

TEST(Cli, LinkGraphSummary) {
    const auto heawood = invoke({"linkgraph", "--group", "Z/7", "--set", "0,1,3"});
    EXPECT_EQ(heawood.code, kOk);
    EXPECT_NE(heawood.out.find("girth 6"), std::string::npos);
    EXPECT_NE(heawood.out.find("C4 absent"), std::string::npos);
    EXPECT_NE(heawood.out.find("independent sets 458"), std::string::npos);
    const auto c4 = invoke({"linkgraph", "--group", "Z/7", "--set", "0,1,6"});
    EXPECT_NE(c4.out.find("C4 present"), std::string::npos);
    EXPECT_NE(c4.out.find("independent sets 479"), std::string::npos);
}

TEST(Cli, LinkGraphDotToFile) {
    const auto path = std::filesystem::temp_directory_path() / "sumfree_cli_test.dot";
    const auto r = invoke({"linkgraph", "--group", "Z/5", "--set", "0", "--format", "dot", "--out", path.string()});
    EXPECT_EQ(r.code, kOk);
    std::ifstream in(path);
    const std::string dot((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NE(dot.find("Y4 -- Z4;"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, LinkGraphErrors) {
    EXPECT_EQ(invoke({"linkgraph", "--group", "Z/7", "--set", "0,x"}).code, kUsage);
    EXPECT_EQ(invoke({"linkgraph", "--group", "Z/7", "--set", "9"}).code, kUsage);
    EXPECT_EQ(invoke({"linkgraph", "--group", "Z/7"}).code, kUsage);
}

TEST(Cli, ParseElementSet) {
    const auto g = AbelianGroup::make({2, 3});
    EXPECT_EQ(parse_element_set(g, "0, 4"), ElementSet(6, {0, 4}));
    EXPECT_EQ(parse_element_set(g, "1:1"), ElementSet(6, {4}));
    EXPECT_EQ(parse_element_set(g, ""), ElementSet(6));
    EXPECT_THROW(parse_element_set(g, "2:0"), InvalidInput);
    EXPECT_THROW(parse_element_set(g, "0,,1"), InvalidInput);
}

TEST(Cli, ParseRational) {
    EXPECT_EQ(parse_rational("1/4"), Rational(1, 4));
    EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
    EXPECT_EQ(parse_rational("0.5"), Rational(1, 2));
    EXPECT_THROW(parse_rational("1/0"), InvalidInput);
    EXPECT_THROW(parse_rational("abc"), InvalidInput);
}
