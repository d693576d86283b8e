#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spectrec/cli.hpp"

using namespace spectrec;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(SPECTREC_GOLDEN_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data(const std::string& rel) { return std::string(SPECTREC_DATA_DIR) + "/" + rel; }

}  // namespace

TEST(Cli, GoldenAutMcL) {
    auto r = run({"recognize", "--target", "aut-mcl"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden("aut-mcl.txt"));
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, GoldenAutJ2) {
    auto r = run({"recognize", "--target", "aut-j2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden("aut-j2.txt"));
}

TEST(Cli, GoldenGk) {
    auto r = run({"gk", "--mu", "8,10,11,12"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden("gk-aut-m12.txt"));
    EXPECT_NE(r.out.find("COMPONENTS 2: {2,3,5} {11}"), std::string::npos);
}

TEST(Cli, ExpectSurvivors) {
    EXPECT_EQ(run({"recognize", "--target", "aut-j2", "--expect", "J2,A8"}).code, 0);
    auto miss = run({"recognize", "--target", "aut-j2", "--expect", "J2"});
    EXPECT_EQ(miss.code, 3);
    EXPECT_FALSE(miss.err.empty());
    EXPECT_EQ(run({"recognize", "--target", "aut-mcl", "--expect", "McL"}).code, 0);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"spectrum"}).code, 4);
    EXPECT_EQ(run({}).code, 4);
    EXPECT_EQ(run({"frobnicate"}).code, 4);
    EXPECT_EQ(run({"gk"}).code, 4);
    EXPECT_EQ(run({"recognize", "--target", "aut-mcl", "--format", "xml"}).code, 4);
    EXPECT_EQ(run({"recognize"}).code, 4);
    EXPECT_EQ(run({"spectrum", "--generators", data("generators/a5.gens"), "--method", "sample", "--samples", "10"})
                  .code,
              4);
}

TEST(Cli, ValidationErrors) {
    EXPECT_EQ(run({"gk", "--mu", "4,8"}).code, 1);
    EXPECT_EQ(run({"recognize", "--mu", "1"}).code, 1);
    EXPECT_EQ(run({"recognize", "--target", "aut-xyz"}).code, 1);
    EXPECT_EQ(run({"--catalog", "/nonexistent.json", "catalog"}).code, 1);
    EXPECT_EQ(run({"spectrum", "--generators", "/nonexistent.gens", "--method", "exhaustive"}).code, 1);
}

TEST(Cli, CapExceeded) {
    auto r = run({"spectrum", "--generators", data("generators/m12.gens"), "--method", "exhaustive", "--cap", "1000"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, SpectrumExhaustiveAndSample) {
    auto r = run({"spectrum", "--generators", data("generators/aut-m12.gens"), "--method", "exhaustive"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("ORDER 190080\n"), std::string::npos);
    EXPECT_NE(r.out.find("MU 8,10,11,12\n"), std::string::npos);
    auto s1 = run({"spectrum", "--generators", data("generators/a6.gens"), "--method", "sample", "--samples", "500",
                   "--seed", "5", "--format", "json"});
    auto s2 = run({"spectrum", "--generators", data("generators/a6.gens"), "--method", "sample", "--samples", "500",
                   "--seed", "5", "--format", "json"});
    EXPECT_EQ(s1.code, 0);
    EXPECT_EQ(s1.out, s2.out);
    auto j = nlohmann::json::parse(s1.out);
    EXPECT_EQ(j["mu"], nlohmann::json::parse("[3,4,5]"));
}

TEST(Cli, CosetOrder) {
    auto r = run({"coset-order", "--matrix", data("modules/m12-10-8a-1.mat"), "--m", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("COSET contains order 16"), std::string::npos);
    auto bad = run({"coset-order", "--matrix", data("modules/m12-10-8a-1.mat"), "--m", "3"});
    EXPECT_EQ(bad.code, 1);
}

TEST(Cli, CatalogQueries) {
    auto r = run({"catalog", "--max-prime", "7", "--required-prime", "7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("RECORDS 15\n", 0), 0u);
    auto j = run({"catalog", "--record", "McL", "--format", "json"});
    EXPECT_EQ(j.code, 0);
    EXPECT_EQ(nlohmann::json::parse(j.out)[0]["order"], "898128000");
}

TEST(Cli, JsonReport) {
    auto r = run({"recognize", "--target", "aut-j2", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["survivors"].size(), 2u);
    EXPECT_EQ(j["pool"]["candidates"].size(), 15u);
}

TEST(Cli, ByteStable) {
    auto a = run({"recognize", "--mu", "4,5,6", "--all-rules"});
    auto b = run({"recognize", "--mu", "4,5,6", "--all-rules"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}
