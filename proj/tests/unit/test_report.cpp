#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vdw/errors.hpp"
#include "vdw/report.hpp"

using namespace vdw;
using vdw::report::Json;

TEST(Report, FnvReferenceVectors) {
    EXPECT_EQ(report::fnv1a(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(report::fnv1a("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(report::fnv1a("foobar"), 0x85944171f73967e8ULL);
}

TEST(Report, ConfigHashIsStable) {
    const Json a = {{"field", "Q"}, {"n", 3}, {"N", 10}};
    const Json b = Json::parse(R"({"N":10,"n":3,"field":"Q"})");
    EXPECT_EQ(report::config_hash(a), report::config_hash(b));
    EXPECT_EQ(report::config_hash(a).size(), 16u);
    EXPECT_NE(report::config_hash(a), report::config_hash({{"field", "Q"}, {"n", 3}, {"N", 11}}));
}

TEST(Report, EnvelopeCarriesProvenanceKeys) {
    const Json e = report::envelope("census", {{"n", 3}});
    for (const char* k : {"version", "command", "config", "config_hash", "guards"}) EXPECT_TRUE(e.contains(k)) << k;
    EXPECT_EQ(e["command"], "census");
    EXPECT_EQ(e["version"], report::version());
    EXPECT_FALSE(e["guards"].empty());
}

TEST(Report, CsvQuoting) {
    report::Csv c{{"f", "note"}, {{"[1,2]", "say \"hi\""}, {"x", "plain"}}};
    EXPECT_EQ(c.str(), "f,note\n\"[1,2]\",\"say \"\"hi\"\"\"\nx,plain\n");
}

TEST(Report, ShortestDecimal) {
    EXPECT_EQ(report::fmt(0.25), "0.25");
    EXPECT_EQ(report::fmt(1.0 / 3.0), "0.3333333333333333");
    EXPECT_EQ(std::stod(report::fmt(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(Report, CensusSerialization) {
    const NumberField Q = load_field("Q");
    const auto r = census(Q, {3, 1, 1});
    const Json j = report::to_json(Q, r);
    EXPECT_EQ(j["total"], 27);
    EXPECT_EQ(j["rho"], 15);
    EXPECT_EQ(j["T"]["[0]"], 9);
    EXPECT_EQ(j["T"]["[1]"], 6);
    const auto csv = report::census_csv(Q, r);
    EXPECT_EQ(csv.header, (std::vector<std::string>{"nu", "T"}));
    EXPECT_EQ(csv.rows.size(), r.T_table.size());
}

TEST(Report, WriteFile) {
    const std::string path = ::testing::TempDir() + "vdw_report_test.txt";
    report::write_file(path, "abc\n");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "abc\n");
    std::remove(path.c_str());
    const std::string nested = ::testing::TempDir() + "vdw_report_dir/a/b.txt";
    report::write_file(nested, "z");
    EXPECT_TRUE(std::ifstream(nested).good());
    std::filesystem::remove_all(::testing::TempDir() + "vdw_report_dir");
    EXPECT_THROW(report::write_file("/proc/vdw-not-writable/y.txt", "z"), ConfigError);
}
