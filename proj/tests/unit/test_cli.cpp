#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using drg::cli::run;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / ("drg_cli_test_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(call({"check", "{7,4,1;1,2,7}"}).code, 0);
  EXPECT_EQ(call({"check", "{9,6,3;1,2,3}"}).code, 1);
  const auto bad = call({"check", "{bad}"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
  EXPECT_EQ(call({"check", "{15,8,1;1,4,15}", "--with-bcn444"}).code, 1);
  EXPECT_EQ(call({"check", "{15,8,1;1,4,15}"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"search", "--diameter", "5"}).code, 2);
  EXPECT_EQ(call({"check", "{7,4,1;1,2,7}", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"verify-graph"}).code, 2);
  EXPECT_EQ(call({"verify-graph", "--construct", "petersen", "--catalog", "a"}).code, 2);
  EXPECT_EQ(call({"verify-graph", "--construct", "nope"}).code, 2);
  EXPECT_EQ(call({"scan-case", "9-9"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, CheckJsonParses) {
  const auto r = call({"check", "{7,4,1;1,2,7}", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["array"], "{7,4,1;1,2,7}");
  EXPECT_EQ(j["feasible"], true);
}

TEST(Cli, DisableFlag) {
  const auto r = call({"check", "{9,6,3;1,2,3}", "--disable", "9", "--format", "json"});
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["criteria"]["9"]["verdict"], "n/a");
}

TEST(Cli, SpectrumText) {
  const auto r = call({"spectrum", "{15,8,1;1,4,15}"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{[15]^1, [5]^12, [-1]^15, [-3]^20}"), std::string::npos) << r.out;
}

TEST(Cli, SearchJsonEvents) {
  const auto r = call({"search", "--a1-max", "6", "--format", "json", "--workers", "1"});
  ASSERT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_FALSE(lines.empty());
  int found = 0, results = 0;
  for (const auto& l : lines) {
    found += l["event"] == "found";
    results += l["event"] == "result";
  }
  EXPECT_EQ(found, results);
  EXPECT_EQ(lines.back()["event"], "summary");
  EXPECT_EQ(lines.back()["count"], results);
}

TEST(Cli, SearchCsv) {
  const auto r = call({"search", "--a1-max", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("array,diameter,k,v,spectrum\n", 0), 0u);
  EXPECT_NE(r.out.find("\"{7,4,1;1,2,7}\",3,7,24,"), std::string::npos) << r.out;
}

TEST(Cli, ConfigDefaultsAndPrecedence) {
  const auto cfg = write_temp("cfg.json", R"({"a1_max": 3, "format": "json"})");
  const auto from_config = call({"--config", cfg.string(), "search"});
  ASSERT_EQ(from_config.code, 0) << from_config.err;
  EXPECT_EQ(json_lines(from_config.out).back()["event"], "summary");
  const auto overridden = call({"--config", cfg.string(), "search", "--format", "text"});
  ASSERT_EQ(overridden.code, 0);
  EXPECT_NE(overridden.out.find("sorted:"), std::string::npos);
  const auto bad = write_temp("bad.json", R"({"colour": "blue"})");
  EXPECT_EQ(call({"--config", bad.string(), "search"}).code, 2);
  EXPECT_EQ(call({"--config", "/nonexistent/cfg.json", "search"}).code, 2);
  fs::remove(cfg);
  fs::remove(bad);
}

TEST(Cli, VerifyGraphSources) {
  EXPECT_EQ(call({"verify-graph", "--construct", "halved_cube:6", "--no-geometric"}).code, 0);
  const auto r = call({"verify-graph", "--catalog", "perkel"});
  EXPECT_EQ(r.code, 3);
  const auto g6 = write_temp("c5.g6", "Dhc\n");
  EXPECT_EQ(call({"verify-graph", "--graph6", g6.string(), "--no-geometric"}).code, 0);
  const auto broken = write_temp("broken.g6", "Dh\n");
  EXPECT_EQ(call({"verify-graph", "--graph6", broken.string()}).code, 2);
  EXPECT_EQ(call({"verify-graph", "--graph6", "/nonexistent.g6"}).code, 3);  // missing data file
  fs::remove(g6);
  fs::remove(broken);
}

TEST(Cli, VerifyGraphJson) {
  const auto r = call({"verify-graph", "--construct", "icosahedron", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_NE(j.dump().find("{5,2,1;1,2,5}"), std::string::npos);
}

TEST(Cli, ExportRoundTrip) {
  const auto r = call({"export-graph6", "--construct", "petersen"});
  ASSERT_EQ(r.code, 0);
  const auto p = write_temp("pet.g6", r.out);
  const auto v = call({"verify-graph", "--graph6", p.string(), "--format", "json", "--no-geometric"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("{3,2;1,1}"), std::string::npos);
  fs::remove(p);
}

TEST(Cli, ScanCaseAndPairs) {
  const auto s = call({"scan-case", "6-0"});
  ASSERT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("1 survivors"), std::string::npos);
  const auto p = call({"c2one-pairs", "--format", "json"});
  ASSERT_EQ(p.code, 0);
  EXPECT_NO_THROW(json::parse(p.out));
}

TEST(Cli, ExitCodesStableAcrossWorkers) {
  for (const char* w : {"1", "2"}) EXPECT_EQ(call({"search", "--a1-max", "4", "--workers", w}).code, 0);
}
