#include "cli/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mdim/graph_io.hpp"
#include "mdim/products.hpp"

#ifndef MDIM_GOLDEN_DIR
#error "MDIM_GOLDEN_DIR must be defined"
#endif

namespace mdim::cli {
namespace {

using nlohmann::json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliBuildTest, Counts) {
  auto r = Invoke({"build", "--family", "cylinder", "--n", "4", "--k", "3"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["command"], "build");
  EXPECT_EQ(doc["result"]["vertex_count"], 12);
  EXPECT_EQ(doc["result"]["edge_count"], 20);

  r = Invoke({"build", "--family", "prism", "--n", "4", "--k", "3", "--m", "2"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(json::parse(r.out)["result"]["vertex_count"], 24);
}

TEST(CliBuildTest, BadParametersGiveOneLineError) {
  const auto r = Invoke({"build", "--family", "cycle", "--n", "2"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_TRUE(r.out.empty());
  ASSERT_FALSE(r.err.empty());
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1);
  const auto e = json::parse(r.err);
  EXPECT_TRUE(e.contains("error"));
  EXPECT_TRUE(e.contains("message"));
}

TEST(CliBuildTest, EdgeListRoundTrip) {
  for (std::vector<std::string> args : {std::vector<std::string>{"--family", "cycle", "--n", "7"},
                                        {"--family", "path", "--k", "5"},
                                        {"--family", "cylinder", "--n", "5", "--k", "4"},
                                        {"--family", "prism", "--n", "4", "--k", "3", "--m", "3"}}) {
    args.insert(args.begin(), "build");
    args.insert(args.end(), {"--format", "edges"});
    const auto r = Invoke(args);
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto back = read_edge_list(r.out);
    std::vector<std::string> json_args(args.begin(), args.end() - 2);
    const auto doc = json::parse(Invoke(json_args).out);
    EXPECT_EQ(back.vertex_count(), doc["result"]["vertex_count"]);
    json edges = json::array();
    for (const auto& [u, v] : back.edges()) edges.push_back(json::array({u.value(), v.value()}));
    EXPECT_EQ(edges, doc["result"]["edges"]);
  }
  const auto text = Invoke({"build", "--family", "prism", "--n", "3", "--k", "3", "--m", "2", "--format", "edges"}).out;
  EXPECT_EQ(read_edge_list(text), explicit_prism(3, 3, 2).graph);
}

TEST(CliBuildTest, DotExport) {
  const auto r = Invoke({"build", "--family", "cycle", "--n", "3", "--format", "dot"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out.rfind("graph", 0), 0u);
  EXPECT_NE(r.out.find("--"), std::string::npos);
}

TEST(CliVerifyTest, Examples) {
  auto r = Invoke({"verify", "--family", "prism", "--n", "5", "--k", "4", "--m", "4", "--set", "x1^1,x3^1,x16^1,x16^4",
                "--property", "doubly"});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(json::parse(r.out)["result"]["holds"], true);

  r = Invoke({"verify", "--family", "cylinder", "--n", "5", "--k", "4", "--set", "x1,x3", "--property", "doubly"});
  EXPECT_EQ(r.code, kPropertyFails);
  const auto w = json::parse(r.out)["result"]["witness"];
  // Smallest failing pair; (x6, x11) fails with the same lambda further on.
  EXPECT_EQ(w["pair"], json({"x1", "x6"}));
  EXPECT_EQ(w["lambda"], -1);

  std::string all;
  for (int v = 1; v <= 12; ++v) all += (v > 1 ? "," : "") + std::string("x") + std::to_string(v);
  r = Invoke({"verify", "--family", "cylinder", "--n", "4", "--k", "3", "--set", all, "--property", "resolving"});
  EXPECT_EQ(r.code, kSuccess);
}

TEST(CliVerifyTest, LabelErrors) {
  EXPECT_EQ(Invoke({"verify", "--family", "cylinder", "--n", "4", "--k", "3", "--set", "x13", "--property", "resolving"})
                .code,
            kUsageError);
  EXPECT_EQ(Invoke({"verify", "--family", "prism", "--n", "4", "--k", "3", "--m", "2", "--set", "x1^3", "--property",
                 "resolving"})
                .code,
            kUsageError);
  EXPECT_EQ(Invoke({"verify", "--family", "cylinder", "--n", "4", "--k", "3", "--set", "y1", "--property", "resolving"})
                .code,
            kUsageError);
  EXPECT_EQ(Invoke({"verify", "--family", "cylinder", "--n", "4", "--k", "3", "--set", "x1", "--property", "metric"})
                .code,
            kUsageError);
}

TEST(CliSearchTest, Examples) {
  auto r = Invoke({"search", "--family", "cylinder", "--n", "3", "--k", "3", "--parameter", "beta"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["value"], 2);
  EXPECT_EQ(doc["result"]["parameter"], "metric_dimension");

  r = Invoke({"search", "--family", "prism", "--n", "3", "--k", "3", "--m", "2", "--parameter", "sdim"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(json::parse(r.out)["result"]["value"], 6);

  // Exhaustive search finds a doubly resolving set of size 3 here.
  r = Invoke({"search", "--family", "prism", "--n", "3", "--k", "3", "--m", "2", "--parameter", "psi"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["value"], 3);
  EXPECT_EQ(doc["result"]["witness"], json({"x1^(1)", "x8^(1)", "x3^(2)"}));
}

TEST(CliSearchTest, CapExhaustedHasDistinctExitCode) {
  const auto r = Invoke({"search", "--family", "cycle", "--n", "4", "--parameter", "psi", "--cap", "2"});
  EXPECT_EQ(r.code, kCapExhausted);
  EXPECT_EQ(json::parse(r.out)["result"]["cap_exhausted"], true);
}

TEST(CliSearchTest, OutputIsByteStable) {
  const std::vector<std::string> args{"search", "--family", "cylinder", "--n", "4", "--k", "3", "--parameter", "psi"};
  const auto a = Invoke(args);
  const auto b = Invoke(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.back(), '\n');
}

TEST(CliTableTest, FirstRows) {
  auto r = Invoke({"table", "--family", "prism", "--n", "5", "--k", "4", "--m", "4", "--set", "x1^1,x3^1,x16^1,x16^4"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  auto rows = json::parse(r.out)["result"]["rows"];
  ASSERT_EQ(rows.size(), 80u);
  EXPECT_EQ(rows[0]["representation"], json({0, 2, 3, 6}));

  r = Invoke({"table", "--family", "prism", "--n", "4", "--k", "3", "--m", "4", "--set", "x1^1,x2^1,x3^1,x9^1,x9^4"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  rows = json::parse(r.out)["result"]["rows"];
  ASSERT_EQ(rows.size(), 48u);
  EXPECT_EQ(rows[0]["representation"], json({0, 1, 2, 2, 5}));
}

TEST(CliTableTest, SingletonColumnIsDistanceRow) {
  const auto g = explicit_cylinder(5, 3).graph;
  const auto d = all_pairs_distances(g);
  const auto r = Invoke({"table", "--family", "cylinder", "--n", "5", "--k", "3", "--set", "x7"});
  const auto rows = json::parse(r.out)["result"]["rows"];
  for (int v = 1; v <= 15; ++v) EXPECT_EQ(rows[v - 1]["representation"][0], d(VertexId(v), VertexId(7)));
}

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.file; }

class GoldenTest : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenTest, MatchesCommittedFile) {
  const auto& c = GetParam();
  const auto r = Invoke(c.args);
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto golden = ReadFile(std::filesystem::path(MDIM_GOLDEN_DIR) / c.file);
  ASSERT_FALSE(golden.empty()) << c.file;
  EXPECT_EQ(r.out, golden);
  EXPECT_EQ(golden.find('\r'), std::string::npos);
  EXPECT_EQ(golden.find(" \n"), std::string::npos);
}

INSTANTIATE_TEST_SUITE_P(
    Tables, GoldenTest,
    ::testing::Values(
        GoldenCase{"example1_table.txt",
                   {"table", "--family", "prism", "--n", "5", "--k", "4", "--m", "4", "--set", "x1^1,x3^1,x16^1,x16^4",
                    "--format", "text"}},
        GoldenCase{"example1_table.json",
                   {"table", "--family", "prism", "--n", "5", "--k", "4", "--m", "4", "--set",
                    "x1^1,x3^1,x16^1,x16^4"}},
        GoldenCase{"example2_table.txt",
                   {"table", "--family", "prism", "--n", "4", "--k", "3", "--m", "4", "--set",
                    "x1^1,x2^1,x3^1,x9^1,x9^4", "--format", "text"}},
        GoldenCase{"example2_table.json",
                   {"table", "--family", "prism", "--n", "4", "--k", "3", "--m", "4", "--set",
                    "x1^1,x2^1,x3^1,x9^1,x9^4"}}),
    [](const auto& info) {
      auto name = info.param.file;
      for (char& ch : name) {
        if (ch == '.') ch = '_';
      }
      return name;
    });

TEST(CliConstructTest, Examples) {
  auto r = Invoke({"construct", "--id", "D", "--i", "1", "--n", "5", "--k", "4", "--m", "4"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["set"], json({"x1^(1)", "x3^(1)", "x16^(1)", "x16^(4)"}));
  EXPECT_EQ(doc["result"]["set_indices"], json({1, 3, 16, 76}));

  r = Invoke({"construct", "--id", "T", "--n", "4", "--k", "3", "--m", "2"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(json::parse(r.out)["result"]["set"].size(), 8u);

  r = Invoke({"construct", "--id", "A", "--i", "1", "--n", "3", "--k", "3"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["set"], json({"x1", "x2", "x7"}));
  EXPECT_EQ(doc["result"]["claims"], json({"doubly_resolving"}));

  EXPECT_EQ(Invoke({"construct", "--id", "E3", "--n", "5", "--k", "3"}).code, kUsageError);
  EXPECT_EQ(Invoke({"construct", "--id", "Z", "--n", "5", "--k", "3"}).code, kUsageError);
}

TEST(CliOutputTest, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "mdim_cli_output_test.json";
  std::filesystem::remove(path);
  const auto r = Invoke({"build", "--family", "cycle", "--n", "5", "--output", path.string()});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(json::parse(ReadFile(path))["result"]["vertex_count"], 5);
  std::filesystem::remove(path);
}

TEST(CliUsageTest, MissingSubcommand) {
  EXPECT_EQ(Invoke({}).code, kUsageError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kUsageError);
}

}  // namespace
}  // namespace mdim::cli
