#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace hultman;
using namespace hultman::cli;

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_tool(const std::string& args) {
  const std::string cmd = std::string(HULTMAN_TOOL) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Table, SmallUnsigned) {
  EXPECT_EQ(cmd_table(false, 2, Format::csv), "n,k,count\n1,2,1\n2,1,1\n2,3,1\n");
  EXPECT_EQ(cmd_table(false, 0, Format::csv), "n,k,count\n0,1,1\n");
  EXPECT_EQ(cmd_table(false, 1, Format::csv, true), "n,k,count\n1,1,0\n1,2,1\n");
  EXPECT_THROW(cmd_table(false, -1, Format::csv), std::invalid_argument);
}

TEST(Table, SignedReproducesPublishedTable) {
  const auto rows = parse_csv_rows(cmd_table(true, 11, Format::csv));
  ASSERT_EQ(rows.size(), 77u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& e = golden::kSignedHultmanTable[i];
    EXPECT_EQ(rows[i].n, e.n);
    EXPECT_EQ(rows[i].k, e.k);
    EXPECT_EQ(rows[i].count, ExactInt(std::string(e.count)));
  }
}

TEST(Table, ReparsedRowsSumToGroupOrders) {
  for (bool sgn : {false, true}) {
    std::map<int, ExactInt> sums;
    for (const auto& r : parse_csv_rows(cmd_table(sgn, 12, Format::csv))) sums[r.n] += r.count;
    for (const auto& [n, s] : sums) EXPECT_EQ(s, group_order_exact(n, sgn));
  }
}

TEST(Table, JsonCountsAreStrings) {
  const auto j = nlohmann::json::parse(cmd_table(true, 3, Format::json));
  ASSERT_EQ(j["rows"].size(), 9u);
  EXPECT_TRUE(j["rows"][0]["count"].is_string());
  EXPECT_EQ(j["rows"].back()["count"], "1");
}

TEST(Census, MatchesTableAndIsDeterministic) {
  const auto census = parse_csv_rows(cmd_census(true, 5, "cycles", {}, Format::csv));
  const auto row = signed_hultman_row(5);
  for (const auto& r : census) EXPECT_EQ(r.count, row[r.k]);
  EXPECT_EQ(census.size(), 6u);

  ExactInt odd_total = 0;
  for (const auto& r : parse_csv_rows(cmd_census(false, 7, "odd", {}, Format::csv))) odd_total += r.count;
  EXPECT_EQ(odd_total, 5040);

  EXPECT_EQ(cmd_census(false, 6, "cycles", {1, false}, Format::csv),
            cmd_census(false, 6, "cycles", {8, false}, Format::csv));
  EXPECT_EQ(cmd_census(true, 5, "odd", {1, false}, Format::json), cmd_census(true, 5, "odd", {8, false}, Format::json));
  EXPECT_THROW(cmd_census(false, 3, "even", {}, Format::csv), std::invalid_argument);
  EXPECT_THROW(cmd_census(false, 11, "cycles", {}, Format::csv), GuardError);
}

TEST(Census, JsonLayout) {
  const auto j = nlohmann::json::parse(cmd_census(false, 2, "cycles", {}, Format::json));
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["total"], "2");
  EXPECT_EQ(j["counts"]["1"], "1");
  EXPECT_EQ(j["counts"]["3"], "1");
}

TEST(Moments, ExactRows) {
  const auto u = cmd_moments(false, 2, Format::csv);
  EXPECT_EQ(u, "n,mean,variance,mean_approx,variance_approx\n1,2/1,0/1,2,0\n2,2/1,1/1,2,1\n");
  const auto s = cmd_moments(true, 1, Format::csv);
  EXPECT_EQ(s, "n,mean,variance,mean_approx,variance_approx\n1,3/2,1/4,1.5,0.25\n");
  const auto j = nlohmann::json::parse(cmd_moments(true, 3, Format::json));
  EXPECT_EQ(j["rows"][2]["mean"], "7/4");
  EXPECT_THROW(cmd_moments(false, 0, Format::csv), std::invalid_argument);
}

TEST(Dist, Tables) {
  EXPECT_EQ(cmd_dist("dcj", 3, {}, Format::csv), "k,count\n0,1\n1,6\n2,21\n3,20\n");
  ExactInt total = 0;
  for (const auto& r : parse_csv_rows(cmd_dist("bid", 3, {}, Format::csv))) total += r.count;
  EXPECT_EQ(total, 6);
  EXPECT_EQ(cmd_dist("reversal", 6, {1, false}, Format::csv), cmd_dist("reversal", 6, {8, false}, Format::csv));
}

TEST(Compare, ReportsOffsetAndGaps) {
  const auto text = cmd_compare("signed_reversal", 5, {}, Format::csv);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "k,distance_count,shifted_hultman,offset,gap");
  ExactInt total = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    ASSERT_EQ(cells.size(), 5u);
    EXPECT_EQ(ExactInt(cells[1]) - ExactInt(cells[2]), ExactInt(cells[4]));
    total += ExactInt(cells[1]);
  }
  EXPECT_EQ(total, 3840);
  const auto j = nlohmann::json::parse(cmd_compare("dcj", 4, {}, Format::json));
  EXPECT_EQ(j["offset"], 0);
  EXPECT_EQ(j["total_variation"], "0/1");
}

TEST(Verify, SuitesPass) {
  for (auto suite : verify_suites()) {
    const auto report = cmd_verify(suite, 5);
    EXPECT_TRUE(report.passed()) << report.str();
  }
  EXPECT_THROW(cmd_verify("nope", 5), std::invalid_argument);
}

TEST(Verify, ReportMarksFailures) {
  VerifyReport r{"demo", {{"a", "x", true, ""}, {"b", "y", false, "boom"}}};
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.str().find("FAIL  b  [y]  boom"), std::string::npos);
  EXPECT_NE(r.str().find("demo: 1/2 checks passed"), std::string::npos);
}

TEST(Binary, ExitCodesAndOutput) {
  auto r = run_tool("table --n 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "n,k,count\n1,2,1\n2,1,1\n2,3,1\n");
  r = run_tool("verify --suite table1");
  EXPECT_EQ(r.status, 0);
  r = run_tool("verify --suite lemmas --max-n 5");
  EXPECT_EQ(r.status, 0);
  r = run_tool("census --n 11");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("--force"), std::string::npos);
  r = run_tool("dist --metric nonsense --n 3");
  EXPECT_EQ(r.status, 1);
  r = run_tool("table");
  EXPECT_NE(r.status, 0);
}

TEST(Binary, WritesToFile) {
  const std::string path = testing::TempDir() + "hultman_cli_out.json";
  const auto r = run_tool("census --signed --n 3 --format json --out " + path);
  ASSERT_EQ(r.status, 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), cmd_census(true, 3, "cycles", {}, Format::json));
  std::remove(path.c_str());
}
