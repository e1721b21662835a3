#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hhht/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hhht");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hhht::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(HHHT_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in) << "missing golden " << name;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Goldens) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"diff", "--n", "3", "--method", "renewal"}, "diff_n3_renewal.json"},
      {{"exact", "--n", "3"}, "exact_n3.json"},
      {{"table", "--n-from", "10", "--n-to", "100", "--step", "10", "--format", "csv"}, "table_10_100.csv"},
      {{"decompose", "HTHHHTTH"}, "decompose_HTHHHTTH.json"},
      {{"asym", "--n", "100"}, "asym_n100.json"},
      {{"renewal", "--m-to", "10"}, "renewal_m10.csv"},
  };
  for (const auto& [args, file] : cases) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << file << ": " << r.err;
    EXPECT_EQ(r.out, golden(file)) << file;
  }
}

TEST(Cli, ByteStableAcrossRuns) {
  const std::vector<std::string> args = {"mc", "--n", "40", "--trials", "20000", "--seed", "9"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"mc", "--n", "40", "--trials", "20000", "--seed", "10"}).out);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run({"dp", "--n", "0"}).code, 1);
  EXPECT_EQ(run({"diff", "--n", "2", "--method", "renewal"}).code, 1);
  EXPECT_EQ(run({"exact", "--n", "3", "--p", "1"}).code, 1);
  EXPECT_EQ(run({"decompose", "HXT"}).code, 1);
  const auto r = run({"dp", "--n", "0"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"dp", "--no-such-flag"}).code, 2);
  EXPECT_EQ(run({"dp", "--n", "ten"}).code, 2);
  EXPECT_EQ(run({"dp", "--n", "5", "--format", "xml"}).code, 2);
}

TEST(Cli, CsvHasHeaderAndOneRecord) {
  const auto r = run({"dp", "--n", "10", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, record, extra;
  std::getline(lines, header);
  std::getline(lines, record);
  EXPECT_FALSE(std::getline(lines, extra));
  EXPECT_NE(header.find("pA"), std::string::npos);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(record.begin(), record.end(), ','));
}

TEST(Cli, VerifySubset) {
  const auto r = run({"verify", "--only", "core."});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("PASS core.score_via_runs"), std::string::npos);
  EXPECT_EQ(r.err.find("FAIL"), std::string::npos);
}
