#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "walsh/cli.hpp"

namespace walsh {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "walsh");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

TEST(Cli, Cores) {
  const Result csv = run({"cores", "--max-n", "10", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "5,1\n6,0\n7,0\n8,2\n9,1\n10,1\n");
  EXPECT_EQ(run({"cores", "--max-n", "5"}).out, "5 1\n");
  EXPECT_TRUE(has_line(run({"cores"}).out, "64 184"));
}

TEST(Cli, Crowns) {
  const Result all = run({"crowns", "--format", "csv"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.out.substr(0, all.out.find('\n')), "9,19,1");
  EXPECT_TRUE(has_line(all.out, "26,56,3"));
  const Result none = run({"crowns", "--max-n", "8"});
  EXPECT_EQ(none.code, 0);
  EXPECT_EQ(none.out, "");
}

TEST(Cli, ProjectiveAndToroidal) {
  EXPECT_TRUE(has_line(run({"projective", "--max-n", "9", "--format", "csv"}).out, "9,21,6"));
  EXPECT_TRUE(has_line(run({"toroidal", "--max-n", "12", "--format", "csv"}).out, "12,25,4598"));
  const Result guarded = run({"projective", "--max-n", "30"});
  EXPECT_EQ(guarded.code, 2);
  EXPECT_NE(guarded.err.find("4 internal vertices"), std::string::npos);
}

TEST(Cli, NetworkFileOverride) {
  const std::string path = ::testing::TempDir() + "walsh_cli_networks.txt";
  {
    std::ofstream f(path);
    f << "network-series v1\n0 1 1 1\n1 2 1 1\n1 3 1 1\n";
  }
  const Result r = run({"projective", "--max-n", "6", "--networks", path, "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5,10,1\n6,11,1\n6,12,1\n");
  EXPECT_EQ(run({"projective", "--max-n", "7", "--networks", path}).code, 2);
  EXPECT_EQ(run({"projective", "--networks", path + ".missing"}).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, JsonIsOrdered) {
  const Result r = run({"projective", "--max-n", "7", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto rows = nlohmann::json::parse(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0]["n"], 5);
  EXPECT_EQ(rows[0]["m"], 10);
  EXPECT_EQ(rows[0]["count"], 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto prev = std::make_pair(rows[i - 1]["n"].get<int>(), rows[i - 1]["m"].get<int>());
    const auto cur = std::make_pair(rows[i]["n"].get<int>(), rows[i]["m"].get<int>());
    EXPECT_LT(prev, cur);
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"cores", "--max-n", "0"}).code, 2);
  EXPECT_EQ(run({"cores", "--max-n", "65"}).code, 2);
  EXPECT_EQ(run({"cores", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "everything"}).code, 2);
}

TEST(Cli, VerifySuites) {
  for (const char* suite : {"oracle", "gf", "tables"}) {
    const Result r = run({"verify", "--suite", suite});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  }
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(run({"toroidal", "--format", "json"}).out, run({"toroidal", "--format", "json"}).out);
  EXPECT_EQ(run({"crowns"}).out, run({"crowns"}).out);
}

}  // namespace
}  // namespace walsh
