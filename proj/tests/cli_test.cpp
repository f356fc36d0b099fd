#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "ktuple/generators.hpp"
#include "ktuple/graph_io.hpp"

namespace ktuple {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ktuple_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the tool with stdout to `stdout_file` (inside the scratch dir) and
  // returns its exit status.
  int tool(const std::string& args, const std::string& stdout_file = "stdout.txt") const {
    const std::string cmd = std::string(KTUPLE_CLI_PATH) + " " + args + " > " + path(stdout_file) + " 2> " +
                            path("stderr.txt");
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string slurp(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  nlohmann::json json_file(const std::string& name) const { return nlohmann::json::parse(slurp(name)); }

  fs::path dir_;
};

TEST_F(CliTest, GenThenComputeOnK6) {
  ASSERT_EQ(tool("gen complete 6 -o " + path("k6.txt")), 0);
  ASSERT_EQ(tool("compute --input " + path("k6.txt") + " --k 2 --oracle --report " + path("r.json") +
                 " --certificate " + path("c.json")),
            0)
      << slurp("stderr.txt");
  const auto report = json_file("r.json");
  EXPECT_EQ(report["invariants"]["gamma_xk"]["value"], 2);
  EXPECT_EQ(report["invariants"]["d_xk"]["value"], 3);
  EXPECT_TRUE(report["certificates_valid"].get<bool>());
  EXPECT_TRUE(report["oracle"]["mismatches"].empty());
  const auto cert = json_file("c.json");
  EXPECT_EQ(cert["gamma_xk"].size(), 2u);
  EXPECT_EQ(cert["d_xk"].size(), 3u);
}

TEST_F(CliTest, VerifyFlagsSandwichEqualityOnCliqueChain) {
  ASSERT_EQ(tool("verify --graph \"clique-chain 2\" --k 2 --report " + path("v.json")), 0) << slurp("stderr.txt");
  const auto report = json_file("v.json");
  for (const auto& check : report["checks"]) {
    if (check["id"] == "C9.upper") EXPECT_EQ(check["status"], "sharp");
    EXPECT_NE(check["status"], "violated") << check["id"];
  }
}

TEST_F(CliTest, ViolationGivesNonZeroExit) {
  EXPECT_EQ(tool("verify --graph \"complete 3\" --k 1"), 1);
  EXPECT_NE(slurp("stderr.txt").find("C9.upper"), std::string::npos);
}

TEST_F(CliTest, EnsembleIsByteIdenticalAcrossRunsAndWorkerCounts) {
  const std::string base = "ensemble --model gnp --n 8 --p 0.6 --count 50 --seed 1 --k 2";
  ASSERT_EQ(tool(base + " --csv " + path("a.csv")), 0) << slurp("stderr.txt");
  ASSERT_EQ(tool(base + " --csv " + path("b.csv")), 0);
  ASSERT_EQ(tool(base + " --jobs 3 --csv " + path("c.csv")), 0);
  const auto a = slurp("a.csv");
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 51);
  EXPECT_EQ(a, slurp("b.csv"));
  EXPECT_EQ(a, slurp("c.csv"));
}

TEST_F(CliTest, EnsembleWritesNaForFailedPreconditions) {
  ASSERT_EQ(tool("ensemble --model gnp --n 6 --p 0.3 --count 20 --seed 7 --k 3 --oracle --summary " +
                 path("s.json")),
            0)
      << slurp("stderr.txt");
  const auto csv = slurp("stdout.txt");
  EXPECT_NE(csv.find(",NA,"), std::string::npos);
  EXPECT_EQ(csv.find(",0,NA"), std::string::npos);
  EXPECT_EQ(json_file("s.json")["instances"], 20);
}

TEST_F(CliTest, GenOutputRoundTrips) {
  ASSERT_EQ(tool("gen gnp 9 0.5 --seed 3 -o " + path("g.txt")), 0);
  EXPECT_EQ(read_graph_file(path("g.txt")).graph, gnp(9, 0.5, 3));
  ASSERT_EQ(tool("gen k-join 2 3 2 --rule exact --seed 5 --complement -o " + path("j.txt")), 0);
  EXPECT_NE(tool("verify --input " + path("j.txt") + " --k 1 --report " + path("v.json")), 2) << slurp("stderr.txt");
  EXPECT_EQ(json_file("v.json")["source"], path("j.txt"));
}

TEST_F(CliTest, RejectsBadConfiguration) {
  EXPECT_EQ(tool("gen gnp 5 0.5"), 2);  // random family without seed
  EXPECT_EQ(tool("compute --graph \"complete 3\" --k 0"), 2);
  EXPECT_EQ(tool("compute --input " + path("missing.txt") + " --k 1"), 2);
  EXPECT_EQ(tool("compute --k 1"), 2);
  EXPECT_EQ(tool("ensemble --model random-regular --n 5 --r 3 --count 2 --seed 1 --k 1"), 2);
  EXPECT_EQ(tool("gen cycle 2"), 2);
}

}  // namespace
}  // namespace ktuple
