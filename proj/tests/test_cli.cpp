#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "gorenstein/cli.hpp"

namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = gorenstein::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("gorenstein_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool single_error_line(const std::string& err) {
  return err.rfind("error: ", 0) == 0 && err.find('\n') == err.size() - 1;
}

}  // namespace

TEST(Cli, Count) {
  const auto r = run({"count", "--v", "8"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "M = 4; N = unknown\n");
  EXPECT_EQ(run({"count", "--v", "9"}).out, "M = 2; N = 3\n");
}

TEST(Cli, ClassifyVolumeFour) {
  const auto r = run({"classify", "--v", "4", "--k", "0"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("classes: 3; matched: 3/3"), std::string::npos);
  EXPECT_NE(r.out.find("expected: 3; match"), std::string::npos);
  EXPECT_EQ(r.out.front(), '[');
  EXPECT_EQ(r.out, run({"classify", "--v", "4", "--k", "0"}).out);
}

TEST(Cli, ClassifyBudget) {
  const auto r = run({"classify", "--v", "12", "--k", "0", "--budget", "100"});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(single_error_line(r.err)) << r.err;
  EXPECT_NE(r.err.find("BudgetExceeded"), std::string::npos);
  setenv(gorenstein::cli::kBudgetEnv, "100", 1);
  EXPECT_EQ(run({"classify", "--v", "12", "--k", "0"}).status, 2);
  unsetenv(gorenstein::cli::kBudgetEnv);
}

TEST(Cli, DeltaFromGenerators) {
  const auto path = write_temp("g.json", R"({"ambient":2,"generators":[["1/2","1/2"]]})");
  const auto r = run({"delta", "--generators", path});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 + t\nvolume: 2\nGorenstein, index 1\n");
  EXPECT_EQ(run({"delta", "--generators", path, "--json"}).out,
            "{\"delta\":[1,1],\"gorenstein\":true,\"index\":1,\"volume\":2}\n");
}

TEST(Cli, DeltaFromSimplex) {
  const auto path = write_temp("s.json", R"({"dim":3,"vertices":[[0,0,0],[1,0,0],[0,1,0],[3,3,4]]})");
  const auto r = run({"delta", "--simplex", path});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 + t + t^2 + t^3\nvolume: 4\nGorenstein, index 1\n");
}

TEST(Cli, Construct) {
  const auto r = run({"construct", "--family", R"({"family":"p2-case1","params":{"p":2,"k":0}})", "--vertex-form"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find(R"("simplex":{"dim":3,"vertices":[[0,0,0],[1,0,0],[0,1,0],[3,3,4]]})"), std::string::npos);
  EXPECT_NE(r.out.find(R"("generators":[["1/4","1/4","1/4","1/4"]])"), std::string::npos);

  const auto path = write_temp("f.json", R"({"family":"chain","params":{"chain":[2,4],"k":0}})");
  EXPECT_EQ(run({"construct", "--family", path}).status, 0);
}

TEST(Cli, BadInputExitsTwoWithOneLine) {
  const std::vector<std::vector<std::string>> cases{
      {},
      {"frobnicate"},
      {"count"},
      {"count", "--v", "0"},
      {"count", "--v", "x"},
      {"delta"},
      {"delta", "--simplex", "/nonexistent.json"},
      {"delta", "--simplex", "a", "--generators", "b"},
      {"construct", "--family", R"({"family":"prime","params":{"p":4,"k":0}})"},
      {"construct", "--family", R"({"family":"prime","params":{"p":3,"k":0}})", "--vertex-form"},
      {"construct", "--family", "{bad json"},
      {"classify", "--v", "4"},
      {"verify", "--suite", "slow"},
  };
  for (const auto& args : cases) {
    const auto r = run(args);
    EXPECT_EQ(r.status, 2) << (args.empty() ? "" : args[0]);
    EXPECT_TRUE(single_error_line(r.err)) << r.err;
  }
}

TEST(Cli, VerifyFast) {
  const auto r = run({"verify", "--suite", "fast"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("8/8 criteria passed"), std::string::npos);
}
