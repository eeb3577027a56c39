#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "onedpp/catalog.hpp"
#include "onedpp/io.hpp"
#include "onedpp_cli.hpp"

using namespace onedpp;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "onedpp");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("onedpp_cli_" + name);
}

}  // namespace

TEST(Cli, PatternProbability) {
  const Outcome r = run({"prob", "--model", "carries:b=2", "--n", "8", "--ones", "1,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "9/256");
  EXPECT_NE(r.out.find("# model=carries:b=2"), std::string::npos);
  const Outcome bits = run({"prob", "--model", "carries:b=2", "--n", "8", "--pattern", "1000100"});
  EXPECT_EQ(last_line(bits.out), "9/256");
}

TEST(Cli, ByteStable) {
  const std::vector<std::string> args{"prob", "--model", "descents:mallows:q=1/2", "--n", "5", "--all"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> sim{"simulate", "--model", "descents:uniform", "--n", "5", "--reps", "2000", "--seed", "4"};
  const Outcome a = run(sim);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run(sim).out);
}

TEST(Cli, KernelRange) {
  const Outcome r = run({"kernel", "--model", "descents:uniform", "--range", "-1..3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("m,k\n-1,1\n0,1/2\n1,1/12\n2,0\n3,-1/720\n"), std::string::npos) << r.out;
}

TEST(Cli, Correlation) {
  const Outcome r = run({"corr", "--model", "carries:b=10", "--n", "3", "--set", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3/25"), std::string::npos) << r.out;
}

TEST(Cli, OracleCheck) {
  EXPECT_EQ(run({"oracle-check", "--model", "descents:mallows:q=1/2", "--n", "6"}).code, 0);
  EXPECT_EQ(run({"oracle-check", "--model", "connectivity", "--n", "6"}).code, 0);
  EXPECT_EQ(run({"oracle-check", "--builtin", "q8", "--n", "5"}).code, 0);
}

TEST(Cli, OracleCheckMismatch) {
  const auto path = temp_file("b3.json");
  {
    std::ofstream f(path);
    f << to_json(build(CarriesBaseB{3}, 5)).dump();
  }
  const Outcome bad = run({"oracle-check", "--model", "carries:b=2", "--spec", path.string()});
  EXPECT_EQ(bad.code, 1);
  const Outcome good = run({"oracle-check", "--model", "carries:b=3", "--spec", path.string()});
  EXPECT_EQ(good.code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"prob", "--bogus"}).code, 2);
  EXPECT_EQ(run({"simulate", "--model", "carries:b=10", "--n", "9", "--reps", "100"}).code, 2);
  EXPECT_EQ(run({"prob", "--model", "carries:b=1", "--n", "4", "--all"}).code, 2);
  EXPECT_EQ(run({"prob", "--model", "carries:b=2", "--n", "4", "--ones", "7"}).code, 2);
  EXPECT_EQ(run({"nothing"}).code, 2);
  const Outcome missing = run({"prob", "--spec", "/nonexistent/spec.json", "--all"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("error"), std::string::npos);
}

TEST(Cli, JsonSpecRoundTrip) {
  const Outcome v = run({"validate", "--model", "descents:mallows:q=1/3", "--n", "5", "--format", "json"});
  ASSERT_EQ(v.code, 0) << v.err;
  const Json j = Json::parse(v.out);
  ASSERT_TRUE(j.contains("spec"));
  const auto path = temp_file("spec.json");
  {
    std::ofstream f(path);
    f << j.at("spec").dump();
  }
  const Outcome a = run({"prob", "--spec", path.string(), "--all"});
  const Outcome b = run({"prob", "--model", "descents:mallows:q=1/3", "--n", "5", "--all"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out.substr(a.out.find("pattern,")), b.out.substr(b.out.find("pattern,")));
  std::filesystem::remove(path);
}

TEST(Cli, Subcommands) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"counts", "--model", "descents:uniform", "--n", "4"},
        std::vector<std::string>{"stats", "--model", "carries:b=2", "--n", "8"},
        std::vector<std::string>{"group", "--builtin", "q8", "--n", "4"},
        std::vector<std::string>{"group", "--builtin", "c2cubed:twisted", "--simulate", "--length", "6", "--seed", "1"},
        std::vector<std::string>{"connectivity", "--n", "5", "--kernel"},
        std::vector<std::string>{"connectivity", "--n", "5", "--simulate", "--reps", "100", "--seed", "3"},
        std::vector<std::string>{"oracle", "--model", "descents:typeB:n=3", "--n", "4"},
        std::vector<std::string>{"simulate", "--uniform-sum", "--n", "4", "--reps", "1000", "--seed", "2"},
        std::vector<std::string>{"kernel", "--model", "carries:b=3", "--n", "5", "--dense"}}) {
    const Outcome r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << " " << r.err;
    EXPECT_FALSE(r.out.empty());
  }
  const Outcome counts = run({"counts", "--model", "descents:uniform", "--n", "4"});
  EXPECT_NE(counts.out.find("11/24"), std::string::npos) << counts.out;
}

TEST(Cli, OutputFile) {
  const auto path = temp_file("out.csv");
  const Outcome r = run({"prob", "--model", "carries:b=2", "--n", "8", "--ones", "1,5", "--output", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream content;
  content << f.rdbuf();
  EXPECT_EQ(last_line(content.str()), "9/256");
  std::filesystem::remove(path);
}
