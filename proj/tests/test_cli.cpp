#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(DMLOC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string data(const std::string& name) { return std::string(DMLOC_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Golden {
  const char* command;
  const char* config;
};

class CliGolden : public ::testing::TestWithParam<Golden> {};

}  // namespace

TEST_P(CliGolden, MatchesByteForByte) {
  const Golden g = GetParam();
  const CliRun r = run(std::string(g.command) + " --config " + data(std::string(g.config) + ".cfg") + " --json");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, slurp(std::string(DMLOC_TEST_GOLDEN) + "/" + g.config + ".json"));
  EXPECT_EQ(run(std::string(g.command) + " --config " + data(std::string(g.config) + ".cfg") + " --json").out, r.out);
}

INSTANTIATE_TEST_SUITE_P(Commands, CliGolden,
                         ::testing::Values(Golden{"height", "height"}, Golden{"volume", "supnorm2"},
                                           Golden{"conductor", "carlitz_conductor"}, Golden{"as-break", "asbreak"},
                                           Golden{"kummer", "kummer"}, Golden{"reduce", "reduce"},
                                           Golden{"volume", "drinfeld_volume"},
                                           Golden{"conductor", "interval_conductor"}),
                         [](const auto& info) { return std::string(info.param.config); });

TEST(Cli, KeyValues) {
  using nlohmann::json;
  EXPECT_EQ(json::parse(run("height --json --config " + data("height.cfg")).out)["results"][0]["height"], 3);
  EXPECT_EQ(json::parse(run("volume --json --config " + data("supnorm2.cfg")).out)["vol_log_q"], "-2");
  EXPECT_EQ(json::parse(run("conductor --json --config " + data("carlitz_conductor.cfg")).out)["exact"], 1);
  EXPECT_EQ(json::parse(run("as-break --json --config " + data("asbreak.cfg")).out)["break"], 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("height --config " + data("bad_syntax.cfg")).status, 2);
  EXPECT_EQ(run("height --config " + data("missing_file.cfg")).status, 2);
  EXPECT_EQ(run("reduce --config " + data("dependent.cfg")).status, 1);
  EXPECT_EQ(run("verify --suite no_such_suite").status, 3);
  EXPECT_EQ(run("verify --suite supnorm --seed 9").status, 0);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Cli, ParseErrorReportsPosition) {
  const std::string cmd = std::string(DMLOC_CLI) + " height --json --config " + data("bad_syntax.cfg") + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  const auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j["error"], "parse_error");
  EXPECT_EQ(j["line"], 5);
  EXPECT_EQ(j["column"], 22);
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = run("verify --suite asbreak --seed 77 --json");
  const CliRun b = run("verify --suite asbreak --seed 77 --json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PrintConfigRoundTrips) {
  const CliRun a = run("print-config --config " + data("kummer.cfg"));
  ASSERT_EQ(a.status, 0);
  const std::string tmp = ::testing::TempDir() + "/printed.cfg";
  std::ofstream(tmp) << a.out;
  EXPECT_EQ(run("print-config --config " + tmp).out, a.out);
}
