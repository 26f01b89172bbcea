#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(QCARTAN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, SmallKorRunPrintsJsonAndExitsZero) {
  auto r = run("kor --ell 2 --n 3 -q");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["task"], "kor");
  EXPECT_EQ(j[0]["lhs"], nlohmann::json({"1", "2"}));
  EXPECT_TRUE(j[0]["equal"].get<bool>());
}

TEST(Cli, RangesExpandToOneReportEach) {
  auto r = run("graded --ell 2,3 --n 0..2 -q");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 6u);
}

TEST(Cli, CsvFormatHasHeaderAndRows) {
  auto r = run("conjecture --ell 2 --n 0-2 --format csv -q");
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(is, line))
    if (!line.empty()) ++lines;
  EXPECT_EQ(lines, 4);
  EXPECT_EQ(r.out.rfind("schema", 0), 0u);
}

TEST(Cli, OutWritesFile) {
  auto path = std::filesystem::temp_directory_path() / "qcartan_cli_out_test.json";
  std::filesystem::remove(path);
  auto r = run("specialized --ell 2 --n 2 --theta 2,1/2 -q --out " + path.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  EXPECT_EQ(nlohmann::json::parse(f).size(), 2u);
  std::filesystem::remove(path);
}

TEST(Cli, ExplicitLocalGridOmitsCoverageReport) {
  auto r = run("local --primes 2 --theta 3 --ell 2 --n 2 -q");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["case"], 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("graded --ell x").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("nosuch").code, 2);
  EXPECT_EQ(run("specialized --theta 0").code, 2);
  EXPECT_EQ(run("graded --format xml").code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }
