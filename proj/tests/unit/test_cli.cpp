#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wreath::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST(Cli, HasseDot) {
  const Result r = run({"hasse", "--m", "2", "--d", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(count_lines_with(r.out, "->"), 8u);
}

TEST(Cli, HasseJson) {
  const Result r = run({"hasse", "--m", "2", "--d", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["nodes"].size(), 8u);
  EXPECT_EQ(j["covers"].size(), 8u);
  EXPECT_EQ(j["nodes"][0], "e");
}

TEST(Cli, Order) {
  Result r = run({"order", "--m", "2", "--d", "2", "--x", "s1^1", "--y", "t1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x <= y: false"), std::string::npos);
  r = run({"order", "--m", "2", "--d", "2", "--x", "s1^1", "--y", "s1^1 s1^2"});
  EXPECT_NE(r.out.find("x <= y: true"), std::string::npos);
  EXPECT_EQ(run({"order", "--m", "2", "--d", "2", "--x", "q1", "--y", "t1"}).code, 2);
}

TEST(Cli, VerifyPassesAndReportsJson) {
  const Result r = run({"verify", "--m", "2", "--d", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["census"]["basisSize"], 16);
  EXPECT_EQ(j["springer"]["classCount"], 5);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "--m", "9", "--d", "9"}).code, 2);
  EXPECT_EQ(run({"verify", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "--m", "2", "--d", "2", "--scope", "nope"}).code, 2);
  EXPECT_EQ(run({"tables", "--kind", "nope", "--m", "2", "--d", "2"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BoundFromEnvironment) {
  ::setenv("WREATH_ENUM_BOUND", "20", 1);
  const Result r = run({"verify", "--m", "3", "--d", "2", "--scope", "algebra"});
  ::unsetenv("WREATH_ENUM_BOUND");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run({"verify", "--m", "3", "--d", "2", "--scope", "algebra"}).code, 0);
}

TEST(Cli, Tables) {
  Result r = run({"tables", "--kind", "typeD", "--d", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines_with(r.out, ","), 5u);
  r = run({"tables", "--kind", "typeB", "--d", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 10u);
  r = run({"tables", "--kind", "irreps", "--m", "2", "--d", "2", "--format", "md"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines_with(r.out, "|"), 7u);
  r = run({"tables", "--kind", "orbits", "--m", "2", "--d", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["orbits"].size(), 3u);
  r = run({"tables", "--kind", "chars", "--m", "2", "--d", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
}
