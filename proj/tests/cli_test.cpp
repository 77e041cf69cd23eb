#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "permeq/notation.hpp"
#include "permeq/serialize.hpp"
#include "permeq/solver.hpp"
#include "test_support.hpp"

using namespace permeq;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, Construct) {
  const Result r = run({"construct", "6", "3", "2"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(has(r.out, "alpha = (1 2 3 4 5 6)")) << r.out;
  EXPECT_TRUE(has(r.out, "y = (1 3 5)(2 6 4)")) << r.out;
  EXPECT_TRUE(has(r.out, "2 cycles of length 3")) << r.out;
  EXPECT_TRUE(has(r.out, "holds")) << r.out;
}

TEST(Cli, ConstructPreconditionEchoesArithmetic) {
  const Result r = run({"construct", "6", "2", "2"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_TRUE(has(r.err, "7")) << r.err;
}

TEST(Cli, QValue) {
  EXPECT_EQ(run({"qvalue", "2", "11"}).out, "q(2,11) = 23\n");
  EXPECT_EQ(run({"qvalue", "-2", "11"}).out, "q(-2,11) = 683\n");
  EXPECT_EQ(run({"qvalue", "-2", "2"}).out, "q(-2,2) = infinity\n");
  const Result undecided = run({"qvalue", "2", "11", "--q-bound", "2"});
  EXPECT_EQ(undecided.code, cli::kExitUndecided);
  EXPECT_EQ(undecided.out, "q(2,11) > 2\n");
  EXPECT_EQ(run({"qvalue", "3", "4"}).code, cli::kExitUsage);
}

TEST(Cli, QValueJson) {
  const Json j = Json::parse(run({"--json", "qvalue", "-2", "2"}).out);
  EXPECT_EQ(j["q"], "infinity");
  const Json k = Json::parse(run({"qvalue", "2", "11", "--json"}).out);
  EXPECT_EQ(k["q"], 23);
}

TEST(Cli, Classify) {
  const Result r = run({"classify", "(1 2)(3 4 5)", "--e", "2"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(has(r.out, "verdict: OnlyTrivial")) << r.out;
  EXPECT_TRUE(has(r.out, "hypotheses:")) << r.out;
}

TEST(Cli, ClassifyNegativeExponentAndExplicitDegree) {
  const Result r = run({"classify", "(1 2 3)", "--e", "-2", "--n", "5"});
  EXPECT_NE(r.code, cli::kExitUsage) << r.err;
  EXPECT_TRUE(has(r.out, "n = 5")) << r.out;
  EXPECT_EQ(run({"classify", "(1 2 7)", "--e", "2", "--n", "5"}).code, cli::kExitUsage);
}

TEST(Cli, JsonSolutionsRoundTrip) {
  const Result r = run({"--json", "classify", "(1 2 3 4 5 6)", "--e", "2"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const Json j = Json::parse(r.out);
  const std::size_t n = j["n"];
  ASSERT_EQ(j["verdict"], "CompleteSet");
  std::vector<Perm> parsed;
  for (const auto& s : j["solutions"])
    parsed.push_back(parse_cycles(s.get<std::string>(), n));
  for (std::size_t i = 0; i < parsed.size(); ++i)
    EXPECT_EQ(format_cycles(parsed[i]), j["solutions"][i].get<std::string>());
  std::set<Perm> got(parsed.begin(), parsed.end());
  const auto oracle = brute_force_solutions(Perm::standard_cycle(6), 2);
  EXPECT_EQ(got, std::set<Perm>(oracle.begin(), oracle.end()));
  for (const auto& h : j["hypotheses_log"]) {
    EXPECT_TRUE(h.contains("condition"));
    EXPECT_TRUE(h.contains("numbers"));
    EXPECT_TRUE(h.contains("pass"));
  }
}

TEST(Cli, IdenticalInvocationsGiveIdenticalBytes) {
  const std::vector<std::string> args = {"--json", "oracle", "(1 2 3 4)(5 6)", "--e", "3"};
  const Result a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, cli::kExitOk);
}

TEST(Cli, ParseErrorReportsPosition) {
  const Result r = run({"classify", "(1 2)(2 3)", "--e", "2"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_TRUE(has(r.err, "1:7")) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classify", "(1 2)"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classify", "(1 2)", "--e", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classify", "--e", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, RandomAlphaFromSeed) {
  const Result a = run({"--seed", "7", "classify", "--n", "5", "--e", "2"});
  const Result b = run({"--seed", "7", "classify", "--n", "5", "--e", "2"});
  EXPECT_NE(a.code, cli::kExitUsage) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Ranges) {
  const Result r = run({"ranges", "(1 2)(3 4 5)", "--d", "1"});
  EXPECT_EQ(r.out, "F_1(alpha) = {0, 2, 3, 5}\n");
  const Json j = Json::parse(run({"--json", "ranges", "(1 2)(3 4)(5 6 7 8)"}).out);
  EXPECT_EQ(j["ranges"].size(), 8u);
  EXPECT_EQ(j["ranges"][1]["members"], Json::parse("[0,2,4,6,8]"));
}

TEST(Cli, Oracle) {
  const Result r = run({"oracle", "(1 2 3 4 5 6)", "--e", "2"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(has(r.out, "solutions (3)")) << r.out;
  EXPECT_EQ(run({"oracle", "(1 2 3 4 5 6 7 8 9)", "--e", "2"}).code, cli::kExitUsage);
}

TEST(Cli, Reduce) {
  const Result r = run({"--json", "reduce", "(1 2 3)", "(1 3 2)", "()", "--r1", "1",
                        "--r2", "1", "--r3", "1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["case"], "*4");
  EXPECT_EQ(j["exponent"], -2);
  EXPECT_EQ(j["reducible"], true);
}

TEST(Cli, SolveCubicMatchesSearch) {
  const Perm a1 = parse_cycles("(1 2 3)", 3), a2 = parse_cycles("(1 3 2)", 3);
  const Perm a3(3);
  for (auto pattern : {std::vector<std::string>{"1", "1", "1"},
                       std::vector<std::string>{"-1", "1", "-1"},
                       std::vector<std::string>{"1", "-1", "-1"}}) {
    const Result r = run({"--json", "solve-cubic", "(1 2 3)", "(1 3 2)", "()", "--r1",
                          pattern[0], "--r2", pattern[1], "--r3", pattern[2]});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    CubicEquation eq{a1, a2, a3, std::stoi(pattern[0]), std::stoi(pattern[1]),
                     std::stoi(pattern[2])};
    std::set<Perm> expect;
    for (const Perm& x : permeq::testing::all_perms(3))
      if (eq.is_solved_by(x))
        expect.insert(x);
    std::set<Perm> got;
    for (const auto& s : j["solutions"])
      got.insert(parse_cycles(s.get<std::string>(), 3));
    EXPECT_EQ(got, expect) << r.out;
  }
}

TEST(Cli, SolveCubicRejectsBadExponent) {
  EXPECT_EQ(run({"solve-cubic", "()", "()", "()", "--r2", "2"}).code, cli::kExitUsage);
}
