#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace padic::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, std::optional<std::string> cap_env = std::nullopt) {
  std::ostringstream out, err;
  const int code = run(args, out, err, cap_env);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliNp, WorkedExampleWithPrimeSymbol) {
  const auto r = invoke({"np", "--prime", "5", "--poly", "p + x^2 + p^3*x^6"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "vertices: (0,1) (2,0) (6,3)"));
  EXPECT_TRUE(contains(r.out, "segment: slope -1/2, length 2"));
  EXPECT_TRUE(contains(r.out, "segment: slope 3/4, length 4"));
  EXPECT_TRUE(contains(r.out, "purity: not pure"));
}

TEST(CliNp, Monomial) {
  const auto r = invoke({"np", "--prime", "2", "--poly", "x^3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(contains(r.out, "no segments"));
}

TEST(CliNp, JsonInputAndOutput) {
  const auto r = invoke({"--json", "np", "--prime", "2", "--poly-json", R"(["2","0","1"])"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["polygon"]["segments"][0]["slope"], "-1/2");
  EXPECT_EQ(j["purity"]["classification"], "p^r-Dumas");
}

TEST(CliNp, ExitCodes) {
  EXPECT_EQ(invoke({"np", "--prime", "4", "--poly", "x + 2"}).code, kDomainError);
  EXPECT_EQ(invoke({"np", "--prime", "2", "--poly", "0"}).code, kDomainError);
  const auto bad = invoke({"np", "--prime", "2", "--poly", "x^^2"});
  EXPECT_EQ(bad.code, kUsageError);
  EXPECT_TRUE(contains(bad.err, "position 2"));
  EXPECT_EQ(invoke({"np", "--prime", "2"}).code, kUsageError);
  EXPECT_EQ(invoke({"np", "--prime", "2", "--poly", "x", "--poly-json", "[]"}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"--json", "--ascii", "np", "--prime", "2", "--poly", "x"}).code, kUsageError);
}

TEST(CliCompose, PredictionMatches) {
  const auto r = invoke({"compose", "--prime", "5", "--f", "5+x^2+125*x^6", "--g", "x^3+5", "--iterate", "1"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "prediction matches"));
}

TEST(CliCompose, HypothesisViolation) {
  const auto r = invoke({"compose", "--prime", "5", "--f", "25+x+25*x^2", "--g", "5+x^2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(contains(r.out, "hypotheses violated: |slope -2| >= r=1"));
  EXPECT_TRUE(contains(r.out, "actual polygon"));
}

TEST(CliCompose, DegreeCap) {
  const std::vector<std::string> args{"compose", "--prime", "5", "--f", "5+x^2+125*x^6", "--g", "x^3+5", "--iterate", "9"};
  EXPECT_EQ(invoke(args).code, kDomainError);  // 6 * 3^9 > 100000
  std::vector<std::string> capped{"--cap", "50"};
  capped.insert(capped.end(), args.begin(), args.end());
  capped.back() = "2";
  EXPECT_EQ(invoke(capped).code, kDomainError);  // 54 > 50
  capped.back() = "1";
  EXPECT_EQ(invoke(capped).code, kOk);
  EXPECT_EQ(invoke({"compose", "--prime", "5", "--f", "1+x^6", "--g", "x^3+5"}, "10").code, kDomainError);
  EXPECT_EQ(invoke({"--cap", "20", "compose", "--prime", "5", "--f", "1+x^6", "--g", "x^3+5"}, "10").code, kOk);
  EXPECT_EQ(invoke({"--cap", "0", "np", "--prime", "2", "--poly", "x"}).code, kUsageError);
  EXPECT_EQ(invoke({"np", "--prime", "2", "--poly", "x"}, "lots").code, kUsageError);
}

TEST(CliCertify, ExitCodeFollowsVerdict) {
  EXPECT_EQ(invoke({"certify", "--exp-n", "4", "--primes", "2"}).code, kOk);
  const auto r = invoke({"--json", "certify", "--exp-n", "4", "--compose", "x^5+8", "--iterate", "1", "--primes", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["combined_divisor"], 20);
  EXPECT_EQ(j["verdict"], "certified_irreducible");
  EXPECT_EQ(j["schema"], 1);
  const auto q = invoke({"certify", "--poly", "x^4 - 5x^2 + 6", "--primes", "2"});
  EXPECT_EQ(q.code, kNotCertified);
  EXPECT_TRUE(contains(q.out, "inconclusive"));
  EXPECT_EQ(invoke({"certify", "--poly", "x^4 + 2", "--primes", "2,3"}).code, kOk);
  EXPECT_EQ(invoke({"certify", "--poly", "x^4 + 2"}).code, kUsageError);
  EXPECT_EQ(invoke({"certify", "--poly", "x^4 + 2", "--primes", "6"}).code, kDomainError);
}

TEST(CliCheck, Dumas) {
  const auto r = invoke({"check", "--prime", "2", "--poly", "x^2+2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(contains(r.out, "classification: p^r-Dumas"));
  EXPECT_EQ(invoke({"check", "--prime", "2", "--poly", "x^2+x"}).code, kDomainError);
}

TEST(CliExpTaylor, DigitsMatch) {
  const auto r = invoke({"exp-taylor", "--n", "12", "--prime", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(contains(r.out, "digit formula matches"));
  EXPECT_EQ(invoke({"exp-taylor", "--n", "0"}).code, kUsageError);
}

TEST(CliVerify, SummaryAndDeterminism) {
  const auto a = invoke({"--seed", "7", "--jobs", "1", "verify", "--theorem", "stretch", "--trials", "100"});
  const auto b = invoke({"--seed", "7", "--jobs", "4", "verify", "--theorem", "stretch", "--trials", "100"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(contains(a.out, "passed: 100"));
  EXPECT_EQ(invoke({"verify", "--theorem", "sum", "--trials", "100", "--seed", "1"}).code, kOk);
  EXPECT_EQ(invoke({"verify", "--theorem", "fermat"}).code, kUsageError);
  EXPECT_EQ(invoke({"--seed", "-1", "verify", "--theorem", "sum"}).code, kUsageError);
}

TEST(CliRender, AsciiAndSvg) {
  const auto r = invoke({"render", "--prime", "2", "--poly", "x^2+2", "--poly", "4+x^3", "--union"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "[bold]"));

  const auto path = (std::filesystem::temp_directory_path() / "padic_cli_render_test.svg").string();
  const auto s = invoke({"--svg", path, "render", "--prime", "5", "--poly", "5+x^2+125x^6"});
  ASSERT_EQ(s.code, kOk) << s.err;
  std::ifstream in(path);
  std::stringstream svg;
  svg << in.rdbuf();
  EXPECT_TRUE(contains(svg.str(), "<svg"));
  std::filesystem::remove(path);

  EXPECT_EQ(invoke({"--svg", "/nonexistent-dir/x.svg", "render", "--prime", "2", "--poly", "x+2"}).code, kDomainError);
  EXPECT_EQ(invoke({"render", "--prime", "2"}).code, kUsageError);
}

}  // namespace
}  // namespace padic::cli
