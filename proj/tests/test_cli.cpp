#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "conifold_dt/cli.hpp"
#include "conifold_dt/json_io.hpp"

using namespace conifold_dt;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(JsonRoundTrip, Triangulations) {
  for (int N = 1; N <= 7; ++N)
    for (int m = 0; m <= N; ++m)
      for_each_triangulation(StripDiagram(m, N - m), [](const Triangulation& t) {
        EXPECT_EQ(triangulation_from_json(Json::parse(to_json(t).dump())), t);
      });
}

TEST(JsonRoundTrip, ExponentMapsAndFactorLists) {
  for (int N = 1; N <= 8; ++N)
    for (int m = 0; m <= N; ++m) {
      const StripDiagram d(m, N - m);
      const ExponentMap z = unreduced_total(d);
      EXPECT_EQ(exponent_map_from_json(Json::parse(to_json(z).dump())), z);
    }
  for (int n = 1; n <= 5; ++n) {
    const SignedFactorList f = flop_total(n);
    EXPECT_EQ(factor_list_from_json(Json::parse(to_json(f).dump())), f);
  }
}

TEST(JsonRoundTrip, BlockDecompositions) {
  for (const auto& dec : all_block_decompositions(StripDiagram(3, 3))) {
    const auto back = decomposition_from_json(Json::parse(to_json(dec).dump()));
    EXPECT_EQ(back.blocks(), dec.blocks());
  }
}

TEST(JsonIo, HugeExponentsStayExact) {
  ExponentMap e(StripDiagram(1, 1));
  e.add({1, 1}, BigInt("-123456789012345678901234567890"));
  const Json j = to_json(e);
  EXPECT_EQ(j["factors"][0]["exp"], "-123456789012345678901234567890");
  EXPECT_EQ(exponent_map_from_json(j), e);
}

TEST(Cli, ConifoldTotal) {
  const auto r = run({"ztot", "--m", "1", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  ASSERT_EQ(j["factors"].size(), 1u);
  EXPECT_EQ(j["factors"][0]["path"], Json::array({1, 1}));
  EXPECT_EQ(j["factors"][0]["exp"], "-2");
  EXPECT_EQ(j["homogeneity"]["is_homogeneous"], true);
  EXPECT_EQ(j["homogeneity"]["degree"], "-2");
}

TEST(Cli, TextFormats) {
  auto r = run({"ztot", "--m", "1", "--n", "1", "--format", "text"});
  EXPECT_EQ(r.out, "M(Q1,q)^-2\nhomogeneous of degree -2\n");
  r = run({"count", "--m", "2", "--n", "4", "--format", "text"});
  EXPECT_EQ(r.out, "faces 6\ninterior_edges 5\ntriangulations 15\neuler_char 6\n");
  r = run({"enum", "--m", "1", "--n", "1", "--format", "text"});
  EXPECT_EQ(r.out, "{1} -\n{2} -\n");
}

TEST(Cli, DegreeAndSigma) {
  auto r = run({"degree", "--m", "2", "--n", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["degree_formula"], "-2");
  EXPECT_EQ(r.json()["agree"], true);
  r = run({"sigma", "--m", "2", "--n", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["closed_form"], "-1");
  EXPECT_EQ(r.json()["position_independent"], true);
}

TEST(Cli, DegreeUndefinedIsDomainError) {
  const auto r = run({"degree", "--m", "0", "--n", "1"});
  EXPECT_EQ(r.code, cli::domain_error);
  EXPECT_NE(r.err.find("undefined-degree"), std::string::npos) << r.err;
}

TEST(Cli, ZprimeAndExpand) {
  auto r = run({"zprime", "--m", "1", "--n", "1", "--subset", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["factors"][0]["exp"], "-1");
  r = run({"zprime", "--m", "2", "--n", "3", "--subset", "1,7"});
  EXPECT_EQ(r.code, cli::domain_error);
  r = run({"zprime", "--m", "2", "--n", "3", "--subset", "1,x"});
  EXPECT_EQ(r.code, cli::usage_error);
  r = run({"expand", "--m", "0", "--n", "2", "--order", "2", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1 * q^0 + 1 * Q1 * q^1 + 2 * Q1 * q^2 + 1 * Q1^2 * q^2 + O(q^3)\n");
}

TEST(Cli, PartialReportsMultiplicities) {
  const auto r = run({"partial", "--m", "3", "--n", "4", "--blocks", "2:1,1:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["multiplicities"], Json::array({"4", "3"}));
  EXPECT_EQ(run({"partial", "--m", "3", "--n", "4", "--blocks", "2:1,1:2"}).code, cli::domain_error);
  EXPECT_EQ(run({"partial", "--m", "3", "--n", "4", "--blocks", "2-1"}).code, cli::usage_error);
}

TEST(Cli, FlopMatchesGoldenFile) {
  const auto r = run({"flop", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(CONIFOLD_DT_GOLDEN_DIR "/flop_n3.json"));
  EXPECT_EQ(run({"flop", "--n", "3", "--format", "text"}).out.substr(0, 11), "M(1,q)^8 * ");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::usage_error);
  EXPECT_EQ(run({"ztot", "--m", "1"}).code, cli::usage_error);
  EXPECT_EQ(run({"bogus"}).code, cli::usage_error);
  EXPECT_EQ(run({"ztot", "--m", "1", "--n", "1", "--format", "xml"}).code, cli::usage_error);
  EXPECT_EQ(run({"expand", "--m", "1", "--n", "1", "--order", "65"}).code, cli::usage_error);
  EXPECT_EQ(run({"ztot", "--m", "0", "--n", "0"}).code, cli::domain_error);
}

TEST(Cli, EnumerationGuard) {
  const auto r = run({"enum", "--m", "32", "--n", "32"});
  EXPECT_EQ(r.code, cli::domain_error);
  EXPECT_NE(r.err.find("enumeration-range-exceeded"), std::string::npos) << r.err;
}

TEST(Cli, VerifySmallSweep) {
  const auto r = run({"verify", "--max-size", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.json()["passed"], true);
  EXPECT_EQ(run({"verify", "--max-size", "5"}).out, r.out);
}
