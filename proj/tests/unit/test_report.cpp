#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "conicrank/errors.hpp"
#include "conicrank/report.hpp"

using namespace conicrank;
using nlohmann::ordered_json;

namespace {

const char* const kCurves[] = {
    "(x^2-1)*T + x^3 - x + 4",
    "T^2 + x^3 + 1",
    "2T^2 + x^3 + 1",
    "(x^3-x)*T + 4",
    "T*x^3 + (T^2+T+1)*x^2 + (2T^2+T+2)*x + (T^2+T+1)",
};

}  // namespace

TEST(Json, TopLevelKeysInOrder) {
  ordered_json j = report_to_json(analyze(parse_curve(kCurves[0])));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"curve", "conic_fibers", "kodaira_fibers", "delta", "epsilon",
                                            "rank_geometric", "defect", "delta_k", "orbits", "bounds", "family",
                                            "rank_exact", "verifications"}));
}

TEST(Json, PolynomialsAsRationalPairs) {
  EXPECT_EQ(poly_to_json(UniPoly(Var::x, std::vector<Rational>{Rational(1, 2), 0, -3})).dump(),
            R"([["1","2"],["0","1"],["-3","1"]])");
  EXPECT_EQ(poly_to_json(UniPoly(Var::x)).dump(), "[]");
  UniPoly p(Var::T, std::vector<Rational>{Rational(-7, 3), 5});
  EXPECT_EQ(poly_from_json(poly_to_json(p), Var::T), p);
  EXPECT_THROW(poly_from_json(ordered_json::parse(R"([["1"]])"), Var::x), ParseError);
}

TEST(Json, RoundTripIsByteIdentical) {
  for (const char* expr : kCurves) {
    const std::string once = report_to_json(analyze(parse_curve(expr), true)).dump(2);
    const std::string twice = ordered_json::parse(once).dump(2);
    EXPECT_EQ(once, twice) << expr;
  }
}

TEST(Json, TextCarriesTheSameNumbers) {
  for (const char* expr : kCurves) {
    RankReport r = analyze(parse_curve(expr));
    ordered_json j = report_to_json(r);
    std::string text = report_to_text(r);
    auto line = [&](const std::string& label, const ordered_json& v) {
      return text.find("\n" + label + " = " + v.dump()) != std::string::npos;
    };
    EXPECT_TRUE(line("delta", j["delta"])) << expr;
    EXPECT_TRUE(line("epsilon", j["epsilon"])) << expr;
    EXPECT_TRUE(line("r", j["rank_geometric"])) << expr;
    EXPECT_TRUE(line("delta_k", j["delta_k"])) << expr;
    EXPECT_TRUE(line("Df", j["defect"]["direct"])) << expr;
    const std::string bounds =
        "bounds: " + j["bounds"][0].dump() + " <= r_k <= " + j["bounds"][1].dump();
    EXPECT_NE(text.find(bounds), std::string::npos) << expr;
    const std::string rk = j["rank_exact"].is_null() ? "undetermined" : j["rank_exact"].dump();
    EXPECT_NE(text.find("r_k = " + rk), std::string::npos) << expr;
    for (const auto& f : j["kodaira_fibers"]) {
      EXPECT_NE(text.find(f["type"].get<std::string>()), std::string::npos);
    }
    for (const auto& f : j["conic_fibers"]) {
      EXPECT_NE(text.find("(" + f["name"].get<std::string>() + ")"), std::string::npos);
    }
    EXPECT_NE(text.find("family: " + j["family"]["rule"].get<std::string>()), std::string::npos);
  }
}

TEST(Source, ExpressionAndJson) {
  EXPECT_EQ(curve_from_source("  T^2 + x^3 + 1\n").coefficients(), parse_curve("T^2 + x^3 + 1").coefficients());
  EXPECT_EQ(curve_from_source(R"({"a": ["T^2 + 1", "0", "0", "1"]})").conic().C, UniPoly(Var::x, {1, 0, 0, 1}));
  EXPECT_EQ(curve_from_source(R"({"A": "1", "B": "0", "C": "x^3 + 1"})").coefficients(),
            parse_curve("T^2 + x^3 + 1").coefficients());
  EXPECT_THROW(curve_from_source(""), ParseError);
  EXPECT_THROW(curve_from_source("x^3\nT"), ParseError);
  EXPECT_THROW(curve_from_source(R"({"a": ["1", "0"]})"), ParseError);
  EXPECT_THROW(curve_from_source(R"({"a": [1, 0, 0, 1]})"), ParseError);
  EXPECT_THROW(curve_from_source(R"({"A": "1"})"), ParseError);
  EXPECT_THROW(curve_from_source(R"({"a": )"), ParseError);
  EXPECT_THROW(curve_from_source(R"({"a": ["x", "0", "0", "1"]})"), ParseError);
  EXPECT_THROW(curve_from_source(R"({"a": ["0", "0", "0", "0"]})"), ValidationError);
}

TEST(SelfTest, DeterministicAndSummarised) {
  std::ostringstream a, b;
  SelfTestSummary sa = run_self_test(60, 123, a);
  SelfTestSummary sb = run_self_test(60, 123, b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(sa.failures, 0u);
  EXPECT_EQ(sa.curves, 60u);
  std::size_t total = 0;
  for (const auto& [df, n] : sa.defect_histogram) {
    EXPECT_GE(df, 0);
    EXPECT_LE(df, 2);
    total += n;
  }
  EXPECT_EQ(total, 60u);
  EXPECT_NE(a.str().find("Df histogram:"), std::string::npos);
  EXPECT_NE(a.str().find("family histogram:"), std::string::npos);

  std::ostringstream c;
  run_self_test(60, 124, c);
  EXPECT_NE(a.str(), c.str());
}

TEST(SelfTest, EmptyRun) {
  std::ostringstream out;
  SelfTestSummary s = run_self_test(0, 1, out);
  EXPECT_EQ(s.failures, 0u);
  EXPECT_EQ(s.curves, 0u);
  EXPECT_TRUE(out.str().empty());
}

TEST(SelfTest, SamplerRespectsHeight) {
  CurveSampler sampler(77, 1);
  std::size_t rejected = 0;
  for (int i = 0; i < 100; ++i) {
    CurveInput c = sampler.next(&rejected);
    for (const auto& ai : c.coefficients()) {
      EXPECT_LE(ai.degree(), 2);
      for (const auto& coef : ai.coeffs()) EXPECT_LE(abs(coef), 1);
    }
  }
  EXPECT_GT(rejected, 0u);
}
