#pragma once

// Rendering of rank reports (text and JSON) and the randomized self-test.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>

#include <json.hpp>

#include "conicrank/rank.hpp"

namespace conicrank {

/// Coefficients as [numerator, denominator] string pairs, lowest degree first.
nlohmann::ordered_json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const nlohmann::ordered_json& j, Var var);

nlohmann::ordered_json report_to_json(const RankReport& r);
std::string report_to_text(const RankReport& r);

/// Reads a curve from text: a single expression line, or a JSON object
/// {"a": [a0, a1, a2, a3]} or {"A": ..., "B": ..., "C": ...} whose values are
/// expression strings.
CurveInput curve_from_source(const std::string& content);

struct SelfTestSummary {
  std::size_t curves = 0;
  std::size_t rejected = 0;
  std::size_t failures = 0;
  std::map<int, std::size_t> defect_histogram;
  std::map<std::string, std::size_t> family_histogram;
};

/// Random curves with a_i coefficients in {-3..3}; invalid draws are
/// rejected and counted. Each accepted curve goes through the pipeline, which
/// checks the component sum, Euler sum, delta >= r and table agreement; Df
/// must lie in {0, 1, 2}. Stops at the first failure and prints the curve.
/// Output is a pure function of (count, seed).
SelfTestSummary run_self_test(std::size_t count, std::uint64_t seed, std::ostream& out);

/// The random generator behind run_self_test: the next valid curve.
class CurveSampler {
 public:
  explicit CurveSampler(std::uint64_t seed, int height = 3);
  CurveInput next(std::size_t* rejected = nullptr);

 private:
  std::mt19937_64 engine_;
  int height_;
  int draw();
};

}  // namespace conicrank
