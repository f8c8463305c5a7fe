// conicrank: rank report for y^2 = a3 x^3 + a2 x^2 + a1 x + a0 over Q(T).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "conicrank/errors.hpp"
#include "conicrank/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitConsistency = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw conicrank::ValidationError("cannot read input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mordell-Weil rank bounds for cubic-in-x elliptic surfaces via conic bundles"};
  std::string input_path, expr, format = "text";
  bool verify_points = false;
  std::optional<std::size_t> self_test;
  std::uint64_t seed = 20240601;

  auto* in_opt = app.add_option("--input", input_path, "file holding an expression line or a JSON curve");
  auto* ex_opt = app.add_option("--expr", expr, "curve as text, e.g. \"T^2 + x^3 + 1\"");
  in_opt->excludes(ex_opt);
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verify-points", verify_points, "construct the points over each A-kind fiber and check them");
  auto* st_opt = app.add_option("--self-test", self_test, "run the invariant sweep on N random curves");
  app.add_option("--seed", seed, "seed for --self-test");
  st_opt->excludes(in_opt)->excludes(ex_opt);
  CLI11_PARSE(app, argc, argv);

  if (self_test) {
    auto summary = conicrank::run_self_test(*self_test, seed, std::cout);
    return summary.failures ? kExitConsistency : kExitOk;
  }
  if (input_path.empty() && expr.empty()) {
    std::cerr << "error: give exactly one of --input, --expr or --self-test\n";
    return kExitInput;
  }

  std::optional<conicrank::CurveInput> curve;
  try {
    curve = expr.empty() ? conicrank::curve_from_source(read_file(input_path)) : conicrank::parse_curve(expr);
  } catch (const conicrank::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const conicrank::Error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    const conicrank::RankReport report = conicrank::analyze(*curve, verify_points);
    if (format == "json") {
      std::cout << conicrank::report_to_json(report).dump(2) << "\n";
    } else {
      std::cout << conicrank::report_to_text(report);
    }
    return kExitOk;
  } catch (const conicrank::ConsistencyError& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const conicrank::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
