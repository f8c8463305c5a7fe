#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "conicrank/errors.hpp"
#include "conicrank/expr.hpp"
#include "conicrank/report.hpp"

namespace py = pybind11;
using namespace conicrank;

namespace {

UniPoly parse_x(const std::string& s) { return parse_univariate(s, Var::x); }

int valuation_arg(const std::optional<int>& v) { return v ? *v : kInfiniteValuation; }

}  // namespace

PYBIND11_MODULE(_conicrank, m) {
  m.doc() = "Exact rank bounds for y^2 = cubic in x over Q(T), via conic bundles";

  auto base = py::register_exception<Error>(m, "ConicrankError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  // The report crosses over as JSON text; the package wrapper decodes it.
  m.def(
      "analyze_json",
      [](const std::string& expr, bool verify_points) {
        return report_to_json(analyze(parse_curve(expr), verify_points)).dump(2);
      },
      py::arg("expr"), py::arg("verify_points") = false);

  m.def(
      "factor",
      [](const std::string& poly) {
        FactoredPoly f = factor(parse_x(poly));
        std::vector<std::pair<std::string, int>> out;
        for (const auto& [q, e] : f.factors) out.emplace_back(q.to_string(), e);
        return std::make_pair(f.unit.get_str(), out);
      },
      py::arg("poly"), "Unit and monic irreducible factors with multiplicities of a polynomial in x.");

  m.def(
      "resultant", [](const std::string& p, const std::string& q) { return resultant(parse_x(p), parse_x(q)).get_str(); },
      py::arg("p"), py::arg("q"));

  m.def(
      "is_square_in_field",
      [](const std::string& modulus, const std::string& element) -> std::optional<std::string> {
        NumberField K(parse_x(modulus));
        auto w = square_root(K, K.reduce(parse_x(element)));
        if (!w) return std::nullopt;
        return w->rep().to_string();
      },
      py::arg("modulus"), py::arg("element"),
      "A square root of element in Q[x]/(modulus), or None.");

  m.def(
      "classify_kodaira",
      [](std::optional<int> v_c4, std::optional<int> v_c6, int v_delta) {
        LocalData d{Place::finite(UniPoly::variable(Var::T)), valuation_arg(v_c4), valuation_arg(v_c6), v_delta, 0};
        KodairaFiber f = classify_kodaira(d);
        return py::make_tuple(f.name(), f.m, f.euler);
      },
      py::arg("v_c4"), py::arg("v_c6"), py::arg("v_delta"),
      "(type, component count, Euler number) for a minimal valuation triple; None means infinite.");

  m.def(
      "self_test",
      [](std::size_t count, std::uint64_t seed) {
        std::ostringstream out;
        SelfTestSummary s = run_self_test(count, seed, out);
        return py::make_tuple(s.failures == 0, out.str());
      },
      py::arg("count"), py::arg("seed") = 20240601);
}
