#include "conicrank/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "conicrank/errors.hpp"
#include "conicrank/expr.hpp"

namespace conicrank {

using nlohmann::ordered_json;

namespace {

ordered_json rational_to_json(const Rational& q) { return ordered_json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Rational rational_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw ParseError("expected a [numerator, denominator] pair of strings", 0);
  }
  Integer num, den;
  if (num.set_str(j[0].get<std::string>(), 10) != 0 || den.set_str(j[1].get<std::string>(), 10) != 0) {
    throw ParseError("malformed integer in rational pair", 0);
  }
  return make_rational(num, den);
}

ordered_json factored_to_json(const FactoredPoly& f) {
  ordered_json factors = ordered_json::array();
  for (const auto& [q, e] : f.factors) factors.push_back({{"factor", poly_to_json(q)}, {"multiplicity", e}});
  return {{"unit", rational_to_json(f.unit)}, {"factors", factors}};
}

ordered_json place_json(const Place& p) { return p.factor ? poly_to_json(*p.factor) : ordered_json("inf"); }

ordered_json valuation_json(int v) { return v == kInfiniteValuation ? ordered_json("inf") : ordered_json(v); }

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string factored_string(const FactoredPoly& f) {
  std::string s = f.unit.get_str();
  for (const auto& [q, e] : f.factors) {
    s += " * (" + q.to_string() + ")";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string pad(std::string s, std::size_t width) {
  s.append(s.size() < width ? width - s.size() : 2, ' ');
  return s;
}

}  // namespace

ordered_json poly_to_json(const UniPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p.coeffs()) out.push_back(rational_to_json(c));
  return out;
}

UniPoly poly_from_json(const ordered_json& j, Var var) {
  if (!j.is_array()) throw ParseError("expected a coefficient array", 0);
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return UniPoly(var, std::move(coeffs));
}

ordered_json report_to_json(const RankReport& r) {
  ordered_json j;
  const ConicForm& cf = r.curve.conic();
  ordered_json a = ordered_json::array();
  for (int i = 0; i < 4; ++i) a.push_back(poly_to_json(r.curve.a(i)));
  j["curve"] = {{"expression", r.curve.to_string()},
                {"a", a},
                {"A", poly_to_json(cf.A)},
                {"B", poly_to_json(cf.B)},
                {"C", poly_to_json(cf.C)},
                {"delta_conic", factored_to_json(r.delta_conic_factored)},
                {"delta_std", factored_to_json(r.delta_std_factored)}};

  ordered_json conic = ordered_json::array();
  for (const auto& f : r.conic_fibers) {
    conic.push_back({{"location", f.location ? poly_to_json(*f.location) : ordered_json("inf")},
                     {"degree", f.degree},
                     {"kind", f.kind == ConicKind::A ? "A" : "D"},
                     {"n", f.n},
                     {"name", f.name()}});
  }
  j["conic_fibers"] = conic;

  ordered_json kod = ordered_json::array();
  for (const auto& f : r.kodaira_fibers) {
    kod.push_back({{"place", place_json(f.place)},
                   {"degree", f.place.degree()},
                   {"type", f.name()},
                   {"n", f.n},
                   {"m", f.m},
                   {"euler", f.euler},
                   {"v_c4", valuation_json(f.local.v_c4)},
                   {"v_c6", valuation_json(f.local.v_c6)},
                   {"v_delta", valuation_json(f.local.v_delta)},
                   {"minimalization_steps", f.local.minimalization_steps}});
  }
  j["kodaira_fibers"] = kod;
  j["delta"] = r.delta;
  j["epsilon"] = r.epsilon;
  j["rank_geometric"] = r.rank_geometric;

  ordered_json shared = ordered_json::array();
  for (const auto& s : r.defect.shared) {
    shared.push_back({{"place", place_json(s.place)}, {"degree", s.place.degree()}, {"type", s.name()}});
  }
  j["defect"] = {{"direct", r.defect.df_direct},
                 {"table", optional_json(r.defect.df_table)},
                 {"consistent", r.defect.consistent},
                 {"shared_fibers", shared}};
  j["delta_k"] = r.delta_k;

  ordered_json orbits = ordered_json::array();
  for (const auto& o : r.orbits) {
    ordered_json cert = nullptr;
    if (o.certificate) {
      cert = {{"prime", o.certificate->prime}, {"root", o.certificate->root}, {"residue", o.certificate->residue}};
    }
    orbits.push_back({{"factor", poly_to_json(o.factor)},
                      {"degree", o.factor.degree()},
                      {"kind", o.kind == ConicKind::A ? "A" : "D"},
                      {"status", to_string(o.status)},
                      {"counted", o.counted},
                      {"witness", o.witness ? poly_to_json(o.witness->rep()) : ordered_json(nullptr)},
                      {"certificate", cert}});
  }
  j["orbits"] = orbits;
  j["bounds"] = ordered_json::array({r.bounds.first, r.bounds.second});

  ordered_json tags = ordered_json::array();
  for (const auto& t : r.family.tags) tags.push_back(t);
  j["family"] = {{"rule", to_string(r.family.family)},
                 {"mu", r.family.mu ? rational_to_json(*r.family.mu) : ordered_json(nullptr)},
                 {"tags", tags}};
  j["rank_exact"] = optional_json(r.family.rank_exact);

  ordered_json ver = ordered_json::array();
  for (const auto& v : r.verifications) ver.push_back({{"name", v.name}, {"status", v.status}, {"detail", v.detail}});
  j["verifications"] = ver;
  return j;
}

std::string report_to_text(const RankReport& r) {
  std::ostringstream out;
  const ConicForm& cf = r.curve.conic();
  out << "curve: y^2 = " << r.curve.to_string() << "\n";
  out << "conic form: A = " << cf.A.to_string() << ", B = " << cf.B.to_string() << ", C = " << cf.C.to_string()
      << "\n";
  out << "B^2 - 4AC = " << factored_string(r.delta_conic_factored) << "\n";
  out << "Delta = " << factored_string(r.delta_std_factored) << "\n\n";

  out << "conic fibers\n";
  out << "  " << pad("location", 28) << pad("deg", 5) << pad("kind", 6) << "n\n";
  for (const auto& f : r.conic_fibers) {
    out << "  " << pad(f.location_string(), 28) << pad(std::to_string(f.degree), 5)
        << pad(f.kind == ConicKind::A ? "A" : "D", 6) << f.n << "   (" << f.name() << ")\n";
  }
  out << "\nkodaira fibers\n";
  out << "  " << pad("place", 28) << pad("deg", 5) << pad("type", 7) << pad("m", 4) << pad("euler", 7)
      << "v(c4, c6, Delta)\n";
  for (const auto& f : r.kodaira_fibers) {
    out << "  " << pad(f.place.to_string(), 28) << pad(std::to_string(f.place.degree()), 5) << pad(f.name(), 7)
        << pad(std::to_string(f.m), 4) << pad(std::to_string(f.euler), 7) << "(" << valuation_string(f.local.v_c4)
        << ", " << valuation_string(f.local.v_c6) << ", " << valuation_string(f.local.v_delta) << ")";
    if (f.local.minimalization_steps) out << " after " << f.local.minimalization_steps << " minimalization step(s)";
    out << "\n";
  }
  out << "\ndelta = " << r.delta << "\nepsilon = " << r.epsilon << "\nr = " << r.rank_geometric << "\n";
  out << "Df = " << r.defect.df_direct << " (delta - r), ";
  out << (r.defect.df_table ? std::to_string(*r.defect.df_table) : std::string("n/a")) << " (table";
  if (!r.defect.shared.empty()) {
    out << ": ";
    for (std::size_t i = 0; i < r.defect.shared.size(); ++i) {
      if (i) out << ", ";
      out << r.defect.shared[i].name() << " at " << r.defect.shared[i].place.to_string();
    }
  }
  out << ")" << (r.defect.consistent ? "" : " MISMATCH") << "\n";

  out << "delta_k = " << r.delta_k << "\n";
  for (const auto& o : r.orbits) {
    out << "  " << pad(o.factor.to_string(), 28) << pad(to_string(o.status), 20);
    if (o.witness) out << "sqrt = " << o.witness->rep().to_string();
    if (o.certificate) {
      out << "nonresidue " << o.certificate->residue << " mod " << o.certificate->prime << " at theta = "
          << o.certificate->root;
    }
    out << "\n";
  }
  out << "bounds: " << r.bounds.first << " <= r_k <= " << r.bounds.second << "\n";
  out << "family: " << to_string(r.family.family);
  if (r.family.mu) out << " (mu = " << r.family.mu->get_str() << ")";
  for (const auto& t : r.family.tags) out << " [" << t << "]";
  out << "\n";
  out << "r_k = " << (r.family.rank_exact ? std::to_string(*r.family.rank_exact) : std::string("undetermined")) << "\n";
  if (!r.verifications.empty()) {
    out << "\nverifications\n";
    for (const auto& v : r.verifications) out << "  " << pad(v.name, 16) << pad(v.status, 16) << v.detail << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

CurveInput curve_from_source(const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input", 0);
  if (content[first] != '{') {
    std::string line = content.substr(first);
    const auto nl = line.find_first_of("\r\n");
    if (nl != std::string::npos) {
      if (line.find_first_not_of(" \t\r\n", nl) != std::string::npos) {
        throw ParseError("expression input must be a single line", nl);
      }
      line.resize(nl);
    }
    return parse_curve(line);
  }
  ordered_json j;
  try {
    j = ordered_json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  auto poly_field = [&](const ordered_json& v, Var var, const std::string& name) {
    if (!v.is_string()) throw ParseError("\"" + name + "\" must be an expression string", 0);
    return parse_univariate(v.get<std::string>(), var);
  };
  if (j.contains("a")) {
    const auto& arr = j["a"];
    if (!arr.is_array() || arr.size() != 4) throw ParseError("\"a\" must be an array of four expressions", 0);
    std::array<UniPoly, 4> a;
    for (std::size_t i = 0; i < 4; ++i) a[i] = poly_field(arr[i], Var::T, "a" + std::to_string(i));
    return CurveInput::from_coefficients(a);
  }
  if (j.contains("A") && j.contains("B") && j.contains("C")) {
    return CurveInput::from_conic(
        {poly_field(j["A"], Var::x, "A"), poly_field(j["B"], Var::x, "B"), poly_field(j["C"], Var::x, "C")});
  }
  throw ParseError("JSON input needs \"a\" or all of \"A\", \"B\", \"C\"", 0);
}

CurveSampler::CurveSampler(std::uint64_t seed, int height) : engine_(seed), height_(height) {}

int CurveSampler::draw() {
  const auto span = static_cast<std::uint64_t>(2 * height_ + 1);
  return static_cast<int>(engine_() % span) - height_;
}

CurveInput CurveSampler::next(std::size_t* rejected) {
  for (;;) {
    std::array<UniPoly, 4> a;
    for (auto& ai : a) {
      const long c0 = draw(), c1 = draw(), c2 = draw();
      ai = UniPoly(Var::T, {c0, c1, c2});
    }
    try {
      return CurveInput::from_coefficients(a);
    } catch (const ValidationError&) {
      if (rejected) ++*rejected;
    }
  }
}

SelfTestSummary run_self_test(std::size_t count, std::uint64_t seed, std::ostream& out) {
  SelfTestSummary s;
  if (count == 0) return s;
  CurveSampler sampler(seed);
  for (std::size_t i = 0; i < count; ++i) {
    CurveInput c = sampler.next(&s.rejected);
    ++s.curves;
    std::string failure;
    try {
      RankReport r = analyze(c);
      if (r.defect.df_direct < 0 || r.defect.df_direct > 2) failure = "Df outside {0, 1, 2}";
      if (r.delta < r.rank_geometric) failure = "delta < r";
      if (r.defect.df_table && *r.defect.df_table != r.defect.df_direct) failure = "table defect differs";
      if (!euler_check(r.kodaira_fibers)) failure = "Euler sum differs from 12";
      if (!component_sum_check(r.conic_fibers)) failure = "component sum differs from 8";
      if (failure.empty()) {
        out << pad("#" + std::to_string(i + 1), 6) << pad(c.to_string(), 58) << " delta=" << r.delta
            << " r=" << r.rank_geometric << " Df=" << r.defect.df_direct << " dk=" << r.delta_k
            << " family=" << to_string(r.family.family) << " r_k="
            << (r.family.rank_exact ? std::to_string(*r.family.rank_exact) : std::string("?")) << "\n";
        ++s.defect_histogram[r.defect.df_direct];
        ++s.family_histogram[to_string(r.family.family)];
      }
    } catch (const ConsistencyError& e) {
      failure = e.kind() + ": " + e.what();
    } catch (const ContractViolation& e) {
      failure = std::string("ContractViolation: ") + e.what();
    }
    if (!failure.empty()) {
      ++s.failures;
      out << "FAIL at curve #" << (i + 1) << ": " << failure << "\n";
      out << "rerun: conicrank --expr \"" << c.to_string() << "\"\n";
      break;
    }
  }
  out << "curves: " << s.curves << ", rejected draws: " << s.rejected << "\n";
  out << "Df histogram:";
  for (const auto& [df, n] : s.defect_histogram) out << " " << df << ":" << n;
  out << "\nfamily histogram:";
  for (const auto& [f, n] : s.family_histogram) out << " " << f << ":" << n;
  out << "\n" << (s.failures ? "self-test FAILED" : "self-test passed") << "\n";
  return s;
}

}  // namespace conicrank
