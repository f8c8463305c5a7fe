#include "conicrank/rank.hpp"

#include <algorithm>

#include "conicrank/errors.hpp"

namespace conicrank {

int defect_direct(int delta, int r) {
  const int df = delta - r;
  if (df < 0) {
    throw ConsistencyError("NegativeDefect", "delta = " + std::to_string(delta) + " < r = " + std::to_string(r));
  }
  return df;
}

std::vector<SharedPlace> shared_fiber_places(const CurveInput& c, const ConicFiber& g_inf) {
  const UniPoly& a3 = c.a(3);
  std::vector<SharedPlace> out;
  switch (a3.degree()) {
    case 0:
      out.push_back({Place::infinity(), 2});
      break;
    case 1:
      out.push_back({Place::finite(a3.monic()), 1});
      out.push_back({Place::infinity(), 1});
      break;
    case 2:
      for (const auto& [q, e] : factor(a3).factors) out.push_back({Place::finite(q), e});
      break;
    default:
      throw ContractViolation("a3 must be a nonzero polynomial of degree <= 2");
  }
  const bool doubled = std::any_of(out.begin(), out.end(), [](const SharedPlace& s) { return s.multiplicity == 2; });
  if (doubled != (g_inf.n >= 4)) {
    throw ConsistencyError("SharedFiberInconsistency",
                           std::string(doubled ? "a3 has a double zero" : "a3 has simple zeros") +
                               " but the conic fiber at infinity is " + g_inf.name());
  }
  return out;
}

namespace {

bool is_kind(const SharedFiber& s, KodairaKind k) { return s.fiber && s.fiber->kind == k; }

std::string describe(const ConicFiber& g, const std::vector<SharedFiber>& shared) {
  std::string s = g.name() + " with {";
  for (std::size_t i = 0; i < shared.size(); ++i) {
    if (i) s += ", ";
    s += shared[i].name() + " at " + shared[i].place.to_string();
  }
  return s + "}";
}

}  // namespace

int defect_table(const ConicFiber& g_inf, const std::vector<SharedFiber>& shared) {
  if (g_inf.n == 3) {
    int count = 0;
    for (const auto& s : shared) {
      const bool counts = is_kind(s, KodairaKind::IV) || (is_kind(s, KodairaKind::I_n) && s.fiber->n >= 3);
      if (counts) count += s.place.degree();
    }
    return count;
  }
  if (shared.size() == 1 && shared[0].fiber) {
    const KodairaFiber& f = *shared[0].fiber;
    const int n = g_inf.n;
    const bool star = f.kind == KodairaKind::I_n_star;
    if (n == 4 && f.kind == KodairaKind::I_n && f.n == 4) return 0;
    if (n == 4 && f.kind == KodairaKind::I_n && f.n >= 5) return 1;
    if (n == 5 && star && f.n == 1) return 1;
    if (n == 5 && star && f.n >= 2) return 0;
    if (n == 6 && f.kind == KodairaKind::IV_star) return 1;
    if (n == 7 && f.kind == KodairaKind::III_star) return 0;
    if (n == 9 && f.kind == KodairaKind::II_star) return 0;
    if (star && n == f.n + 5) return 0;
  }
  throw ConsistencyError("TableMismatch", "no defect row for " + describe(g_inf, shared));
}

std::string to_string(SquareStatus s) {
  switch (s) {
    case SquareStatus::ASquare: return "A_square";
    case SquareStatus::ANonsquare: return "A_nonsquare";
    case SquareStatus::AZeroCSquare: return "A_zero_C_square";
    case SquareStatus::AZeroCNonsquare: return "A_zero_C_nonsquare";
    case SquareStatus::DExcluded: return "D_excluded";
  }
  return "?";
}

std::pair<int, std::vector<OrbitRecord>> delta_k(const std::vector<ConicFiber>& fibers) {
  int count = 0;
  std::vector<OrbitRecord> records;
  for (const auto& f : fibers) {
    if (f.is_infinity()) continue;
    OrbitRecord rec;
    rec.factor = *f.location;
    rec.kind = f.kind;
    if (f.kind == ConicKind::D) {
      rec.status = SquareStatus::DExcluded;
    } else {
      const bool a_zero = f.a_residue->is_zero();
      const NFElement& value = a_zero ? *f.c_residue : *f.a_residue;
      SquareTest t = is_square_nf(*f.field, value);
      if (t.witness && !(*t.witness * *t.witness == value)) {
        throw ConsistencyError("SquareWitness", "witness does not square to the residue at " + f.location_string());
      }
      rec.witness = t.witness;
      rec.certificate = t.certificate;
      rec.counted = t.witness.has_value();
      if (a_zero) {
        rec.status = rec.counted ? SquareStatus::AZeroCSquare : SquareStatus::AZeroCNonsquare;
      } else {
        rec.status = rec.counted ? SquareStatus::ASquare : SquareStatus::ANonsquare;
      }
    }
    if (rec.counted) ++count;
    records.push_back(std::move(rec));
  }
  return {count, std::move(records)};
}

std::pair<int, int> rank_bounds(int dk, int df) { return {std::max(0, dk - df), dk}; }

std::string to_string(Family f) {
  switch (f) {
    case Family::DefectZero: return "defect_zero";
    case Family::ConstantA: return "constant_A";
    case Family::AZeroCubicB: return "A_zero_cubic_B";
    case Family::BoundsOnly: return "bounds_only";
  }
  return "?";
}

namespace {

void require_defect_one(int df, const char* rule) {
  if (df != 1) {
    throw ConsistencyError("FamilyDefect", std::string(rule) + " shape with Df = " + std::to_string(df) +
                                               ", expected 1");
  }
}

bool six_square_roots(const UniPoly& disc) {
  if (disc.degree() != 6) return false;
  FactoredPoly f = factor(disc);
  if (f.factors.size() != 6) return false;
  for (const auto& [g, e] : f.factors) {
    const Rational root = -g.coeff(0);
    if (sgn(root) == 0 || !is_square_rational(root)) return false;
  }
  return true;
}

}  // namespace

FamilyResult detect_family(const CurveInput& c, const WeierstrassData& w, int df, int dk) {
  const ConicForm& cf = c.conic();
  FamilyResult out;
  if (df == 0) {
    out.family = Family::DefectZero;
    out.rank_exact = dk;
  } else if (auto mu = constant_A_shape(cf)) {
    require_defect_one(df, "constant-A");
    out.family = Family::ConstantA;
    out.mu = *mu;
    out.rank_exact = is_square_rational(*mu) ? dk - 1 : dk;
  } else if (auto shape = cubic_B_shape(cf)) {
    require_defect_one(df, "A = 0 cubic-B");
    out.family = Family::AZeroCubicB;
    out.mu = shape->mu;
    out.rank_exact = is_square_rational(shape->mu) ? dk - 1 : dk;
  }

  const UniPoly& a3 = c.a(3);
  if (a3.degree() >= 1 && w.gamma.degree() == 8 && sgn(resultant(a3, w.gamma)) != 0) {
    out.tags.push_back("generic_nonconstant_a3");
  }
  if (cf.A.is_zero() && cf.B.degree() <= 2 && cf.C.degree() == 3) out.tags.push_back("A_zero_low_degree_B");
  const UniPoly half_B = cf.B.scaled(Rational(1, 2));
  if (cf.A == UniPoly::monomial(Var::x, 1, 3) && half_B.degree() == 3 && half_B.is_monic() &&
      sgn(half_B.coeff(0)) != 0 && six_square_roots(delta_conic(cf))) {
    out.tags.push_back("x3_leading_six_square_roots");
  }
  return out;
}

RankReport analyze(const CurveInput& c, bool verify_points) {
  RankReport rep(c);
  const ConicForm& cf = c.conic();
  rep.weierstrass = weierstrass_invariants(c);
  const WeierstrassData& w = rep.weierstrass;
  rep.delta_std_factored = factor(w.delta_std);
  rep.delta_conic_factored = factor(delta_conic(cf));

  rep.kodaira_fibers = kodaira_fibers(w);
  if (!euler_check(rep.kodaira_fibers)) {
    throw ConsistencyError("RationalityViolation",
                           "sum of Euler numbers is " + std::to_string(euler_sum(rep.kodaira_fibers)) + ", not 12");
  }
  rep.rank_geometric = shioda_tate_rank(rep.kodaira_fibers);

  rep.conic_fibers = classify_conic_fibers(cf);
  if (!component_sum_check(rep.conic_fibers)) {
    throw ConsistencyError("ComponentSumViolation",
                           "sum of deg*(n-1) is " + std::to_string(component_sum(rep.conic_fibers)) + ", not 8");
  }
  const DeltaEpsilon de = delta_epsilon(rep.conic_fibers);
  rep.delta = de.delta;
  rep.epsilon = de.epsilon;

  DefectReport& d = rep.defect;
  d.df_direct = defect_direct(rep.delta, rep.rank_geometric);
  if (d.df_direct > 2) {
    throw ConsistencyError("DefectOutOfRange", "Df = " + std::to_string(d.df_direct) + " exceeds 2");
  }
  const ConicFiber& g_inf = infinity_fiber(rep.conic_fibers);
  for (const auto& sp : shared_fiber_places(c, g_inf)) {
    SharedFiber s{sp.place, std::nullopt};
    for (const auto& kf : rep.kodaira_fibers) {
      if (kf.place == sp.place) s.fiber = kf;
    }
    d.shared.push_back(std::move(s));
  }
  d.df_table = defect_table(g_inf, d.shared);
  d.consistent = *d.df_table == d.df_direct;
  if (!d.consistent) {
    throw ConsistencyError("DefectMismatch", "delta - r = " + std::to_string(d.df_direct) + " but the table gives " +
                                                 std::to_string(*d.df_table) + " for " + describe(g_inf, d.shared));
  }

  auto [dk, orbits] = delta_k(rep.conic_fibers);
  rep.delta_k = dk;
  rep.orbits = std::move(orbits);
  rep.bounds = rank_bounds(dk, d.df_direct);
  rep.family = detect_family(c, w, d.df_direct, dk);
  if (rep.family.rank_exact &&
      (*rep.family.rank_exact < rep.bounds.first || *rep.family.rank_exact > rep.bounds.second)) {
    throw ConsistencyError("RankOutOfBounds", "exact rank " + std::to_string(*rep.family.rank_exact) +
                                                  " outside the bounds");
  }

  if (verify_points) {
    for (const auto& f : rep.conic_fibers) {
      if (f.is_infinity()) continue;
      if (f.kind == ConicKind::D) {
        bool ok = verify_two_torsion(c, f);
        rep.verifications.push_back({"two_torsion", ok ? "pass" : "fail", "(a3*theta, 0) at " + f.location_string()});
        continue;
      }
      AnyPoint plus = construct_point(c, *f.location, 1);
      AnyPoint minus = construct_point(c, *f.location, -1);
      bool inverse = std::visit(
          [&](const auto& p) {
            using CP = std::decay_t<decltype(p)>;
            const auto& m = std::get<CP>(minus);
            return negate(p.curve, p.point) == m.point;
          },
          plus);
      rep.verifications.push_back({"point", inverse ? "pass" : "fail",
                                   "P at " + f.location_string() + " = " + point_string(plus) +
                                       "; other root gives -P"});
    }
    RelationCheck rc = verify_linear_relation(c, rep.conic_fibers);
    std::string detail = rc.detail;
    if (!rc.field.empty()) detail += " over " + rc.field;
    rep.verifications.push_back({"linear_relation", to_string(rc.status), detail});
    if (rc.triple_sum) {
      rep.verifications.push_back({"triple_sum", *rc.triple_sum ? "pass" : "fail",
                                   "points over the three roots of B sum to O"});
    }
  }
  return rep;
}

}  // namespace conicrank
