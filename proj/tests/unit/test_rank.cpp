#include <gtest/gtest.h>

#include "conicrank/errors.hpp"
#include "conicrank/rank.hpp"
#include "conicrank/report.hpp"

using namespace conicrank;

namespace {

UniPoly T(std::initializer_list<long> c) { return UniPoly(Var::T, c); }

KodairaFiber fiber(KodairaKind kind, int n, Place place = Place::infinity()) {
  KodairaFiber f{std::move(place)};
  f.kind = kind;
  f.n = n;
  return f;
}

ConicFiber d_at_infinity(int n) {
  ConicFiber g;
  g.kind = ConicKind::D;
  g.n = n;
  return g;
}

SharedFiber shared(KodairaKind kind, int n, Place place = Place::infinity()) {
  return {place, fiber(kind, n, place)};
}

}  // namespace

TEST(Defect, Direct) {
  EXPECT_EQ(defect_direct(2, 2), 0);
  EXPECT_EQ(defect_direct(3, 2), 1);
  EXPECT_EQ(defect_direct(8, 8), 0);
  EXPECT_THROW(defect_direct(1, 2), ConsistencyError);
}

TEST(Defect, TableRows) {
  EXPECT_EQ(defect_table(d_at_infinity(5), {shared(KodairaKind::I_n_star, 2)}), 0);
  EXPECT_EQ(defect_table(d_at_infinity(5), {shared(KodairaKind::I_n_star, 1)}), 1);
  EXPECT_EQ(defect_table(d_at_infinity(6), {shared(KodairaKind::IV_star, 0)}), 1);
  EXPECT_EQ(defect_table(d_at_infinity(7), {shared(KodairaKind::III_star, 0)}), 0);
  EXPECT_EQ(defect_table(d_at_infinity(9), {shared(KodairaKind::II_star, 0)}), 0);
  EXPECT_EQ(defect_table(d_at_infinity(4), {shared(KodairaKind::I_n, 4)}), 0);
  EXPECT_EQ(defect_table(d_at_infinity(4), {shared(KodairaKind::I_n, 6)}), 1);
  EXPECT_EQ(defect_table(d_at_infinity(8), {shared(KodairaKind::I_n_star, 3)}), 0);
  // D3 counts shared fibers of type IV or I_m with m >= 3.
  const Place t = Place::finite(T({0, 1}));
  EXPECT_EQ(defect_table(d_at_infinity(3), {shared(KodairaKind::IV, 0, t), shared(KodairaKind::I_n_star, 0)}), 1);
  EXPECT_EQ(defect_table(d_at_infinity(3), {shared(KodairaKind::I_n, 2, t), shared(KodairaKind::I_n, 2)}), 0);
  EXPECT_EQ(defect_table(d_at_infinity(3), {shared(KodairaKind::I_n, 3, t), shared(KodairaKind::I_n, 4)}), 2);
  EXPECT_EQ(defect_table(d_at_infinity(3), {SharedFiber{t, std::nullopt}, shared(KodairaKind::I_n, 4)}), 1);
  // A conjugate pair of zeros of a3 contributes its degree.
  const Place q = Place::finite(T({1, 0, 1}));
  EXPECT_EQ(defect_table(d_at_infinity(3), {shared(KodairaKind::I_n, 3, q)}), 2);
}

TEST(Defect, TableMismatchIsReported) {
  EXPECT_THROW(defect_table(d_at_infinity(6), {shared(KodairaKind::I_n, 2)}), ConsistencyError);
  EXPECT_THROW(defect_table(d_at_infinity(5), {SharedFiber{Place::infinity(), std::nullopt}}), ConsistencyError);
}

TEST(SharedPlaces, ZerosOfA3) {
  CurveInput ex = parse_curve("(x^2-1)*T + x^3 - x + 4");
  auto p = shared_fiber_places(ex, infinity_fiber(classify_conic_fibers(ex.conic())));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(p[0].place.is_infinity());

  CurveInput b = parse_curve("(x^3-x)*T + 4");
  const auto& g = infinity_fiber(classify_conic_fibers(b.conic()));
  EXPECT_EQ(g.name(), "D3");
  p = shared_fiber_places(b, g);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(*p[0].place.factor, T({0, 1}));
  EXPECT_TRUE(p[1].place.is_infinity());

  CurveInput dbl = parse_curve("T^2*x^3 + x^2 + T*x + 1");
  const auto& gd = infinity_fiber(classify_conic_fibers(dbl.conic()));
  EXPECT_GE(gd.n, 4);
  p = shared_fiber_places(dbl, gd);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].multiplicity, 2);
  EXPECT_THROW(shared_fiber_places(b, d_at_infinity(5)), ConsistencyError);
}

TEST(DeltaK, Examples) {
  auto [dk, orbits] = delta_k(classify_conic_fibers(parse_curve("(x^2-1)*T + x^3 - x + 4").conic()));
  EXPECT_EQ(dk, 2);
  for (const auto& o : orbits) EXPECT_EQ(o.status, SquareStatus::AZeroCSquare);

  std::tie(dk, orbits) = delta_k(classify_conic_fibers(parse_curve("T^2 + x^3 + 1").conic()));
  EXPECT_EQ(dk, 2);
  std::tie(dk, orbits) = delta_k(classify_conic_fibers(parse_curve("2T^2 + x^3 + 1").conic()));
  EXPECT_EQ(dk, 0);
  for (const auto& o : orbits) {
    EXPECT_EQ(o.status, SquareStatus::ANonsquare);
    EXPECT_FALSE(o.counted);
  }
}

TEST(DeltaK, DFibersAreExcluded) {
  auto [dk, orbits] =
      delta_k(classify_conic_fibers(parse_curve("T*x^3 + (T^2+T+1)*x^2 + (2T^2+T+2)*x + (T^2+T+1)").conic()));
  int excluded = 0;
  for (const auto& o : orbits) excluded += o.status == SquareStatus::DExcluded;
  EXPECT_EQ(excluded, 1);
  EXPECT_LE(dk, 3);
}

TEST(Bounds, Examples) {
  EXPECT_EQ(rank_bounds(2, 0), std::make_pair(2, 2));
  EXPECT_EQ(rank_bounds(2, 1), std::make_pair(1, 2));
  EXPECT_EQ(rank_bounds(0, 2), std::make_pair(0, 0));
}

TEST(Analyze, ExampleFromTheLiterature) {
  RankReport r = analyze(parse_curve("(x^2-1)*T + x^3 - x + 4"));
  EXPECT_EQ(r.delta, 2);
  EXPECT_EQ(r.rank_geometric, 2);
  EXPECT_EQ(r.defect.df_direct, 0);
  EXPECT_EQ(r.defect.df_table, 0);
  EXPECT_EQ(r.delta_k, 2);
  EXPECT_EQ(r.family.family, Family::DefectZero);
  EXPECT_EQ(r.family.rank_exact, 2);
}

TEST(Analyze, ConstantA) {
  RankReport r = analyze(parse_curve("T^2 + x^3 + 1"));
  EXPECT_EQ(r.delta, 3);
  EXPECT_EQ(r.epsilon, 1);
  EXPECT_EQ(r.rank_geometric, 2);
  EXPECT_EQ(r.defect.df_direct, 1);
  EXPECT_EQ(r.delta_k, 2);
  EXPECT_EQ(r.family.family, Family::ConstantA);
  EXPECT_EQ(r.family.mu, Rational(1));
  EXPECT_EQ(r.family.rank_exact, 1);

  RankReport r2 = analyze(parse_curve("2T^2 + x^3 + 1"));
  EXPECT_EQ(r2.family.family, Family::ConstantA);
  EXPECT_EQ(r2.delta_k, 0);
  EXPECT_EQ(r2.family.rank_exact, 0);

  // -3 becomes a square over the quadratic location.
  RankReport r3 = analyze(parse_curve("-3T^2 + x^3 + 1"));
  EXPECT_EQ(r3.delta_k, 1);
  EXPECT_EQ(r3.family.rank_exact, 1);
}

TEST(Analyze, CubicB) {
  RankReport r = analyze(parse_curve("(x^3-x)*T + 4"), true);
  EXPECT_EQ(r.delta, 3);
  EXPECT_EQ(r.defect.df_direct, 1);
  EXPECT_EQ(r.delta_k, 3);
  EXPECT_EQ(r.family.family, Family::AZeroCubicB);
  EXPECT_EQ(r.family.mu, Rational(4));
  EXPECT_EQ(r.family.rank_exact, 2);
  ASSERT_EQ(r.defect.shared.size(), 2u);
  EXPECT_EQ(r.defect.shared[0].name(), "IV");
  EXPECT_EQ(r.defect.shared[1].name(), "I0*");
  for (const auto& v : r.verifications) EXPECT_TRUE(v.status == "pass" || v.status == "holds") << v.name;
}

TEST(Analyze, DefectTwo) {
  RankReport r = analyze(parse_curve("T*x^3 + (T^2+T+1)*x^2 + (2T^2+T+2)*x + (T^2+T+1)"), true);
  EXPECT_EQ(r.defect.df_direct, 2);
  EXPECT_EQ(r.defect.df_table, 2);
  EXPECT_EQ(infinity_fiber(r.conic_fibers).name(), "D3");
  for (const auto& s : r.defect.shared) {
    ASSERT_TRUE(s.fiber);
    EXPECT_EQ(s.fiber->kind, KodairaKind::I_n);
    EXPECT_GE(s.fiber->n, 3);
  }
  EXPECT_EQ(r.family.family, Family::BoundsOnly);
  EXPECT_FALSE(r.family.rank_exact);
}

TEST(Analyze, GenericNonconstantA3) {
  // Shape T x^3 + (T^2 + aT + b) x^2 + (cT^2 + dT + e) x + (fT^2 + gT + h).
  RankReport r = analyze(parse_curve("T*x^3 + (T^2+T+1)*x^2 + (T^2+3)*x + (T+1)"));
  EXPECT_EQ(r.defect.df_direct, 0);
  EXPECT_EQ(r.family.rank_exact, r.delta_k);
  EXPECT_NE(std::find(r.family.tags.begin(), r.family.tags.end(), "generic_nonconstant_a3"), r.family.tags.end());
}

TEST(Analyze, RandomCurvesSatisfyTheInvariants) {
  CurveSampler sampler(31, 2);
  for (int i = 0; i < 200; ++i) {
    CurveInput c = sampler.next();
    RankReport r = analyze(c);
    EXPECT_TRUE(r.defect.consistent);
    EXPECT_LE(r.bounds.first, r.bounds.second);
    if (r.defect.df_direct == 0) EXPECT_EQ(r.family.rank_exact, r.delta_k);
    if (r.family.rank_exact) {
      EXPECT_GE(*r.family.rank_exact, r.bounds.first);
      EXPECT_LE(*r.family.rank_exact, r.bounds.second);
    }
    for (const auto& o : r.orbits) {
      if (o.witness) {
        EXPECT_TRUE(o.counted);
      }
    }
  }
}
