#include "conicrank/points.hpp"

#include "conicrank/errors.hpp"

namespace conicrank {

namespace {

// Builds (a3 theta, a3 y_raw) over L, where theta_L is the image of theta,
// s the chosen square root and offset = B(theta)/(2 alpha) (absent when
// A(theta) = 0).
template <ExactField L>
ConstructedPoint<L> assemble(const L& field, const CurveInput& c, const typename L::Element& theta,
                             const typename L::Element& s, const std::optional<typename L::Element>& offset) {
  using Poly = GPoly<L>;
  const Poly a3 = Poly::lift(field, c.a(3));
  Poly y_raw = offset ? Poly(field, {s * *offset, s}) : Poly::constant(field, s);
  FFPoint<L> P(RatFn<L>(a3 * Poly::constant(field, theta)), RatFn<L>(a3 * y_raw));
  CurveOverFF<L> E = base_change(field, weierstrass_invariants(c));
  if (!on_curve(E, P)) {
    throw ConsistencyError("PointNotOnCurve", "constructed point " + P.to_string() + " fails the equation");
  }
  return {std::move(E), std::move(P)};
}

bool is_rational_square(const Rational& r) { return is_square_rational(r).has_value(); }

}  // namespace

AnyPoint construct_point(const CurveInput& c, const UniPoly& location, int sign) {
  if (sign != 1 && sign != -1) throw ContractViolation("square-root sign must be +1 or -1");
  const ConicForm& cf = c.conic();
  NumberField K(location);
  if (!K.reduce(delta_conic(cf)).is_zero()) {
    throw ContractViolation(location.to_string() + " does not divide B^2 - 4AC");
  }
  const NFElement alpha = K.reduce(cf.A);
  const NFElement gamma = K.reduce(cf.C);
  if (alpha.is_zero() && gamma.is_zero()) {
    throw ContractViolation("D-kind location " + location.to_string() + " carries a 2-torsion point, not P_theta");
  }
  std::optional<NFElement> offset;
  if (!alpha.is_zero()) offset = K.reduce(cf.B) * K.inverse(alpha + alpha);
  const NFElement radicand = alpha.is_zero() ? gamma : alpha;
  const Rational sgn_q(sign);

  auto root = adjoin_sqrt(K, radicand);
  if (auto* w = std::get_if<NFElement>(&root)) {
    return assemble(K, c, K.theta(), K.from_rational(sgn_q) * *w, offset);
  }
  const auto& tower = std::get<QuadTower<NumberField>>(root);
  std::optional<TowerElement<NumberField>> off;
  if (offset) off = tower.embed(*offset);
  return assemble(tower, c, tower.embed(K.theta()), tower.from_rational(sgn_q) * tower.root(), off);
}

std::string point_string(const AnyPoint& P) {
  return std::visit([](const auto& cp) { return cp.point.to_string(); }, P);
}

bool verify_two_torsion(const CurveInput& c, const ConicFiber& fiber) {
  if (fiber.is_infinity() || fiber.kind != ConicKind::D) {
    throw ContractViolation("2-torsion check needs a finite D-kind fiber, got " + fiber.name() + " at " +
                            fiber.location_string());
  }
  const NumberField& K = *fiber.field;
  using Poly = GPoly<NumberField>;
  const Poly a3 = Poly::lift(K, c.a(3));
  FFPoint<NumberField> P(RatFn<NumberField>(a3 * Poly::constant(K, K.theta())), RatFn<NumberField>(Poly(K)));
  return has_order_two(base_change(K, weierstrass_invariants(c)), P);
}

std::string to_string(RelationCheck::Status s) {
  switch (s) {
    case RelationCheck::Status::Holds: return "holds";
    case RelationCheck::Status::Fails: return "fails";
    case RelationCheck::Status::NotApplicable: return "not_applicable";
  }
  return "?";
}

namespace {

struct RationalLocation {
  Rational theta;
  Rational radicand;
  std::optional<Rational> offset;
  int n;
  bool root_of_B;
};

template <ExactField L>
RelationCheck sum_relation(const L& field, const CurveInput& c, const std::vector<RationalLocation>& locs,
                           const std::vector<typename L::Element>& roots, bool triple_shape) {
  std::vector<FFPoint<L>> pts;
  CurveOverFF<L> E = base_change(field, weierstrass_invariants(c));
  for (std::size_t i = 0; i < locs.size(); ++i) {
    std::optional<typename L::Element> off;
    if (locs[i].offset) off = field.from_rational(*locs[i].offset);
    pts.push_back(assemble(field, c, field.from_rational(locs[i].theta), roots[i], off).point);
  }
  FFPoint<L> total = FFPoint<L>::identity();
  for (std::size_t i = 0; i < pts.size(); ++i) total = add(E, total, multiply(E, pts[i], locs[i].n));
  RelationCheck rc;
  rc.status = total.is_identity() ? RelationCheck::Status::Holds : RelationCheck::Status::Fails;
  rc.detail = "sum of [n]P over " + std::to_string(pts.size()) + " rational locations is " +
              (total.is_identity() ? "O" : "not O");
  if (triple_shape) {
    FFPoint<L> s = FFPoint<L>::identity();
    int count = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (locs[i].root_of_B) {
        s = add(E, s, pts[i]);
        ++count;
      }
    }
    rc.triple_sum = count == 3 && s.is_identity();
  }
  return rc;
}

}  // namespace

RelationCheck verify_linear_relation(const CurveInput& c, const std::vector<ConicFiber>& fibers) {
  const ConicForm& cf = c.conic();
  std::vector<RationalLocation> locs;
  for (const auto& f : fibers) {
    if (f.kind != ConicKind::A) continue;
    if (f.degree != 1) {
      return {RelationCheck::Status::NotApplicable, "", "location " + f.location_string() + " is not rational",
              std::nullopt};
    }
    const Rational theta = -f.location->coeff(0);
    const Rational alpha = cf.A(theta);
    RationalLocation loc{theta, sgn(alpha) != 0 ? alpha : cf.C(theta), std::nullopt, f.n - 1,
                         sgn(cf.B(theta)) == 0};
    if (sgn(alpha) != 0) loc.offset = cf.B(theta) / (2 * alpha);
    locs.push_back(loc);
  }
  const bool triple_shape = cubic_B_shape(cf).has_value();

  std::optional<Rational> cls;
  for (const auto& l : locs) {
    if (is_rational_square(l.radicand)) continue;
    if (!cls) {
      cls = l.radicand;
    } else if (!is_rational_square(l.radicand * *cls)) {
      return {RelationCheck::Status::NotApplicable, "",
              "square roots of " + cls->get_str() + " and " + l.radicand.get_str() + " need different fields",
              std::nullopt};
    }
  }

  if (!cls) {
    std::vector<Rational> roots;
    for (const auto& l : locs) roots.push_back(*is_square_rational(l.radicand));
    RelationCheck rc = sum_relation(RationalField{}, c, locs, roots, triple_shape);
    rc.field = "Q";
    return rc;
  }
  QuadTower<RationalField> L(RationalField{}, *cls);
  std::vector<TowerElement<RationalField>> roots;
  for (const auto& l : locs) {
    if (auto s = is_square_rational(l.radicand)) {
      roots.push_back(L.embed(*s));
    } else {
      // sqrt(r) = sqrt(r c) / c * sqrt(c)
      Rational v = *is_square_rational(l.radicand * *cls) / *cls;
      roots.push_back(L.make(0, v));
    }
  }
  RelationCheck rc = sum_relation(L, c, locs, roots, triple_shape);
  rc.field = "Q(sqrt(" + cls->get_str() + "))";
  return rc;
}

}  // namespace conicrank
