#include "conicrank/curve.hpp"

#include "conicrank/errors.hpp"

namespace conicrank {

namespace {

UniPoly cT(long v) { return UniPoly::constant(Var::T, v); }

void check_identity(bool ok, const char* what) {
  if (!ok) throw ConsistencyError("InvariantIdentity", what);
}

}  // namespace

ConicForm to_conic(const std::array<UniPoly, 4>& a) {
  std::vector<Rational> A(4), B(4), C(4);
  for (std::size_t i = 0; i < 4; ++i) {
    C[i] = a[i].coeff(0);
    B[i] = a[i].coeff(1);
    A[i] = a[i].coeff(2);
  }
  return {UniPoly(Var::x, A), UniPoly(Var::x, B), UniPoly(Var::x, C)};
}

std::array<UniPoly, 4> from_conic(const ConicForm& cf) {
  std::array<UniPoly, 4> a;
  for (int i = 0; i < 4; ++i) {
    a[static_cast<std::size_t>(i)] =
        UniPoly(Var::T, std::vector<Rational>{cf.C.coeff(i), cf.B.coeff(i), cf.A.coeff(i)});
  }
  return a;
}

UniPoly delta_ell(const std::array<UniPoly, 4>& a) {
  const UniPoly &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3];
  UniPoly inner = cT(-27) * a0 * a0 * a3 * a3 + cT(18) * a0 * a1 * a2 * a3 + a1 * a1 * a2 * a2 -
                  cT(4) * a0 * a2 * a2 * a2 - cT(4) * a1 * a1 * a1 * a3;
  return (a3 * a3 * inner).with_var(Var::T);
}

UniPoly delta_conic(const ConicForm& cf) {
  return (cf.B * cf.B - UniPoly::constant(Var::x, 4) * cf.A * cf.C).with_var(Var::x);
}

CurveInput CurveInput::from_coefficients(const std::array<UniPoly, 4>& a) {
  CurveInput c;
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i].degree() > 2) {
      throw ValidationError("degree bound exceeded: a" + std::to_string(i) + " = " + a[i].to_string() +
                            " has degree > 2 in T");
    }
    c.a_[i] = a[i].with_var(Var::T);
  }
  if (delta_ell(c.a_).is_zero()) {
    throw ValidationError("Delta_ell is identically zero (the cubic in x is singular or degenerate)");
  }
  UniPoly g(Var::T);
  for (const auto& ai : c.a_) {
    if (!ai.is_zero()) g = g.is_zero() ? ai.monic() : gcd(g, ai);
  }
  if (g.degree() >= 1 && gcd(g, g.derivative()).degree() >= 1) {
    throw ValidationError("common square factor: every a_i is divisible by the square of a factor of " +
                          g.to_string());
  }
  c.conic_ = to_conic(c.a_);
  if (delta_conic(c.conic_).is_zero()) {
    throw ValidationError("Delta_conic = B^2 - 4AC is identically zero");
  }
  return c;
}

CurveInput CurveInput::from_conic(const ConicForm& cf) {
  const std::pair<const char*, const UniPoly*> parts[] = {{"A", &cf.A}, {"B", &cf.B}, {"C", &cf.C}};
  for (const auto& [name, p] : parts) {
    if (p->degree() > 3) {
      throw ValidationError(std::string("degree bound exceeded: ") + name + " = " + p->to_string() +
                            " has degree > 3 in x");
    }
  }
  return from_coefficients(conicrank::from_conic(cf));
}

CurveInput CurveInput::from_bivariate(const BiPoly& rhs) {
  std::array<std::vector<Rational>, 4> a;
  for (const auto& [k, c] : rhs.terms()) {
    const auto [dx, dT] = k;
    if (dx > 3) throw ValidationError("degree bound exceeded: degree in x is greater than 3");
    if (dT > 2) throw ValidationError("degree bound exceeded: degree in T is greater than 2");
    auto& v = a[static_cast<std::size_t>(dx)];
    if (v.size() <= static_cast<std::size_t>(dT)) v.resize(static_cast<std::size_t>(dT) + 1);
    v[static_cast<std::size_t>(dT)] = c;
  }
  std::array<UniPoly, 4> polys;
  for (std::size_t i = 0; i < 4; ++i) polys[i] = UniPoly(Var::T, a[i]);
  return from_coefficients(polys);
}

std::string CurveInput::to_string() const {
  std::string out;
  for (int i = 3; i >= 0; --i) {
    const UniPoly& ai = a(i);
    if (ai.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string xi = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (xi.empty()) {
      out += "(" + ai.to_string() + ")";
    } else if (ai == UniPoly::constant(Var::T, 1)) {
      out += xi;
    } else {
      out += "(" + ai.to_string() + ")*" + xi;
    }
  }
  return out.empty() ? "0" : out;
}

CurveInput parse_curve(std::string_view text) { return CurveInput::from_bivariate(parse_expression(text)); }

WeierstrassData weierstrass_invariants(const CurveInput& c) {
  WeierstrassData w;
  const UniPoly& a3 = c.a(3);
  w.p = c.a(2);
  w.q = (c.a(1) * a3).with_var(Var::T);
  w.r = (c.a(0) * a3 * a3).with_var(Var::T);
  w.b2 = (cT(4) * w.p).with_var(Var::T);
  w.b4 = (cT(2) * w.q).with_var(Var::T);
  w.b6 = (cT(4) * w.r).with_var(Var::T);
  w.c4 = (w.b2 * w.b2 - cT(24) * w.b4).with_var(Var::T);
  w.c6 = (-(w.b2 * w.b2 * w.b2) + cT(36) * w.b2 * w.b4 - cT(216) * w.b6).with_var(Var::T);
  w.delta_std = ((w.c4 * w.c4 * w.c4 - w.c6 * w.c6).scaled(Rational(1, 1728))).with_var(Var::T);
  w.delta_ell = delta_ell(c.coefficients());
  w.gamma = exact_div(w.delta_ell, a3 * a3).with_var(Var::T);

  check_identity(w.delta_std == w.delta_ell.scaled(16), "Delta_std = 16 Delta_ell");
  check_identity(w.c4.degree() <= 4 && w.c6.degree() <= 6 && w.delta_std.degree() <= 12,
                 "deg c4 <= 4, deg c6 <= 6, deg Delta <= 12");
  return w;
}

std::optional<Rational> constant_A_shape(const ConicForm& cf) {
  if (cf.A.degree() != 0 || cf.B.degree() > 2 || cf.C.degree() != 3) return std::nullopt;
  return cf.A.coeff(0);
}

std::optional<CubicBShape> cubic_B_shape(const ConicForm& cf) {
  if (!cf.A.is_zero() || cf.B.degree() != 3 || !cf.B.is_monic()) return std::nullopt;
  if (discriminant(cf.B) == 0) return std::nullopt;
  const Rational lambda = cf.C.coeff(3);
  const UniPoly rest = cf.C - cf.B.scaled(lambda);
  if (rest.degree() != 0) return std::nullopt;
  return CubicBShape{lambda, rest.coeff(0)};
}

}  // namespace conicrank
