#pragma once

// Curves y^2 = a3(T) x^3 + a2(T) x^2 + a1(T) x + a0(T), deg a_i <= 2, and
// the same equation read as a conic bundle y^2 = A(x) T^2 + B(x) T + C(x).

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "conicrank/expr.hpp"
#include "conicrank/qpoly.hpp"

namespace conicrank {

/// A, B, C in x: the T^2, T^1 and T^0 coefficients of the right-hand side.
struct ConicForm {
  UniPoly A{Var::x};
  UniPoly B{Var::x};
  UniPoly C{Var::x};
};

/// Validated curve. Construction throws ValidationError when
///   - some a_i has degree > 2 (or A, B, C degree > 3),
///   - Delta_ell is identically zero,
///   - the a_i share a square factor,
///   - B^2 - 4AC is identically zero.
class CurveInput {
 public:
  static CurveInput from_coefficients(const std::array<UniPoly, 4>& a);
  static CurveInput from_conic(const ConicForm& cf);
  static CurveInput from_bivariate(const BiPoly& rhs);

  /// a_i, in T.
  const UniPoly& a(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  const std::array<UniPoly, 4>& coefficients() const { return a_; }
  const ConicForm& conic() const { return conic_; }

  /// Right-hand side in the expression grammar, re-parseable.
  std::string to_string() const;

 private:
  CurveInput() = default;
  std::array<UniPoly, 4> a_{UniPoly(Var::T), UniPoly(Var::T), UniPoly(Var::T), UniPoly(Var::T)};
  ConicForm conic_;
};

/// Parses "y^2 = ..." or a bare right-hand side and validates it.
CurveInput parse_curve(std::string_view text);

ConicForm to_conic(const std::array<UniPoly, 4>& a);
std::array<UniPoly, 4> from_conic(const ConicForm& cf);

/// Discriminant of the cubic in x, as a polynomial in T:
///   a3^2 (-27 a0^2 a3^2 + 18 a0 a1 a2 a3 + a1^2 a2^2 - 4 a0 a2^3 - 4 a1^3 a3).
UniPoly delta_ell(const std::array<UniPoly, 4>& a);

/// B^2 - 4AC, in x.
UniPoly delta_conic(const ConicForm& cf);

/// Invariants of y^2 = x^3 + p x^2 + q x + r with p = a2, q = a1 a3,
/// r = a0 a3^2 (x scaled by a3).
struct WeierstrassData {
  UniPoly p{Var::T}, q{Var::T}, r{Var::T};
  UniPoly b2{Var::T}, b4{Var::T}, b6{Var::T};
  UniPoly c4{Var::T}, c6{Var::T};
  UniPoly delta_std{Var::T};
  UniPoly delta_ell{Var::T};
  UniPoly gamma{Var::T};  // delta_ell / a3^2
};

WeierstrassData weierstrass_invariants(const CurveInput& c);

/// mu when A = mu is a nonzero constant, deg B <= 2 and deg C = 3.
std::optional<Rational> constant_A_shape(const ConicForm& cf);

struct CubicBShape {
  Rational lambda;
  Rational mu;
};
/// A = 0, B a monic separable cubic and C = lambda B + mu with mu != 0.
std::optional<CubicBShape> cubic_B_shape(const ConicForm& cf);

}  // namespace conicrank
