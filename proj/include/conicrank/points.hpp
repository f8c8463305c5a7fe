#pragma once

// Points on Y^2 = X^3 + p X^2 + q X + r over K(T) and the chord-tangent law.
// The model is the a3-scaled one: X = a3 x, Y = a3 y.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "conicrank/conic.hpp"
#include "conicrank/curve.hpp"
#include "conicrank/funcfield.hpp"
#include "conicrank/numfield.hpp"

namespace conicrank {

template <ExactField F>
struct CurveOverFF {
  F field;
  GPoly<F> p, q, r;

  RatFn<F> cubic(const RatFn<F>& X) const {
    return X * X * X + RatFn<F>(p) * X * X + RatFn<F>(q) * X + RatFn<F>(r);
  }
};

template <ExactField F>
CurveOverFF<F> base_change(const F& field, const WeierstrassData& w) {
  return {field, GPoly<F>::lift(field, w.p), GPoly<F>::lift(field, w.q), GPoly<F>::lift(field, w.r)};
}

template <ExactField F>
class FFPoint {
 public:
  using Fn = RatFn<F>;

  static FFPoint identity() { return FFPoint(); }
  FFPoint(Fn X, Fn Y) : xy_(std::in_place, std::move(X), std::move(Y)) {}

  bool is_identity() const { return !xy_.has_value(); }
  const Fn& X() const { return xy_->first; }
  const Fn& Y() const { return xy_->second; }

  friend bool operator==(const FFPoint& a, const FFPoint& b) { return a.xy_ == b.xy_; }

  std::string to_string() const {
    if (is_identity()) return "O";
    return "(" + X().to_string() + ", " + Y().to_string() + ")";
  }

 private:
  FFPoint() = default;
  std::optional<std::pair<Fn, Fn>> xy_;
};

template <ExactField F>
bool on_curve(const CurveOverFF<F>& E, const FFPoint<F>& P) {
  if (P.is_identity()) return true;
  return P.Y() * P.Y() == E.cubic(P.X());
}

template <ExactField F>
FFPoint<F> negate(const CurveOverFF<F>&, const FFPoint<F>& P) {
  if (P.is_identity()) return P;
  return FFPoint<F>(P.X(), -P.Y());
}

template <ExactField F>
FFPoint<F> add(const CurveOverFF<F>& E, const FFPoint<F>& P, const FFPoint<F>& Q) {
  using Fn = RatFn<F>;
  if (P.is_identity()) return Q;
  if (Q.is_identity()) return P;
  const F& k = E.field;
  auto c = [&](long v) { return Fn(GPoly<F>::constant(k, k.from_rational(v))); };
  Fn slope(k);
  if (P.X() == Q.X()) {
    if ((P.Y() + Q.Y()).is_zero()) return FFPoint<F>::identity();
    slope = (c(3) * P.X() * P.X() + c(2) * Fn(E.p) * P.X() + Fn(E.q)) / (c(2) * P.Y());
  } else {
    slope = (Q.Y() - P.Y()) / (Q.X() - P.X());
  }
  Fn X3 = slope * slope - Fn(E.p) - P.X() - Q.X();
  Fn Y3 = slope * (P.X() - X3) - P.Y();
  return FFPoint<F>(std::move(X3), std::move(Y3));
}

template <ExactField F>
FFPoint<F> double_point(const CurveOverFF<F>& E, const FFPoint<F>& P) {
  return add(E, P, P);
}

/// [n]P for any integer n.
template <ExactField F>
FFPoint<F> multiply(const CurveOverFF<F>& E, const FFPoint<F>& P, long n) {
  FFPoint<F> base = n < 0 ? negate(E, P) : P;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  FFPoint<F> acc = FFPoint<F>::identity();
  while (k > 0) {
    if (k & 1) acc = add(E, acc, base);
    base = double_point(E, base);
    k >>= 1;
  }
  return acc;
}

template <ExactField F>
struct ConstructedPoint {
  CurveOverFF<F> curve;
  FFPoint<F> point;
};

using PointOverK = ConstructedPoint<NumberField>;
using PointOverTower = ConstructedPoint<QuadTower<NumberField>>;
/// Over K = Q(theta) when the square root lies in K, else over K(sqrt).
using AnyPoint = std::variant<PointOverK, PointOverTower>;

/// The point at the root theta of `location`, an A-kind factor of
/// B^2 - 4AC: x = theta, y = sqrt(A(theta)) (T + B(theta)/(2A(theta))), or
/// y = sqrt(C(theta)) when A(theta) = 0; then scaled by a3. sign = -1 uses
/// the other square root. Throws ContractViolation for D-kind locations and
/// ConsistencyError if the point fails the curve equation.
AnyPoint construct_point(const CurveInput& c, const UniPoly& location, int sign = 1);

std::string point_string(const AnyPoint& P);

/// (a3 theta, 0) at a finite D-kind fiber lies on the curve and has order 2.
/// Throws ContractViolation for A-kind or infinite fibers.
bool verify_two_torsion(const CurveInput& c, const ConicFiber& fiber);

/// True iff P != O and [2]P == O.
template <ExactField F>
bool has_order_two(const CurveOverFF<F>& E, const FFPoint<F>& P) {
  return !P.is_identity() && on_curve(E, P) && double_point(E, P).is_identity();
}

struct RelationCheck {
  enum class Status { Holds, Fails, NotApplicable };
  Status status = Status::NotApplicable;
  std::string field;   // "Q" or "Q(sqrt(c))"
  std::string detail;
  /// For A = 0, B a monic separable cubic, C = lambda B + mu: whether the
  /// three points over the roots of B sum to O.
  std::optional<bool> triple_sum;
};

std::string to_string(RelationCheck::Status s);

/// Sum of [n_theta] P_theta over A-kind fibers, n_theta the multiplicity of
/// the location in B^2 - 4AC, compared with O. Only rational locations whose
/// square roots lie in a common Q or Q(sqrt(c)) are handled.
RelationCheck verify_linear_relation(const CurveInput& c, const std::vector<ConicFiber>& fibers);

}  // namespace conicrank
