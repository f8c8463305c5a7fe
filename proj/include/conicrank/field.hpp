#pragma once

// Exact coefficient fields. A field is a small value object that makes its
// elements (zero, one, embedded rationals) and inverts them; elements carry
// ring operators themselves.

#include <concepts>
#include <optional>
#include <string>

#include "conicrank/errors.hpp"
#include "conicrank/qpoly.hpp"

namespace conicrank {

template <class F>
concept ExactField = requires(const F& f, const typename F::Element& a, const Rational& q) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.from_rational(q) } -> std::convertible_to<typename F::Element>;
  { f.inverse(a) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.format(a) } -> std::convertible_to<std::string>;
  { a + a } -> std::convertible_to<typename F::Element>;
  { a - a } -> std::convertible_to<typename F::Element>;
  { a * a } -> std::convertible_to<typename F::Element>;
  { -a } -> std::convertible_to<typename F::Element>;
  { a == a } -> std::convertible_to<bool>;
};

class RationalField {
 public:
  using Element = Rational;

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_rational(const Rational& q) const { return q; }
  Rational inverse(const Rational& a) const {
    if (sgn(a) == 0) throw DomainError("inverse of zero in Q");
    return 1 / a;
  }
  bool is_zero(const Rational& a) const { return sgn(a) == 0; }
  std::string format(const Rational& a) const { return a.get_str(); }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

static_assert(ExactField<RationalField>);

/// Square root in Q when one exists.
inline std::optional<Rational> square_root(const RationalField&, const Rational& a) {
  return is_square_rational(a);
}

}  // namespace conicrank
