#pragma once

// Expression parser for curve right-hand sides in T and x.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | implicit)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'T' | 'x' | '(' expr ')'
//
// Implicit multiplication applies only before a variable or '(' ("3x",
// "2(T+1)"). Division is by nonzero constants, which covers rationals p/q.
// A leading "y^2 =" is accepted and skipped.

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "conicrank/qpoly.hpp"

namespace conicrank {

/// Sparse polynomial in x and T keyed by (deg_x, deg_T).
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly constant(const Rational& c);
  static BiPoly x();
  static BiPoly T();

  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int dx, int dT) const;
  bool is_constant() const;
  int degree_x() const;
  int degree_T() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  BiPoly scaled(const Rational& c) const;

 private:
  void add_term(Key k, const Rational& c);
  std::map<Key, Rational> terms_;
};

/// Parses an expression; throws ParseError with the byte offset.
BiPoly parse_expression(std::string_view text);

/// Parses an expression that must only involve `var`.
UniPoly parse_univariate(std::string_view text, Var var);

}  // namespace conicrank
