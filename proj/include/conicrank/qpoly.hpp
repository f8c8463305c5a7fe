#pragma once

// Exact rationals and dense univariate polynomials over Q.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace conicrank {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Non-negative s with s*s == r, if r is a square in Q. Zero yields 0.
std::optional<Rational> is_square_rational(const Rational& r);

/// Formal variable tag of a polynomial.
enum class Var : char { T = 'T', x = 'x' };

/// Dense polynomial over Q, lowest degree first. The highest stored
/// coefficient is nonzero; the zero polynomial stores nothing.
class UniPoly {
 public:
  explicit UniPoly(Var var = Var::x) : var_(var) {}
  UniPoly(Var var, std::vector<Rational> coeffs);
  UniPoly(Var var, std::initializer_list<long> coeffs);

  static UniPoly constant(Var var, const Rational& c);
  static UniPoly monomial(Var var, const Rational& c, int degree);
  static UniPoly variable(Var var) { return monomial(var, 1, 1); }

  Var var() const noexcept { return var_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of var^i; zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& lead() const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  Rational operator()(const Rational& at) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly with_var(Var v) const { return UniPoly(v, coeffs_); }
  UniPoly scaled(const Rational& c) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }
  /// Orders by degree, then by coefficients from the top down.
  friend bool operator<(const UniPoly& a, const UniPoly& b);

  /// Renders in the curve grammar, e.g. "x^2 - 3/2*x + 1".
  std::string to_string() const;

 private:
  void trim();
  Var var_;
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, int e);

struct DivRem {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws DomainError on a zero divisor.
DivRem divrem(const UniPoly& p, const UniPoly& q);
UniPoly operator%(const UniPoly& p, const UniPoly& q);
/// Exact quotient; throws DomainError if q does not divide p.
UniPoly exact_div(const UniPoly& p, const UniPoly& q);

/// Monic gcd. gcd(0, 0) is a contract violation.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

struct Bezout {
  UniPoly g;  // monic gcd
  UniPoly s;
  UniPoly t;  // s*p + t*q == g
};
Bezout extended_gcd(const UniPoly& p, const UniPoly& q);

/// Yun decomposition: p = unit * prod parts[i].first ^ parts[i].second with
/// every part monic, squarefree, pairwise coprime and of degree >= 1.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Resultant in the Sylvester-matrix convention:
///   Res(p, q) = lead(p)^deg(q) * prod_{p(a) = 0} q(a),
/// evaluated along the Euclidean remainder sequence. Res(x-2, x-3) = -1.
Rational resultant(const UniPoly& p, const UniPoly& q);

/// Discriminant with the usual sign, (-1)^(n(n-1)/2) Res(p, p') / lead(p).
Rational discriminant(const UniPoly& p);

/// Product of unit and monic irreducible factor powers.
struct FactoredPoly {
  Rational unit;
  std::vector<std::pair<UniPoly, int>> factors;

  UniPoly expand(Var var) const;
  /// Multiplicity of `factor` (0 when absent).
  int multiplicity_of(const UniPoly& factor) const;
};

/// Complete factorization over Q into monic irreducibles (sorted by degree,
/// then coefficients). Throws ContractViolation on the zero polynomial.
FactoredPoly factor(const UniPoly& p);

/// Primitive integer polynomial with positive leading coefficient
/// proportional to p, along with the rational content c (p = c * result).
std::pair<Rational, std::vector<Integer>> primitive_integer_part(const UniPoly& p);

}  // namespace conicrank
