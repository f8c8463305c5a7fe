#include "conicrank/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "conicrank/errors.hpp"

namespace conicrank {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::optional<Rational> is_square_rational(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Integer& n = r.get_num();
  const Integer& d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  return make_rational(sqrt(n), sqrt(d));
}

// ---------------------------------------------------------------------------

UniPoly::UniPoly(Var var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly::UniPoly(Var var, std::initializer_list<long> coeffs) : var_(var) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(Var var, const Rational& c) { return UniPoly(var, std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(Var var, const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(var, std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::lead() const {
  if (is_zero()) throw ContractViolation("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.emplace_back(coeffs_[i] * static_cast<long>(i));
  return UniPoly(var_, std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / lead());
}

UniPoly UniPoly::scaled(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  for (auto& x : v) x *= c;
  return UniPoly(var_, std::move(v));
}

UniPoly UniPoly::operator-() const { return scaled(-1); }

namespace {

void require_same_var(const UniPoly& a, const UniPoly& b) {
  // Constants are variable-agnostic so that literals like 1 combine freely.
  if (a.var() != b.var() && !a.is_constant() && !b.is_constant()) {
    throw DomainError("polynomials in different variables");
  }
}

Var joint_var(const UniPoly& a, const UniPoly& b) { return a.is_constant() ? b.var() : a.var(); }

}  // namespace

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  require_same_var(a, b);
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(joint_var(a, b), std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_var(a, b);
  if (a.is_zero() || b.is_zero()) return UniPoly(joint_var(a, b));
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(joint_var(a, b), std::move(v));
}

bool operator<(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeffs_[static_cast<std::size_t>(i)], b.coeffs_[static_cast<std::size_t>(i)]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    Rational mag = abs(c);
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << static_cast<char>(var_);
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

UniPoly pow(const UniPoly& p, int e) {
  UniPoly result = UniPoly::constant(p.var(), 1);
  for (int i = 0; i < e; ++i) result *= p;
  return result;
}

DivRem divrem(const UniPoly& p, const UniPoly& q) {
  if (q.is_zero()) throw DomainError("polynomial division by zero");
  Var v = joint_var(p, q);
  if (p.degree() < q.degree()) return {UniPoly(v), p.with_var(v)};
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - q.degree() + 1));
  const Rational inv_lead = 1 / q.lead();
  const int dq = q.degree();
  for (int i = p.degree(); i >= dq; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] * inv_lead;
    quo[static_cast<std::size_t>(i - dq)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(i - dq + j)] -= c * q.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {UniPoly(v, std::move(quo)), UniPoly(v, std::move(rem))};
}

UniPoly operator%(const UniPoly& p, const UniPoly& q) { return divrem(p, q).remainder; }

UniPoly exact_div(const UniPoly& p, const UniPoly& q) {
  auto [quo, rem] = divrem(p, q);
  if (!rem.is_zero()) throw DomainError("inexact polynomial division");
  return quo;
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw ContractViolation("gcd(0, 0) is undefined");
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Bezout extended_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw ContractViolation("gcd(0, 0) is undefined");
  Var v = joint_var(p, q);
  UniPoly r0 = p, r1 = q;
  UniPoly s0 = UniPoly::constant(v, 1), s1(v);
  UniPoly t0(v), t1 = UniPoly::constant(v, 1);
  while (!r1.is_zero()) {
    auto [quo, rem] = divrem(r0, r1);
    r0 = std::exchange(r1, rem);
    s0 = std::exchange(s1, s0 - quo * s1);
    t0 = std::exchange(t1, t0 - quo * t1);
  }
  Rational inv = 1 / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw ContractViolation("squarefree decomposition of zero");
  std::vector<std::pair<UniPoly, int>> parts;
  if (p.degree() == 0) return parts;
  UniPoly f = p.monic();
  UniPoly df = f.derivative();
  UniPoly a = gcd(f, df);
  UniPoly b = exact_div(f, a);
  UniPoly c = exact_div(df, a);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly g = gcd(b, d);
    UniPoly nb = exact_div(b, g);
    if (g.degree() > 0) parts.emplace_back(g, i);
    c = exact_div(d, g);
    b = nb;
    d = c - b.derivative();
  }
  return parts;
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw ContractViolation("resultant with the zero polynomial");
  Rational acc = 1;
  UniPoly a = p, b = q;
  for (;;) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) {
      Rational r = 1;
      for (int i = 0; i < m; ++i) r *= b.lead();
      return acc * r;
    }
    if (m == 0) {
      Rational r = 1;
      for (int i = 0; i < n; ++i) r *= a.lead();
      return acc * r;
    }
    UniPoly r = a % b;
    if (r.is_zero()) return 0;
    // Res(a, b) = (-1)^(mn) lead(b)^(m - deg r) Res(b, r)
    if ((m * n) % 2 == 1) acc = -acc;
    for (int i = 0; i < m - r.degree(); ++i) acc *= b.lead();
    a = std::move(b);
    b = std::move(r);
  }
}

Rational discriminant(const UniPoly& p) {
  const int n = p.degree();
  if (n < 1) throw ContractViolation("discriminant of a constant");
  if (n == 1) return 1;
  Rational r = resultant(p, p.derivative()) / p.lead();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

UniPoly FactoredPoly::expand(Var var) const {
  UniPoly acc = UniPoly::constant(var, unit);
  for (const auto& [f, e] : factors) acc *= pow(f.with_var(var), e);
  return acc;
}

int FactoredPoly::multiplicity_of(const UniPoly& factor) const {
  for (const auto& [f, e] : factors) {
    if (f == factor) return e;
  }
  return 0;
}

std::pair<Rational, std::vector<Integer>> primitive_integer_part(const UniPoly& p) {
  if (p.is_zero()) throw ContractViolation("primitive part of zero");
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, Integer(c.get_den()));
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    ints.push_back(v);
    content = gcd(content, v);
  }
  if (sgn(ints.back()) < 0) content = -content;
  for (auto& v : ints) v /= content;
  return {make_rational(content, den_lcm), std::move(ints)};
}

}  // namespace conicrank
