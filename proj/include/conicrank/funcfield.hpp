#pragma once

// Polynomials and rational functions in one variable over any ExactField.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conicrank/errors.hpp"
#include "conicrank/field.hpp"

namespace conicrank {

template <ExactField F>
class GPoly {
 public:
  using Element = typename F::Element;

  GPoly() = default;
  explicit GPoly(F field) : field_(std::move(field)) {}
  GPoly(F field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static GPoly constant(const F& field, const Element& c) { return GPoly(field, {c}); }
  static GPoly variable(const F& field) { return GPoly(field, {field.zero(), field.one()}); }
  /// Lifts a polynomial over Q coefficientwise.
  static GPoly lift(const F& field, const UniPoly& p) {
    std::vector<Element> v;
    for (const auto& c : p.coeffs()) v.push_back(field.from_rational(c));
    return GPoly(field, std::move(v));
  }

  const F& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Element coeff(int i) const {
    if (i < 0 || i > degree()) return field_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Element& lead() const {
    if (is_zero()) throw ContractViolation("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  const std::vector<Element>& coeffs() const { return coeffs_; }

  Element operator()(const Element& at) const {
    Element acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  GPoly scaled(const Element& c) const {
    std::vector<Element> v;
    for (const auto& a : coeffs_) v.push_back(a * c);
    return GPoly(field_, std::move(v));
  }
  GPoly monic() const { return is_zero() ? *this : scaled(field_.inverse(lead())); }

  GPoly operator-() const { return scaled(-field_.one()); }
  friend GPoly operator+(const GPoly& a, const GPoly& b) {
    const F& f = a.field_;
    std::vector<Element> v(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = v[i] + a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
    return GPoly(f, std::move(v));
  }
  friend GPoly operator-(const GPoly& a, const GPoly& b) { return a + (-b); }
  friend GPoly operator*(const GPoly& a, const GPoly& b) {
    const F& f = a.field_;
    if (a.is_zero() || b.is_zero()) return GPoly(f);
    std::vector<Element> v(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (f.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return GPoly(f, std::move(v));
  }
  friend bool operator==(const GPoly& a, const GPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'T') const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Element& c = coeffs_[static_cast<std::size_t>(i)];
      if (field_.is_zero(c)) continue;
      if (!first) out << " + ";
      first = false;
      std::string s = field_.format(c);
      if (i == 0) {
        out << s;
        continue;
      }
      if (!(c == field_.one())) out << "(" << s << ")*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  F field_;
  std::vector<Element> coeffs_;
};

template <ExactField F>
std::pair<GPoly<F>, GPoly<F>> divrem(const GPoly<F>& a, const GPoly<F>& b) {
  using E = typename F::Element;
  const F& f = a.field();
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {GPoly<F>(f), a};
  std::vector<E> rem = a.coeffs();
  std::vector<E> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), f.zero());
  const E inv = f.inverse(b.lead());
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    E c = rem[static_cast<std::size_t>(i)] * inv;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (f.is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = slot - c * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {GPoly<F>(f, std::move(quo)), GPoly<F>(f, std::move(rem))};
}

/// Monic gcd; gcd(0, 0) is a contract violation.
template <ExactField F>
GPoly<F> gcd(GPoly<F> a, GPoly<F> b) {
  if (a.is_zero() && b.is_zero()) throw ContractViolation("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    GPoly<F> r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Reduced fraction num/den with den monic.
template <ExactField F>
class RatFn {
 public:
  using Element = typename F::Element;
  using Poly = GPoly<F>;

  explicit RatFn(const F& field) : num_(field), den_(Poly::constant(field, field.one())) {}
  RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), num_.field().one())) {}
  RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const F& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  Element operator()(const Element& at) const {
    Element d = den_(at);
    if (field().is_zero(d)) throw DomainError("rational function evaluated at a pole");
    return num_(at) * field().inverse(d);
  }

  RatFn operator-() const { return RatFn(-num_, den_, Normalized{}); }
  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Re-applies the normal form; a no-op on values built through the API.
  RatFn normalized() const { return RatFn(num_, den_); }

  std::string to_string(char var = 'T') const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  struct Normalized {};
  RatFn(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    const F& f = den_.field();
    if (num_.is_zero()) {
      den_ = Poly::constant(f, f.one());
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divrem(num_, g).first;
      den_ = divrem(den_, g).first;
    }
    Element inv = f.inverse(den_.lead());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  Poly num_;
  Poly den_;
};

}  // namespace conicrank
