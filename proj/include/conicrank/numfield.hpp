#pragma once

// Number fields Q[x]/(m), one-step quadratic extensions of an exact field,
// and the square test with witnesses.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "conicrank/errors.hpp"
#include "conicrank/field.hpp"
#include "conicrank/qpoly.hpp"

namespace conicrank {

class NumberField;

/// Residue class modulo the field's minimal polynomial. A default-constructed
/// element is a placeholder: it may be assigned to but not computed with.
class NFElement {
 public:
  NFElement() = default;

  const UniPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  const UniPoly& modulus() const;

  NFElement operator-() const;
  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend bool operator==(const NFElement& a, const NFElement& b);

 private:
  friend class NumberField;
  NFElement(std::shared_ptr<const UniPoly> m, UniPoly rep) : m_(std::move(m)), rep_(std::move(rep)) {}
  std::shared_ptr<const UniPoly> m_;
  UniPoly rep_{Var::x};
};

class NumberField {
 public:
  using Element = NFElement;

  NumberField() = default;
  /// m must be irreducible over Q; it is made monic. Irreducibility is
  /// checked with the factorizer.
  explicit NumberField(const UniPoly& m);

  const UniPoly& modulus() const { return *m_; }
  int degree() const { return m_->degree(); }

  NFElement zero() const { return {m_, UniPoly(Var::x)}; }
  NFElement one() const { return from_rational(1); }
  NFElement from_rational(const Rational& q) const { return {m_, UniPoly::constant(Var::x, q)}; }
  /// The class of x, a root of the modulus.
  NFElement theta() const { return reduce(UniPoly::variable(Var::x)); }
  /// p(theta): p reduced modulo the minimal polynomial.
  NFElement reduce(const UniPoly& p) const;
  NFElement inverse(const NFElement& a) const;
  bool is_zero(const NFElement& a) const { return a.is_zero(); }
  std::string format(const NFElement& a) const { return a.rep().to_string(); }

  /// The value of a when it lies in Q.
  std::optional<Rational> as_rational(const NFElement& a) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.m_ == b.m_ || (a.m_ && b.m_ && *a.m_ == *b.m_);
  }

 private:
  std::shared_ptr<const UniPoly> m_;
};

static_assert(ExactField<NumberField>);

/// Residue of p at the root of a monic irreducible factor.
NFElement reduce_mod(const UniPoly& p, const NumberField& K);

/// Evidence that an element is not a square: modulo `prime`, theta maps to
/// `root` (a simple root of the modulus) and the element to a quadratic
/// non-residue.
struct NonSquareCertificate {
  std::uint64_t prime;
  std::uint64_t root;
  std::uint64_t residue;
};

struct SquareTest {
  std::optional<NFElement> witness;                  // set iff the element is a square
  std::optional<NonSquareCertificate> certificate;   // set when a prime ruled it out
};

/// Decides whether a is a square in K, returning a witness b with b*b == a.
/// Non-squares are first screened at small primes of degree one; survivors
/// go through the norm-resultant method.
SquareTest is_square_nf(const NumberField& K, const NFElement& a);

/// Re-checks a certificate independently of how it was found.
bool check_certificate(const NumberField& K, const NFElement& a, const NonSquareCertificate& c);

inline std::optional<NFElement> square_root(const NumberField& K, const NFElement& a) {
  return is_square_nf(K, a).witness;
}

template <ExactField Base>
class QuadTower;

/// u + v*sqrt(alpha) over Base.
template <ExactField Base>
class TowerElement {
 public:
  using BaseElement = typename Base::Element;

  TowerElement() = default;
  const BaseElement& u() const { return u_; }
  const BaseElement& v() const { return v_; }

  TowerElement operator-() const { return {data_, -u_, -v_}; }
  friend TowerElement operator+(const TowerElement& a, const TowerElement& b) {
    return {pick(a, b), a.u_ + b.u_, a.v_ + b.v_};
  }
  friend TowerElement operator-(const TowerElement& a, const TowerElement& b) {
    return {pick(a, b), a.u_ - b.u_, a.v_ - b.v_};
  }
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b) {
    const auto& d = pick(a, b);
    BaseElement uu = a.u_ * b.u_ + a.v_ * b.v_ * d->alpha;
    BaseElement vv = a.u_ * b.v_ + a.v_ * b.u_;
    return {d, uu, vv};
  }
  friend bool operator==(const TowerElement& a, const TowerElement& b) {
    return a.u_ == b.u_ && a.v_ == b.v_;
  }

 private:
  friend class QuadTower<Base>;
  struct Data {
    Base base;
    BaseElement alpha;
  };
  TowerElement(std::shared_ptr<const Data> d, BaseElement u, BaseElement v)
      : data_(std::move(d)), u_(std::move(u)), v_(std::move(v)) {}

  static const std::shared_ptr<const Data>& pick(const TowerElement& a, const TowerElement& b) {
    if (!a.data_ && !b.data_) throw ContractViolation("arithmetic on placeholder tower elements");
    if (a.data_ && b.data_ && a.data_ != b.data_ && !(a.data_->alpha == b.data_->alpha)) {
      throw DomainError("tower elements from different extensions");
    }
    return a.data_ ? a.data_ : b.data_;
  }

  std::shared_ptr<const Data> data_;
  BaseElement u_;
  BaseElement v_;
};

/// Base(sqrt(alpha)) with alpha a certified non-square of Base.
template <ExactField Base>
class QuadTower {
 public:
  using Element = TowerElement<Base>;
  using BaseElement = typename Base::Element;

  QuadTower() = default;
  QuadTower(const Base& base, const BaseElement& alpha) {
    if (base.is_zero(alpha)) throw DomainError("cannot adjoin the square root of zero");
    if (square_root(base, alpha)) throw DomainError("adjoined element is already a square");
    data_ = std::make_shared<const typename Element::Data>(typename Element::Data{base, alpha});
  }

  const Base& base() const { return data_->base; }
  const BaseElement& alpha() const { return data_->alpha; }

  Element make(const BaseElement& u, const BaseElement& v) const { return {data_, u, v}; }
  Element embed(const BaseElement& u) const { return make(u, base().zero()); }
  /// The adjoined square root, (0, 1).
  Element root() const { return make(base().zero(), base().one()); }

  Element zero() const { return embed(base().zero()); }
  Element one() const { return embed(base().one()); }
  Element from_rational(const Rational& q) const { return embed(base().from_rational(q)); }
  bool is_zero(const Element& a) const { return base().is_zero(a.u()) && base().is_zero(a.v()); }
  /// (u + v s)^{-1} = (u - v s) / (u^2 - alpha v^2).
  Element inverse(const Element& a) const {
    if (is_zero(a)) throw DomainError("inverse of zero in a quadratic extension");
    BaseElement norm = a.u() * a.u() - alpha() * a.v() * a.v();
    BaseElement inv = base().inverse(norm);
    return make(a.u() * inv, -(a.v() * inv));
  }
  std::string format(const Element& a) const {
    if (base().is_zero(a.v())) return base().format(a.u());
    return "(" + base().format(a.u()) + ") + (" + base().format(a.v()) + ")*sqrt(" +
           base().format(alpha()) + ")";
  }

  friend bool operator==(const QuadTower& a, const QuadTower& b) {
    return a.data_ == b.data_ || (a.base() == b.base() && a.alpha() == b.alpha());
  }

 private:
  std::shared_ptr<const typename Element::Data> data_;
};

static_assert(ExactField<QuadTower<RationalField>>);
static_assert(ExactField<QuadTower<NumberField>>);

/// Square root of a nonzero a: a base element when a is already a square,
/// otherwise the extension Base(sqrt(a)).
template <ExactField Base>
std::variant<typename Base::Element, QuadTower<Base>> adjoin_sqrt(const Base& base,
                                                                  const typename Base::Element& a) {
  if (base.is_zero(a)) throw DomainError("cannot adjoin the square root of zero");
  if (auto w = square_root(base, a)) return *w;
  return QuadTower<Base>(base, a);
}

}  // namespace conicrank
