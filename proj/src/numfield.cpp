#include "conicrank/numfield.hpp"

#include "conicrank/funcfield.hpp"
#include "modp.hpp"

namespace conicrank {

namespace {

const std::shared_ptr<const UniPoly>& joint(const std::shared_ptr<const UniPoly>& a,
                                            const std::shared_ptr<const UniPoly>& b) {
  if (!a && !b) throw ContractViolation("arithmetic on placeholder number-field elements");
  if (a && b && a != b && !(*a == *b)) throw DomainError("elements of different number fields");
  return a ? a : b;
}

// Polynomial through (xs[i], ys[i]) by Newton divided differences.
UniPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
  }
  UniPoly acc(Var::x);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * UniPoly(Var::x, std::vector<Rational>{-xs[i], 1}) + UniPoly::constant(Var::x, ys[i]);
  }
  return acc;
}

bool reducible_mod(const Rational& q, std::uint64_t p) {
  return q.get_den() % static_cast<unsigned long>(p) != 0;
}

std::uint64_t reduce_rational(const modp::Field& F, const Rational& q) {
  return F.mul(F.reduce(q.get_num()), F.inv(F.reduce(q.get_den())));
}

modp::Poly reduce_poly(const modp::Field& F, const UniPoly& f) {
  modp::Poly out;
  for (const auto& c : f.coeffs()) out.push_back(reduce_rational(F, c));
  F.trim(out);
  return out;
}

// Primes at which reduction of K and a is a ring homomorphism onto F_p for
// each simple root of the modulus.
bool admissible(std::uint64_t p, const UniPoly& m, const UniPoly& a, const Rational& disc) {
  for (const auto& c : m.coeffs()) {
    if (!reducible_mod(c, p)) return false;
  }
  for (const auto& c : a.coeffs()) {
    if (!reducible_mod(c, p)) return false;
  }
  const unsigned long pl = static_cast<unsigned long>(p);
  return disc.get_num() % pl != 0 && disc.get_den() % pl != 0;
}

std::optional<NonSquareCertificate> modular_screen(const NumberField& K, const NFElement& a) {
  const UniPoly& m = K.modulus();
  const Rational disc = m.degree() >= 2 ? discriminant(m) : Rational(1);
  for (auto p : modp::small_primes(60)) {
    if (!admissible(p, m, a.rep(), disc)) continue;
    modp::Field F(p);
    const modp::Poly mp = reduce_poly(F, m);
    const modp::Poly ap = reduce_poly(F, a.rep());
    for (auto r : F.roots(mp)) {
      std::uint64_t v = F.eval(ap, r);
      if (v != 0 && F.legendre(v) == p - 1) return NonSquareCertificate{p, r, v};
    }
  }
  return std::nullopt;
}

// Norm over Q of G(y) = (y - s*theta)^2 - a, as a polynomial in y.
UniPoly shifted_norm(const NumberField& K, const NFElement& a, long s) {
  const UniPoly& m = K.modulus();
  const int n = m.degree();
  std::vector<Rational> ys, values;
  for (long j = 0; j <= 2 * n; ++j) {
    UniPoly lin(Var::x, std::vector<Rational>{Rational(j), Rational(-s)});
    UniPoly g = (lin * lin - a.rep()) % m;
    ys.emplace_back(j);
    values.push_back(g.is_zero() ? Rational(0) : resultant(m, g));
  }
  return interpolate(ys, values);
}

}  // namespace

const UniPoly& NFElement::modulus() const {
  if (!m_) throw ContractViolation("placeholder number-field element has no field");
  return *m_;
}

NFElement NFElement::operator-() const { return {m_, -rep_}; }

NFElement operator+(const NFElement& a, const NFElement& b) {
  return {joint(a.m_, b.m_), a.rep_ + b.rep_};
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  return {joint(a.m_, b.m_), a.rep_ - b.rep_};
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  const auto& m = joint(a.m_, b.m_);
  return {m, (a.rep_ * b.rep_) % *m};
}

bool operator==(const NFElement& a, const NFElement& b) { return a.rep_ == b.rep_; }

NumberField::NumberField(const UniPoly& m) {
  if (m.degree() < 1) throw DomainError("number-field modulus must have degree >= 1");
  FactoredPoly f = factor(m);
  if (f.factors.size() != 1 || f.factors[0].second != 1) {
    throw DomainError("number-field modulus " + m.to_string() + " is reducible");
  }
  m_ = std::make_shared<const UniPoly>(m.monic().with_var(Var::x));
}

NFElement NumberField::reduce(const UniPoly& p) const {
  if (!m_) throw ContractViolation("reduction into a placeholder number field");
  return {m_, p.with_var(Var::x) % *m_};
}

NFElement NumberField::inverse(const NFElement& a) const {
  if (a.is_zero()) throw DomainError("inverse of zero in " + m_->to_string());
  Bezout b = extended_gcd(a.rep(), *m_);
  return {m_, b.s % *m_};
}

std::optional<Rational> NumberField::as_rational(const NFElement& a) const {
  if (a.rep().degree() > 0) return std::nullopt;
  return a.rep().coeff(0);
}

NFElement reduce_mod(const UniPoly& p, const NumberField& K) { return K.reduce(p); }

bool check_certificate(const NumberField& K, const NFElement& a, const NonSquareCertificate& c) {
  const UniPoly& m = K.modulus();
  const Rational disc = m.degree() >= 2 ? discriminant(m) : Rational(1);
  if (c.prime < 3 || !admissible(c.prime, m, a.rep(), disc)) return false;
  for (std::uint64_t d = 2; d * d <= c.prime; ++d) {
    if (c.prime % d == 0) return false;
  }
  modp::Field F(c.prime);
  if (F.eval(reduce_poly(F, m), c.root) != 0) return false;
  std::uint64_t v = F.eval(reduce_poly(F, a.rep()), c.root);
  return v == c.residue && v != 0 && F.legendre(v) == c.prime - 1;
}

SquareTest is_square_nf(const NumberField& K, const NFElement& a) {
  if (a.is_zero()) return {K.zero(), std::nullopt};
  if (K.degree() == 1) {
    if (auto s = is_square_rational(a.rep().coeff(0))) return {K.from_rational(*s), std::nullopt};
  }
  if (auto cert = modular_screen(K, a)) return {std::nullopt, cert};
  if (K.degree() == 1) return {};

  using KPoly = GPoly<NumberField>;
  const NFElement theta = K.theta();
  for (long k = 0; k < 64; ++k) {
    const long s = (k % 2 == 0) ? -k / 2 : (k + 1) / 2;  // 0, 1, -1, 2, -2, ...
    UniPoly N = shifted_norm(K, a, s);
    if (gcd(N, N.derivative()).degree() > 0) continue;
    const NFElement st = K.from_rational(s) * theta;
    const KPoly G(K, {st * st - a, -(st + st), K.one()});
    for (const auto& [h, mult] : factor(N).factors) {
      KPoly d = gcd(KPoly::lift(K, h), G);
      if (d.degree() != 1) continue;
      NFElement beta = -d.coeff(0) - st;
      if (beta * beta == a) return {beta, std::nullopt};
      throw ConsistencyError("SquareWitness", "norm factor produced a root that does not square back");
    }
    return {};
  }
  throw ConsistencyError("SquareTest", "no squarefree shifted norm found");
}

}  // namespace conicrank
