#include <gtest/gtest.h>

#include "conicrank/errors.hpp"
#include "conicrank/funcfield.hpp"
#include "conicrank/numfield.hpp"
#include "field_samples.hpp"

using namespace conicrank;

namespace {

using QPoly = GPoly<RationalField>;
using QFn = RatFn<RationalField>;

QPoly P(std::vector<Rational> c) { return QPoly(RationalField{}, std::move(c)); }

template <class F>
GPoly<F> random_gpoly(const F& field, int degree, auto&& element) {
  std::vector<typename F::Element> c;
  for (int i = 0; i <= degree; ++i) c.push_back(element());
  return GPoly<F>(field, std::move(c));
}

template <class F>
void check_ratfn_axioms(const std::vector<RatFn<F>>& xs) {
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      for (const auto& c : xs) {
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
      }
      if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.normalized(), a);
    EXPECT_EQ(a.normalized().normalized(), a.normalized());
  }
}

}  // namespace

TEST(GPoly, Basics) {
  QPoly t = QPoly::variable(RationalField{});
  EXPECT_EQ((t * t + P({1}))(Rational(2)), 5);
  auto [q, r] = divrem(P({-1, 0, 1}), P({-1, 1}));
  EXPECT_EQ(q, P({1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(P({-1, 0, 1}), P({-2, 2})), P({-1, 1}));
  EXPECT_THROW(divrem(t, QPoly(RationalField{})), DomainError);
  EXPECT_EQ(QPoly::lift(RationalField{}, UniPoly(Var::T, {1, 2, 3})), P({1, 2, 3}));
}

TEST(RatFn, Normalization) {
  QFn f(P({-1, 0, 1}), P({-1, 1}));
  EXPECT_EQ(f.num(), P({1, 1}));
  EXPECT_EQ(f.den(), P({1}));
  QFn g(P({2}), P({0, 2}));
  EXPECT_EQ(g.num(), P({1}));
  EXPECT_EQ(g.den(), P({0, 1}));
  EXPECT_THROW(QFn(P({1}), QPoly(RationalField{})), DomainError);
  EXPECT_THROW(g(Rational(0)), DomainError);
  EXPECT_EQ(g(Rational(4)), Rational(1, 4));
}

TEST(RatFn, TowerCoefficients) {
  QuadTower<RationalField> L(RationalField{}, Rational(2));
  GPoly<QuadTower<RationalField>> f(L, {L.zero(), L.root()});
  GPoly<QuadTower<RationalField>> expected(L, {L.zero(), L.zero(), L.from_rational(2)});
  EXPECT_EQ(f * f, expected);
}

TEST(RatFn, FieldAxiomsOverQ) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<QFn> xs;
  for (int i = 0; i < 5; ++i) {
    auto el = [&] { return Rational(d(rng)); };
    QPoly den = random_gpoly(RationalField{}, 2, el);
    if (den.is_zero()) den = P({1});
    xs.emplace_back(random_gpoly(RationalField{}, 2, el), den);
  }
  check_ratfn_axioms(xs);
}

TEST(RatFn, FieldAxiomsOverNumberField) {
  std::mt19937_64 rng(67);
  NumberField K = samples::random_field(rng, 3);
  std::vector<RatFn<NumberField>> xs;
  for (int i = 0; i < 4; ++i) {
    auto el = [&] { return samples::random_element(rng, K, 2); };
    GPoly<NumberField> den = random_gpoly(K, 1, el);
    if (den.is_zero()) den = GPoly<NumberField>::constant(K, K.one());
    xs.emplace_back(random_gpoly(K, 1, el), den);
  }
  check_ratfn_axioms(xs);
}

TEST(RatFn, FieldAxiomsOverTower) {
  std::mt19937_64 rng(71);
  NumberField K(UniPoly(Var::x, {1, 0, 1}));
  QuadTower<NumberField> L(K, K.from_rational(3));
  std::vector<RatFn<QuadTower<NumberField>>> xs;
  for (int i = 0; i < 4; ++i) {
    auto el = [&] { return L.make(samples::random_element(rng, K, 2), samples::random_element(rng, K, 2)); };
    GPoly<QuadTower<NumberField>> den = random_gpoly(L, 1, el);
    if (den.is_zero()) den = GPoly<QuadTower<NumberField>>::constant(L, L.one());
    xs.emplace_back(random_gpoly(L, 1, el), den);
  }
  check_ratfn_axioms(xs);
}
