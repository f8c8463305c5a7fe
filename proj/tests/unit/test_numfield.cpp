#include <gtest/gtest.h>

#include "conicrank/errors.hpp"
#include "conicrank/numfield.hpp"
#include "field_samples.hpp"
#include "oracles.hpp"

using namespace conicrank;

namespace {

UniPoly X(std::initializer_list<long> c) { return UniPoly(Var::x, c); }

}  // namespace

TEST(NumberField, Arithmetic) {
  NumberField Ki(X({1, 0, 1}));
  EXPECT_EQ(Ki.theta() * Ki.theta(), Ki.from_rational(-1));
  NumberField K2(X({-2, 0, 1}));
  EXPECT_EQ(K2.inverse(K2.theta()), K2.reduce(X({0, 1}).scaled(Rational(1, 2))));
  EXPECT_EQ(K2.theta() + K2.zero(), K2.theta());
  EXPECT_THROW(K2.inverse(K2.zero()), DomainError);
}

TEST(NumberField, ModulusMustBeIrreducible) {
  EXPECT_THROW(NumberField(X({-1, 0, 1})), DomainError);
  NumberField K(X({2, 0, 2}));
  EXPECT_EQ(K.modulus(), X({1, 0, 1}));
}

TEST(NumberField, ReduceMod) {
  EXPECT_TRUE(reduce_mod(X({-1, 0, 1}), NumberField(X({-1, 1}))).is_zero());
  NumberField K2(X({-2, 0, 1}));
  EXPECT_EQ(reduce_mod(X({0, 0, 0, 1}), K2).rep(), X({0, 2}));
  EXPECT_EQ(reduce_mod(X({5}), K2).rep(), X({5}));
}

TEST(SquareTest, Examples) {
  NumberField Ki(X({1, 0, 1}));
  auto w = is_square_nf(Ki, Ki.from_rational(-1)).witness;
  ASSERT_TRUE(w);
  EXPECT_EQ(*w * *w, Ki.from_rational(-1));

  NumberField K2(X({-2, 0, 1}));
  w = is_square_nf(K2, K2.from_rational(2)).witness;
  ASSERT_TRUE(w);
  EXPECT_EQ(*w * *w, K2.from_rational(2));

  NumberField K3(X({-3, 0, 1}));
  SquareTest t = is_square_nf(K3, K3.from_rational(2));
  EXPECT_FALSE(t.witness);
  ASSERT_TRUE(t.certificate);
  EXPECT_TRUE(check_certificate(K3, K3.from_rational(2), *t.certificate));
  EXPECT_TRUE(oracle::certificate_holds(K3.modulus(), X({2}), t.certificate->prime, t.certificate->root));
}

TEST(SquareTest, CubicField) {
  NumberField K(X({-2, 0, 0, 1}));
  SquareTest t = is_square_nf(K, K.theta());
  EXPECT_FALSE(t.witness);
  EXPECT_TRUE(oracle::modular_obstruction_exists(K.modulus(), X({0, 1})));
  NFElement s = K.reduce(X({1, 1, 1}));
  auto w = is_square_nf(K, s * s).witness;
  ASSERT_TRUE(w);
  EXPECT_EQ(*w * *w, s * s);
}

TEST(SquareTest, SquaresOfRandomElementsAreRecognised) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    NumberField K = samples::random_field(rng, 1 + i % 4);
    NFElement g = samples::random_element(rng, K, 4);
    if (g.is_zero()) continue;
    NFElement a = g * g;
    SquareTest t = is_square_nf(K, a);
    ASSERT_TRUE(t.witness) << K.modulus().to_string() << " : " << a.rep().to_string();
    EXPECT_EQ(*t.witness * *t.witness, a);
    EXPECT_TRUE(*t.witness == g || *t.witness == -g);
  }
}

TEST(SquareTest, LowDegreeAgreesWithExactOracle) {
  std::mt19937_64 rng(43);
  int squares = 0, non_squares = 0;
  for (int i = 0; i < 300; ++i) {
    NumberField K = samples::random_field(rng, 1 + i % 2);
    NFElement a = samples::random_element(rng, K, 6);
    if (i % 5 == 0) a = a * a;
    if (a.is_zero()) continue;
    SquareTest t = is_square_nf(K, a);
    const bool expected = oracle::square_in_low_degree_field(K.modulus(), a.rep());
    EXPECT_EQ(t.witness.has_value(), expected) << K.modulus().to_string() << " : " << a.rep().to_string();
    (expected ? squares : non_squares)++;
  }
  EXPECT_GT(squares, 30);
  EXPECT_GT(non_squares, 30);
}

TEST(SquareTest, RejectionsCarryObstructions) {
  std::mt19937_64 rng(47);
  int rejected = 0;
  for (int i = 0; rejected < 100; ++i) {
    NumberField K = samples::random_field(rng, 1 + i % 4);
    NFElement a = samples::random_element(rng, K, 5);
    if (a.is_zero()) continue;
    SquareTest t = is_square_nf(K, a);
    if (t.witness) continue;
    ++rejected;
    if (t.certificate) {
      EXPECT_TRUE(oracle::certificate_holds(K.modulus(), a.rep(), t.certificate->prime, t.certificate->root));
    } else if (K.degree() <= 2) {
      EXPECT_FALSE(oracle::square_in_low_degree_field(K.modulus(), a.rep()));
    } else {
      EXPECT_TRUE(oracle::modular_obstruction_exists(K.modulus(), a.rep()));
    }
  }
}

TEST(SquareTest, CertificateCheckRejectsForgeries) {
  NumberField K(X({-3, 0, 1}));
  NFElement two = K.from_rational(2);
  SquareTest t = is_square_nf(K, two);
  ASSERT_TRUE(t.certificate);
  NonSquareCertificate forged = *t.certificate;
  forged.root = 0;  // x^2 - 3 has no root at 0 mod p > 3
  EXPECT_FALSE(check_certificate(K, two, forged));
  forged = *t.certificate;
  forged.residue = (forged.residue + 1) % forged.prime;
  EXPECT_FALSE(check_certificate(K, two, forged));
  forged = *t.certificate;
  forged.prime = 2 * forged.prime + 1;
  EXPECT_FALSE(check_certificate(K, two, forged));
  EXPECT_FALSE(check_certificate(K, K.from_rational(4), *t.certificate));
}

TEST(Tower, AdjoinSqrt) {
  auto r = adjoin_sqrt(RationalField{}, Rational(4));
  ASSERT_TRUE(std::holds_alternative<Rational>(r));
  EXPECT_EQ(std::get<Rational>(r) * std::get<Rational>(r), 4);

  auto t = adjoin_sqrt(RationalField{}, Rational(2));
  ASSERT_TRUE(std::holds_alternative<QuadTower<RationalField>>(t));
  const auto& L = std::get<QuadTower<RationalField>>(t);
  EXPECT_EQ(L.root() * L.root(), L.from_rational(2));
  EXPECT_EQ(L.inverse(L.make(1, 1)), L.make(-1, 1));
  EXPECT_THROW(QuadTower<RationalField>(RationalField{}, Rational(9)), DomainError);
  EXPECT_THROW(QuadTower<RationalField>(RationalField{}, Rational(0)), DomainError);
}

TEST(Tower, OverNumberField) {
  NumberField K(X({1, -1, 1}));  // primitive sixth root of unity
  auto t = adjoin_sqrt(K, K.from_rational(2));
  ASSERT_TRUE(std::holds_alternative<QuadTower<NumberField>>(t));
  const auto& L = std::get<QuadTower<NumberField>>(t);
  EXPECT_EQ(L.root() * L.root(), L.from_rational(2));
  // -3 is a square in Q(zeta_6): (2 theta - 1)^2 = -3.
  auto s = adjoin_sqrt(K, K.from_rational(-3));
  ASSERT_TRUE(std::holds_alternative<NFElement>(s));
}

template <class F>
void check_field_axioms(const F& field, const std::vector<typename F::Element>& xs) {
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      for (const auto& c : xs) {
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
      }
    }
    EXPECT_EQ(a + field.zero(), a);
    EXPECT_EQ(a * field.one(), a);
    EXPECT_TRUE(field.is_zero(a - a));
    if (!field.is_zero(a)) EXPECT_EQ(a * field.inverse(a), field.one());
  }
}

TEST(Tower, FieldAxioms) {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 4; ++round) {
    NumberField K = samples::random_field(rng, 2 + round % 2);
    NFElement alpha;
    do {
      alpha = samples::random_element(rng, K, 3);
    } while (alpha.is_zero() || is_square_nf(K, alpha).witness);
    QuadTower<NumberField> L(K, alpha);
    std::vector<TowerElement<NumberField>> xs;
    for (int i = 0; i < 5; ++i) xs.push_back(L.make(samples::random_element(rng, K, 3), samples::random_element(rng, K, 3)));
    check_field_axioms(L, xs);
    std::vector<NFElement> ks;
    for (int i = 0; i < 5; ++i) ks.push_back(samples::random_element(rng, K, 3));
    check_field_axioms(K, ks);
  }
}

TEST(Tower, MixingExtensionsIsRejected) {
  QuadTower<RationalField> A(RationalField{}, Rational(2)), B(RationalField{}, Rational(3));
  EXPECT_THROW(A.root() + B.root(), DomainError);
}
