#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace arithtrace;
using namespace testing_helpers;

TEST(NumberFieldArithmetic, DefiningRelationAndInverse) {
  NumberField K = field({-2, 0, 1});
  AlgebraicNumber r2 = K.generator();
  EXPECT_EQ(nf_arithmetic(r2, r2, ArithOp::Mul), K.from_rational(2));
  AlgebraicNumber one_plus = K.one() + r2;
  EXPECT_EQ(nf_arithmetic(K.one(), one_plus, ArithOp::Div), el(K, {"-1", "1"}));
  NumberField Q = NumberField::rationals();
  EXPECT_EQ(nf_arithmetic(Q.from_rational(q("2/3")), Q.from_rational(q("1/6")), ArithOp::Add), Q.from_rational(q("5/6")));
}

TEST(NumberFieldArithmetic, DivisionByZeroAndMismatch) {
  NumberField K = field({-2, 0, 1}), L = field({-3, 0, 1});
  EXPECT_THROW(nf_arithmetic(K.one(), K.zero(), ArithOp::Div), Error);
  EXPECT_THROW(K.one() + L.one(), Error);
}

TEST(NumberFieldArithmetic, FieldAxiomsOnRandomTriples) {
  NumberField K = field({1, -1, 0, 1});  // x^3 - x + 1
  std::mt19937_64 rng(7);
  auto r = [&] {
    std::uniform_int_distribution<long> d(-9, 9);
    return K.from_coords({make_rational(d(rng), 1 + (d(rng) + 9) % 4), Rational(d(rng)), Rational(d(rng))});
  };
  for (int i = 0; i < 50; ++i) {
    auto a = r(), b = r(), c = r();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), K.one());
    }
  }
}

TEST(MinimalPolynomial, Examples) {
  NumberField K = field({-2, 0, 1});
  EXPECT_EQ(minimal_polynomial(K.zero()).to_string(), "x");
  EXPECT_EQ(minimal_polynomial(K.one() + K.generator()).to_string(), "x^2 - 2*x - 1");
  NumberField L = field({1, 0, -10, 0, 1});
  AlgebraicNumber t = L.generator();
  // theta^2 - 5 = 2 sqrt6, so its square is 24
  EXPECT_EQ(minimal_polynomial(t * t - L.from_rational(5)).to_string(), "x^2 - 24");
}

TEST(SubfieldGenerated, Examples) {
  NumberField L = field({1, 0, -10, 0, 1});
  EXPECT_EQ(subfield_generated(L, {}).field().degree(), 1);
  EXPECT_EQ(subfield_generated(L, {L.from_rational(q("5/7"))}).field().degree(), 1);
  AlgebraicNumber t = L.generator();
  // sqrt2 = (t^3 - 9t)/2, sqrt3 = (11t - t^3)/2
  AlgebraicNumber r2 = Rational(1, 2) * (t.pow(3) - Rational(9) * t);
  AlgebraicNumber r3 = Rational(1, 2) * (Rational(11) * t - t.pow(3));
  ASSERT_EQ(r2 * r2, L.from_rational(2));
  ASSERT_EQ(r3 * r3, L.from_rational(3));
  Subfield s = subfield_generated(L, {r2, r3});
  EXPECT_EQ(s.field().degree(), 4);
  EXPECT_EQ(s.field().min_poly().to_string(), "x^4 - 10*x^2 + 1");
  EXPECT_TRUE(s.contains(r2));
}

TEST(Places, SignatureCounts) {
  auto count = [](std::vector<long> c) {
    auto p = places(field(c));
    return std::make_pair(p.real.size(), p.complex.size());
  };
  EXPECT_EQ(count({-2, 0, 1}), std::make_pair(std::size_t(2), std::size_t(0)));
  EXPECT_EQ(count({3, 0, 1}), std::make_pair(std::size_t(0), std::size_t(1)));
  EXPECT_EQ(count({-2, 0, 0, 1}), std::make_pair(std::size_t(1), std::size_t(1)));
  for (auto c : std::vector<std::vector<long>>{{1, 0, -10, 0, 1}, {-5, 1, 0, 1}, {2, 0, 0, 0, 1}}) {
    auto [r1, r2] = count(c);
    EXPECT_EQ(static_cast<int>(r1 + 2 * r2), static_cast<int>(c.size()) - 1);
  }
}

TEST(PrimesAbove, SplittingInQSqrtMinus3) {
  NumberField K = field({3, 0, 1});
  auto at7 = primes_above(K, 7);
  ASSERT_EQ(at7.size(), 2u);
  for (const auto& P : at7) EXPECT_EQ(P.residue_degree, 1);
  auto at5 = primes_above(K, 5);
  ASSERT_EQ(at5.size(), 1u);
  EXPECT_EQ(at5[0].residue_degree, 2);
  EXPECT_EQ(primes_above(NumberField::rationals(), 11).size(), 1u);
}

TEST(PrimesAbove, DegreeSumsToFieldDegree) {
  for (auto c : std::vector<std::vector<long>>{{3, 0, 1}, {-2, 0, 0, 1}, {1, 0, -10, 0, 1}, {1, 1, 1}}) {
    NumberField K = field(c);
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
      std::vector<PrimeData> ps;
      try {
        ps = primes_above(K, p, PrimeSearch::AlternativeModels);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedPrime);
        continue;
      }
      int s = 0;
      for (const auto& P : ps) s += P.residue_degree * P.ramification_index;
      EXPECT_EQ(s, K.degree()) << "p=" << p;
    }
  }
}

TEST(Valuation, Examples) {
  NumberField Q = NumberField::rationals();
  auto P5 = primes_above(Q, 5)[0], P2 = primes_above(Q, 2)[0];
  EXPECT_EQ(*valuation(Q.from_rational(q("10/3")), P5), 1);
  EXPECT_EQ(*valuation(Q.from_rational(q("1/2")), P2), -1);
  EXPECT_FALSE(valuation(Q.zero(), P5).has_value());
  NumberField K = field({3, 0, 1});
  AlgebraicNumber x = Rational(7) * K.generator();
  for (const auto& P : primes_above(K, 7)) EXPECT_EQ(*valuation(x, P), 1);
}

TEST(Valuation, MultiplicativeAndUltrametric) {
  NumberField K = field({3, 0, 1});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-30, 30);
  for (long p : {5, 7, 13}) {
    for (const auto& P : primes_above(K, p)) {
      for (int i = 0; i < 20; ++i) {
        auto a = K.from_coords({Rational(d(rng)), make_rational(d(rng), 1 + (d(rng) + 30) % 5)});
        auto b = K.from_coords({Rational(d(rng)), Rational(d(rng))});
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ(*valuation(a * b, P), *valuation(a, P) + *valuation(b, P));
        if (!(a + b).is_zero()) {
          EXPECT_GE(*valuation(a + b, P), std::min(*valuation(a, P), *valuation(b, P)));
        }
      }
    }
  }
}

TEST(Padic, BinomialSeriesExamples) {
  Integer p(5);
  PadicApprox six(p, 4, 6);
  EXPECT_EQ(padic_binomial_pow(six, PadicApprox(p, 4, -1)).residue(), 521);
  EXPECT_EQ(padic_binomial_pow(six, PadicApprox(p, 4, 2)).residue(), 36);
  auto half = PadicApprox::from_rational(p, 4, Rational(1, 2));
  auto root = padic_binomial_pow(six, half);
  EXPECT_EQ((root * root).residue(), 6);
  EXPECT_THROW(padic_binomial_pow(PadicApprox(p, 4, 2), half), Error);
  EXPECT_THROW(padic_binomial_pow(PadicApprox(Integer(2), 8, 3), PadicApprox(Integer(2), 8, 1)), Error);
}

TEST(Padic, NaturalPowersMatchIteratedProducts) {
  std::mt19937_64 rng(3);
  for (long pl : {3, 5, 7}) {
    Integer p(pl), mod = pow_int(p, 16);
    for (int i = 0; i < 30; ++i) {
      Integer base = Integer(1) + p * Integer(static_cast<long>(rng() % 100000));
      PadicApprox b(p, 16, base);
      int m = static_cast<int>(rng() % 21);
      Integer direct = powmod(base, Integer(m), mod);
      EXPECT_EQ(padic_binomial_pow(b, PadicApprox(p, 16, m)).residue(), direct);
    }
  }
}

TEST(Padic, Sl2PowerExamples) {
  Integer p(5);
  auto P = [&](long v) { return PadicApprox(p, 16, v); };
  PadicMatrix A{{{P(1), P(5)}, {P(0), P(1)}}};
  auto A3 = sl2_padic_power(A, P(3));
  EXPECT_EQ(A3[0][1].residue(), 15);
  EXPECT_EQ(A3[0][0].residue(), 1);
  PadicMatrix I = padic_identity(p, 16);
  auto Ik = sl2_padic_power(I, PadicApprox::from_rational(p, 16, Rational(2, 3)));
  EXPECT_EQ(Ik, I);
  PadicMatrix B{{{P(2), P(5)}, {P(0), P(3)}}};
  EXPECT_THROW(sl2_padic_power(B, P(1)), Error);
}

TEST(Padic, InverseViaSeries) {
  Integer p(5);
  auto P = [&](long v) { return PadicApprox(p, 16, v); };
  // [[1+5a, 5b], [5c, d]] with d fixed by det 1
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    long a = static_cast<long>(rng() % 50), b = static_cast<long>(rng() % 50), c = static_cast<long>(rng() % 50);
    PadicApprox x = P(1 + 5 * a), y = P(5 * b), z = P(5 * c);
    PadicApprox w = (P(1) + y * z) * x.inverse();
    PadicMatrix A{{{x, y}, {z, w}}};
    auto Ai = sl2_padic_power(A, P(-1));
    EXPECT_EQ(padic_matmul(Ai, A), padic_identity(p, 16));
    EXPECT_EQ(Ai[0][0] + Ai[1][1], x + w);
  }
}

TEST(Padic, TwoTorsion) {
  ProfiniteUnitApprox mu;
  mu.set(PadicApprox(Integer(5), 4, 1));
  mu.set(PadicApprox(Integer(7), 4, 1));
  for (const auto& [p, t] : is_two_torsion(mu)) EXPECT_TRUE(t) << p;
  ProfiniteUnitApprox neg;
  neg.set(PadicApprox(Integer(5), 4, 624));
  EXPECT_TRUE(is_two_torsion(neg).at(Integer(5)));
  ProfiniteUnitApprox two;
  two.set(PadicApprox(Integer(5), 4, 2));
  EXPECT_FALSE(is_two_torsion(two).at(Integer(5)));
}
