#include <gtest/gtest.h>

#include <random>

#include "arithtrace/oracles.hpp"
#include "helpers.hpp"

using namespace arithtrace;
using namespace testing_helpers;

namespace {

HilbertSymbolAlgebra rational_algebra(long a, long b) {
  NumberField Q = NumberField::rationals();
  return HilbertSymbolAlgebra(Q.from_rational(a), Q.from_rational(b));
}

Quaternion quat(const HilbertSymbolAlgebra& A, long t, long x, long y, long z) {
  const NumberField& K = A.field();
  return Quaternion(A, K.from_rational(t), K.from_rational(x), K.from_rational(y), K.from_rational(z));
}

std::vector<long> ramified_primes(const HilbertSymbolAlgebra& A) {
  std::vector<long> out;
  for (const auto& p : ramification_set(A).primes()) out.push_back(p.get_si());
  return out;
}

}  // namespace

TEST(QuaternionProduct, BasisRules) {
  auto A = rational_algebra(2, 3);
  auto i = Quaternion::i(A), j = Quaternion::j(A), k = Quaternion::k(A);
  EXPECT_EQ(quat_mul(i, j), k);
  EXPECT_EQ(quat_mul(j, i), quat(A, 0, 0, 0, -1));
  EXPECT_EQ(i * i, quat(A, 2, 0, 0, 0));
  EXPECT_EQ(j * j, quat(A, 3, 0, 0, 0));
  EXPECT_EQ(k * k, quat(A, -6, 0, 0, 0));
  auto H = rational_algebra(-1, -1);
  EXPECT_EQ(quat(H, 1, 1, 0, 0) * quat(H, 1, 0, 1, 0), quat(H, 1, 1, 1, 1));
  EXPECT_THROW(quat_mul(i, Quaternion::i(H)), Error);
}

TEST(QuaternionProduct, TraceAndNorm) {
  auto H = rational_algebra(-1, -1);
  auto Q = NumberField::rationals();
  EXPECT_EQ(trace_norm(Quaternion::one(H)), std::make_pair(Q.from_rational(2), Q.from_rational(1)));
  EXPECT_EQ(trace_norm(Quaternion::i(H)), std::make_pair(Q.zero(), Q.from_rational(1)));
  EXPECT_EQ(trace_norm(quat(H, 1, 1, 1, 1)), std::make_pair(Q.from_rational(2), Q.from_rational(4)));
}

TEST(QuaternionProduct, QuadraticIdentityAndMultiplicativeNorm) {
  NumberField K = field({-2, 0, 1});
  HilbertSymbolAlgebra A(K.from_rational(-3), K.generator() + K.one());
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> d(-5, 5);
  auto r = [&] {
    auto c = [&] { return K.from_coords({Rational(d(rng)), make_rational(d(rng), 2)}); };
    return Quaternion(A, c(), c(), c(), c());
  };
  for (int n = 0; n < 50; ++n) {
    auto p = r(), s = r();
    auto [t, nr] = trace_norm(p);
    EXPECT_EQ(p * p - t * p + nr * Quaternion::one(A), Quaternion::scalar(A, K.zero()));
    EXPECT_EQ((p * s).conjugate(), s.conjugate() * p.conjugate());
    EXPECT_EQ((p * s).norm(), p.norm() * s.norm());
  }
}

TEST(TraceRelations, SplitModelExamples) {
  NumberField Q = NumberField::rationals();
  Mat2 A = mat(Q, {{1, 1}, {0, 1}}), B = mat(Q, {{1, 0}, {1, 1}});
  EXPECT_EQ((A * B.sl2_inverse()).trace(), Q.from_rational(1));
  EXPECT_EQ((A * B * A.sl2_inverse() * B.sl2_inverse()).trace(), Q.from_rational(3));
  for (auto rel : all_trace_relations()) {
    std::vector<Mat2> args;
    for (std::size_t i = 0; i < trace_relation_arity(rel); ++i) args.push_back(i % 2 ? B : A * B);
    EXPECT_TRUE(trace_relation_check(rel, args)) << trace_relation_name(rel);
  }
}

TEST(TraceRelations, RejectsNonUnimodular) {
  NumberField Q = NumberField::rationals();
  std::vector<Mat2> args{mat(Q, {{2, 0}, {0, 1}})};
  EXPECT_THROW(trace_relation_check(TraceRelation::Square, args), Error);
}

TEST(LocalSymbols, AgreeWithSolvabilityOracle) {
  for (long a = -10; a <= 10; ++a) {
    for (long b = -10; b <= 10; ++b) {
      if (a == 0 || b == 0) continue;
      int product = 1;
      for (long p : {0L, 2L, 3L, 5L, 7L, 11L, 13L}) {
        RationalPlace place = p == 0 ? RationalPlace::infinity() : RationalPlace::prime(p);
        int s = hilbert_symbol_local(a, b, place);
        EXPECT_EQ(s, oracles::brute_force_symbol(a, b, p)) << a << "," << b << " at " << place.to_string();
        product *= s;
      }
      // every prime dividing 2ab is among those listed
      EXPECT_EQ(product, 1) << a << "," << b;
    }
  }
}

TEST(LocalSymbols, Examples) {
  EXPECT_EQ(hilbert_symbol_local(-1, -1, RationalPlace::prime(2)), -1);
  EXPECT_EQ(hilbert_symbol_local(-1, -1, RationalPlace::prime(3)), 1);
  EXPECT_EQ(hilbert_symbol_local(2, 3, RationalPlace::infinity()), 1);
  EXPECT_THROW(hilbert_symbol_local(0, 3, RationalPlace::prime(3)), Error);
}

TEST(Ramification, RationalExamples) {
  auto H = rational_algebra(-1, -1);
  auto r = ramification_set(H);
  EXPECT_EQ(ramified_primes(H), std::vector<long>{2});
  EXPECT_EQ(r.real_places.size(), 1u);
  EXPECT_TRUE(ramification_set(rational_algebra(1, 1)).empty());
  auto M = rational_algebra(-1, 3);
  EXPECT_EQ(ramified_primes(M), (std::vector<long>{2, 3}));
  EXPECT_TRUE(ramification_set(M).real_places.empty());
  EXPECT_TRUE(real_place_ramified(H, places(H.field()).real[0]));
  EXPECT_FALSE(real_place_ramified(rational_algebra(2, -3), places(H.field()).real[0]));
}

TEST(Ramification, RealPlacesOverQuadraticField) {
  NumberField K = field({-2, 0, 1});
  // a = -1, b = sqrt2: ramified at the embedding sending sqrt2 to -sqrt2 only
  HilbertSymbolAlgebra A(K.from_rational(-1), K.generator());
  auto ps = places(K);
  int ramified = 0;
  for (auto& s : ps.real) ramified += real_place_ramified(A, s);
  EXPECT_EQ(ramified, 1);
  auto r = ramification_set(A);
  EXPECT_EQ(r.size() % 2, 0u);
}

TEST(Ramification, ParityOnRandomPairs) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> d(-60, 60);
  for (int n = 0; n < 100; ++n) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    EXPECT_EQ(ramification_set(rational_algebra(a, b)).size() % 2, 0u) << a << "," << b;
  }
}

TEST(Isomorphism, Examples) {
  auto A = rational_algebra(-2, 5), B = rational_algebra(5, -2);
  EXPECT_TRUE(algebras_isomorphic(A, B));
  EXPECT_FALSE(algebras_isomorphic(rational_algebra(-1, -1), rational_algebra(1, 1)));
  EXPECT_TRUE(algebras_isomorphic(A, rational_algebra(-2 * 9, 5 * 49)));
  NumberField K = field({-2, 0, 1});
  HilbertSymbolAlgebra L(K.one(), K.one());
  EXPECT_THROW(algebras_isomorphic(A, L), Error);
}

TEST(HilbertAlgebra, RejectsZeroEntries) { EXPECT_THROW(rational_algebra(0, 1), Error); }
