#include <gtest/gtest.h>

#include <random>

#include "arithtrace/oracles.hpp"
#include "helpers.hpp"

using namespace arithtrace;
using namespace testing_helpers;

namespace {

NumberField eisenstein() { return field({1, 1, 1}); }

// figure-eight style parabolic pair over Q(omega)
GroupRep parabolic() {
  NumberField K = eisenstein();
  Mat2 a = mat(K, {{1, 1}, {0, 1}});
  Mat2 b({{K.one(), K.zero()}, {-K.generator(), K.one()}});
  return GroupRep(K, {a, b});
}

GroupRep quaternion_group() {
  NumberField K = field({1, 0, 1});
  AlgebraicNumber i = K.generator();
  Mat2 a({{i, K.zero()}, {K.zero(), -i}});
  Mat2 b = mat(K, {{0, 1}, {-1, 0}});
  return GroupRep(K, {a, b});
}

GroupRep over_q(std::vector<std::vector<std::vector<long>>> ms) {
  NumberField Q = NumberField::rationals();
  std::vector<Mat2> imgs;
  for (const auto& m : ms) imgs.push_back(mat(Q, m));
  return GroupRep(Q, imgs);
}

GroupRep conjugate(const GroupRep& rep, const Mat2& g) {
  std::vector<Mat2> imgs;
  for (const auto& m : rep.images()) imgs.push_back(g * m * g.inverse());
  return GroupRep(rep.field(), imgs);
}

std::string min_poly(const Subfield& s) { return s.field().min_poly().to_string(); }

}  // namespace

TEST(Character, Words) {
  auto rep = over_q({{{2, 1}, {1, 1}}});
  EXPECT_EQ(char_on_word(rep, {}), rep.field().from_rational(2));
  EXPECT_EQ(char_on_word(rep, {1}), rep.field().from_rational(3));
  EXPECT_EQ(char_on_word(rep, {-1}), rep.field().from_rational(3));
  EXPECT_THROW(char_on_word(rep, {2}), Error);
}

TEST(Character, ReconstructionFromSubsetTraces) {
  auto rep = over_q({{{2, 1}, {1, 1}}, {{1, 0}, {3, 1}}, {{0, -1}, {1, 2}}});
  auto cd = character_data(rep);
  for (const auto& w : reduced_words(3, 5)) EXPECT_EQ(trace_from_character_data(cd, w), char_on_word(rep, w));
}

TEST(Irreducibility, Examples) {
  auto r = is_irreducible_rep(over_q({{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}}));
  EXPECT_TRUE(r.irreducible);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness_value, NumberField::rationals().from_rational(3));
  EXPECT_FALSE(is_irreducible_rep(over_q({{{1, 1}, {0, 1}}, {{-1, 5}, {0, -1}}})).irreducible);
  EXPECT_FALSE(is_irreducible_rep(over_q({{{2, 1}, {1, 1}}})).irreducible);
}

TEST(Irreducibility, ConjugationInvariant) {
  auto rep = over_q({{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}});
  auto red = over_q({{{1, 1}, {0, 1}}, {{3, 2}, {1, 1}}});
  Mat2 g = mat(NumberField::rationals(), {{2, 1}, {5, 3}});
  EXPECT_EQ(is_irreducible_rep(conjugate(rep, g)).irreducible, is_irreducible_rep(rep).irreducible);
  EXPECT_EQ(is_irreducible_rep(conjugate(red, g)).irreducible, is_irreducible_rep(red).irreducible);
}

TEST(ZariskiDensity, Verdicts) {
  EXPECT_EQ(is_zariski_dense(parabolic()).verdict, Verdict::True);
  EXPECT_EQ(is_zariski_dense(quaternion_group()).verdict, Verdict::False);
  EXPECT_EQ(is_zariski_dense(over_q({{{1, 1}, {0, 1}}, {{1, 3}, {0, 1}}})).verdict, Verdict::False);
}

TEST(TraceField, Examples) {
  EXPECT_EQ(trace_field(over_q({{{2, 1}, {1, 1}}, {{1, 0}, {1, 1}}})).field().degree(), 1);
  EXPECT_EQ(min_poly(trace_field(parabolic())), "x^2 + 3");
  EXPECT_EQ(min_poly(oracles::word_trace_field(parabolic(), 6)), "x^2 + 3");
  NumberField K = eisenstein();
  Mat2 g({{K.generator(), K.from_rational(2)}, {K.one(), K.one()}});
  EXPECT_EQ(min_poly(trace_field(conjugate(parabolic(), g))), "x^2 + 3");
  try {
    trace_field(over_q({{{2, 1}, {1, 1}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ReducibleRepresentation);
  }
}

TEST(InvariantTraceField, Examples) {
  auto rep = parabolic();
  EXPECT_EQ(min_poly(invariant_trace_field(rep)), "x^2 + 3");
  EXPECT_EQ(min_poly(oracles::squared_trace_field(rep, 6)), "x^2 + 3");
  EXPECT_EQ(min_poly(invariant_trace_field(twist_rep(rep, {-1, 1}))), "x^2 + 3");
  EXPECT_EQ(invariant_trace_field(over_q({{{2, 1}, {1, 1}}, {{1, 0}, {1, 1}}})).field().degree(), 1);
  auto five = over_q({{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}, {{2, 1}, {1, 1}}, {{1, 2}, {0, 1}}, {{1, 0}, {2, 1}}});
  try {
    invariant_trace_field(five);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankTooLarge);
  }
}

TEST(QuaternionAlgebraOfRep, SymbolsVerifyAndClassify) {
  auto rep = over_q({{{2, 1}, {1, 1}}, {{1, 0}, {1, 1}}});
  auto q = quaternion_algebra_of_rep(rep);
  EXPECT_TRUE(q.verified);
  // integral matrices over Q generate a split algebra
  EXPECT_TRUE(ramification_set(q.algebra).empty());
  auto h = quaternion_algebra_of_rep(quaternion_group());
  EXPECT_TRUE(h.verified);
  auto r = ramification_set(h.algebra);
  EXPECT_EQ(r.primes(), std::vector<Integer>{2});
  EXPECT_EQ(r.real_places.size(), 1u);
  Mat2 g = mat(NumberField::rationals(), {{3, 1}, {2, 1}});
  auto qc = quaternion_algebra_of_rep(conjugate(rep, g));
  EXPECT_TRUE(algebras_isomorphic(q.algebra, qc.algebra));
}

TEST(QuaternionAlgebraOfRep, InvariantAlgebraUnderTwistAndRestriction) {
  auto rep = parabolic();
  auto a = invariant_quaternion_algebra(rep);
  auto b = invariant_quaternion_algebra(twist_rep(rep, {1, -1}));
  EXPECT_TRUE(a.verified);
  EXPECT_TRUE(b.verified);
  EXPECT_TRUE(algebras_isomorphic(a.algebra, b.algebra));
  auto sub = restrict_rep(rep, index_two_subgroup(2, {1, 0}));
  auto c = invariant_quaternion_algebra(sub);
  EXPECT_EQ(c.algebra.field().min_poly(), a.algebra.field().min_poly());
  EXPECT_TRUE(same_ramification(ramification_set(a.algebra), ramification_set(c.algebra)));
}

TEST(Boundedness, Examples) {
  auto integral = over_q({{{2, 1}, {1, 1}}, {{1, 0}, {1, 1}}});
  for (long p : {2, 3, 5, 7}) EXPECT_TRUE(is_bounded_at_prime(integral, primes_above(integral.field(), p)[0]));
  NumberField Q = NumberField::rationals();
  Mat2 d({{Q.from_rational(2), Q.zero()}, {Q.zero(), Q.from_rational(Rational(1, 2))}});
  GroupRep unb(Q, {d, mat(Q, {{2, 1}, {1, 1}})});
  EXPECT_FALSE(is_bounded_at_prime(unb, primes_above(Q, 2)[0]));
  EXPECT_TRUE(is_bounded_at_prime(unb, primes_above(Q, 3)[0]));
  auto par = parabolic();
  auto above7 = primes_above(par.field(), 7);
  ASSERT_EQ(above7.size(), 2u);
  for (const auto& P : above7) EXPECT_TRUE(is_bounded_at_prime(par, P));
}

TEST(SignEquivalence, Examples) {
  auto rep = parabolic();
  EXPECT_TRUE(pm1_equivalent(rep, rep));
  EXPECT_TRUE(pm1_equivalent(rep, twist_rep(rep, {-1, 1})));
  NumberField K = eisenstein();
  GroupRep other(K, {mat(K, {{1, 2}, {0, 1}}), rep.images()[1]});
  EXPECT_FALSE(pm1_equivalent(rep, other));
  try {
    pm1_equivalent(quaternion_group(), quaternion_group());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotZariskiDense);
  }
}
