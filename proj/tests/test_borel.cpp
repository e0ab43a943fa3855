#include <gtest/gtest.h>

#include <random>

#include "arithtrace/oracles.hpp"
#include "helpers.hpp"

using namespace arithtrace;

namespace {

Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (auto& r : rows)
    for (auto& x : r) x = Rational(d(rng));
  return Matrix<Rational>(rows);
}

}  // namespace

TEST(BorelForm, DegreeOneIsTrace) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 100; ++i) {
    auto X = random_matrix(rng, 3);
    EXPECT_EQ(primitive_form_eval<Rational>({X}, 1), X.trace());
  }
}

TEST(BorelForm, DegreeTwoAlternates) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    auto X = random_matrix(rng, 3), Y = random_matrix(rng, 3), Z = random_matrix(rng, 3);
    Rational v = primitive_form_eval<Rational>({X, Y, Z}, 2);
    EXPECT_EQ(primitive_form_eval<Rational>({X, X, Y}, 2), 0);
    EXPECT_EQ(primitive_form_eval<Rational>({Y, X, Z}, 2), -v);
    EXPECT_EQ(primitive_form_eval<Rational>({X, Z, Y}, 2), -v);
    EXPECT_EQ(v, oracles::borel_degree_two(X, Y, Z));
  }
}

TEST(BorelForm, Multilinear) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 20; ++i) {
    auto X = random_matrix(rng, 3), Xp = random_matrix(rng, 3), Y = random_matrix(rng, 3), Z = random_matrix(rng, 3);
    Rational a(2, 3), b(-5);
    Matrix<Rational> comb = a * X + b * Xp;
    EXPECT_EQ(primitive_form_eval<Rational>({comb, Y, Z}, 2),
              a * primitive_form_eval<Rational>({X, Y, Z}, 2) + b * primitive_form_eval<Rational>({Xp, Y, Z}, 2));
  }
}

TEST(BorelForm, ConjugationInvariant) {
  std::mt19937_64 rng(71);
  int done = 0;
  while (done < 20) {
    auto g = random_matrix(rng, 2);
    if (g.det() == 0) continue;
    auto gi = g.inverse();
    auto X = random_matrix(rng, 2), Y = random_matrix(rng, 2), Z = random_matrix(rng, 2);
    EXPECT_EQ(primitive_form_eval<Rational>({g * X * gi, g * Y * gi, g * Z * gi}, 2), primitive_form_eval<Rational>({X, Y, Z}, 2));
    ++done;
  }
}

TEST(BorelForm, Errors) {
  std::mt19937_64 rng(73);
  auto X = random_matrix(rng, 2);
  try {
    primitive_form_eval<Rational>(std::vector<Matrix<Rational>>(9, X), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyArguments);
  }
  EXPECT_THROW(primitive_form_eval<Rational>({X, X}, 2), Error);
  EXPECT_THROW(primitive_form_eval<Rational>({X, X, random_matrix(rng, 3)}, 2), Error);
  EXPECT_EQ(primitive_form_terms(4), 5040);
}
