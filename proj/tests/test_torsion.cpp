#include <gtest/gtest.h>

#include <random>

#include "arithtrace/oracles.hpp"
#include "helpers.hpp"

using namespace arithtrace;
using namespace testing_helpers;

TEST(Alexander, FromMonodromy) {
  EXPECT_EQ(alexander_from_monodromy(imat({{2, 1}, {1, 1}})), laurent({1, -3, 1}));
  EXPECT_EQ(alexander_from_monodromy(imat({{0, 1}, {-1, 0}})), laurent({1, 0, 1}));
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<long>> id(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    EXPECT_EQ(alexander_from_monodromy(imat(id)), normalize_unit(oracles::binomial_power_t_minus_1(n)));
  }
}

TEST(Alexander, ValueAtOneIsDetOfIMinusM) {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    std::vector<std::vector<Rational>> im(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) im[i][j] = Rational((i == j) - m[i][j]);
    Rational det = Matrix<Rational>(im).det();
    Integer v = alexander_from_monodromy(imat(m)).eval(1);
    EXPECT_EQ(abs_int(v), abs_int(det.get_num()));
  }
}

TEST(MonicReciprocal, Examples) {
  EXPECT_EQ(normalize_monic_reciprocal(laurent({0, -1, 3, -1})), laurent({1, -3, 1}));
  EXPECT_EQ(normalize_monic_reciprocal(laurent({1, 0, 1})), laurent({1, 0, 1}));
  EXPECT_EQ(normalize_monic_reciprocal(laurent({1, -3, 1}, -7)), laurent({1, -3, 1}));
  try {
    normalize_monic_reciprocal(laurent({2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotReciprocal);
  }
}

TEST(Torsion, LowestTerms) {
  auto t1 = reidemeister_torsion(laurent({1, -3, 1}));
  EXPECT_EQ(t1.numerator, laurent({1, -3, 1}));
  EXPECT_EQ(t1.denominator, laurent({1, -2, 1}));
  auto t2 = reidemeister_torsion(laurent({1, -2, 1}));
  EXPECT_EQ(t2.numerator, laurent({1}));
  EXPECT_EQ(t2.denominator, laurent({1}));
  auto t3 = reidemeister_torsion(laurent({-1, 0, 1}));
  EXPECT_EQ(t3.numerator.span(), 1);
  EXPECT_EQ(t3.denominator.span(), 1);
  EXPECT_EQ(t3.numerator.eval(-1), 0);
  EXPECT_EQ(t3.denominator.eval(1), 0);
}

TEST(Kronecker, Examples) {
  EXPECT_TRUE(is_cyclotomic_product(laurent({1, 1, 1, 1, 1})));
  EXPECT_FALSE(is_cyclotomic_product(laurent({1, -3, 1})));
  EXPECT_TRUE(is_cyclotomic_product(laurent({-1, 1})));
  // Lehmer's polynomial
  EXPECT_FALSE(is_cyclotomic_product(laurent({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})));
  EXPECT_THROW(is_cyclotomic_product(laurent({1, 2})), Error);
}

TEST(Kronecker, AgreesWithPowerOracle) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    // random products of a few cyclotomic factors, sometimes times a non-cyclotomic factor
    ZPoly f = zpoly({1});
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) f = f * cyclotomic_polynomial(1 + static_cast<long>(rng() % 15));
    if (rng() % 2) f = f * zpoly({1, static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 3) - 1, 1});
    IntLaurentPoly L = IntLaurentPoly::from_poly(f);
    EXPECT_EQ(is_cyclotomic_product(L), oracles::power_polynomials_bounded(f, 64)) << f.to_string();
  }
}

TEST(Kronecker, CorruptedTableIsDetected) {
  CyclotomicTable bad;
  bad.override_entry(5, zpoly({2, 1, 1, 1, 1}));
  EXPECT_TRUE(bad.modified());
  EXPECT_NE(is_cyclotomic_product(laurent({1, 1, 1, 1, 1}), bad), oracles::power_polynomials_bounded(zpoly({1, 1, 1, 1, 1}), 64));
}

TEST(OffCircle, Examples) {
  auto r = has_root_off_unit_circle(laurent({1, -3, 1}));
  EXPECT_TRUE(r.off_circle);
  ASSERT_TRUE(r.modulus_lower_bound.has_value());
  EXPECT_GT(*r.modulus_lower_bound, 1.0);
  EXPECT_LE(*r.modulus_lower_bound, 2.619);
  EXPECT_FALSE(has_root_off_unit_circle(IntLaurentPoly::from_poly(cyclotomic_polynomial(12))).off_circle);
  auto prod = IntLaurentPoly::from_poly(zpoly({1, -3, 1}) * cyclotomic_polynomial(3));
  EXPECT_TRUE(has_root_off_unit_circle(prod).off_circle);
}
