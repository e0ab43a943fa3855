#pragma once

// The primitive alternating form
//   p_m(X_1, ..., X_{2m-1}) = ((m-1)!)^2 / (2m-1)! * sum_sigma sgn(sigma) tr(X_sigma(1) ... X_sigma(2m-1)).

#include <algorithm>
#include <numeric>
#include <vector>

#include "arithtrace/matrix.hpp"

namespace arithtrace {

inline constexpr int kMaxBorelDegree = 4;

template <class T>
T primitive_form_eval(const std::vector<Matrix<T>>& args, int m) {
  if (m < 1) fail(ErrorCode::InvalidInput, "form degree must be positive");
  if (m > kMaxBorelDegree) fail(ErrorCode::TooManyArguments, "form degree is capped at 4");
  std::size_t k = static_cast<std::size_t>(2 * m - 1);
  if (args.size() != k) fail(ErrorCode::SizeMismatch, "p_m takes exactly 2m - 1 arguments");
  std::size_t n = args[0].rows();
  for (const auto& a : args)
    if (!a.is_square() || a.rows() != n) fail(ErrorCode::SizeMismatch, "arguments must be square of one size");

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  T sum = zero_like(args[0](0, 0));
  do {
    // sign by counting inversions
    int inv = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inv;
    Matrix<T> prod = args[perm[0]];
    for (std::size_t i = 1; i < k; ++i) prod = prod * args[perm[i]];
    T t = prod.trace();
    sum = (inv % 2 == 0) ? T(sum + t) : T(sum - t);
  } while (std::next_permutation(perm.begin(), perm.end()));

  Integer f1 = factorial(static_cast<unsigned long>(m - 1));
  Rational coeff = make_rational(f1 * f1, factorial(k));
  return T(coeff * sum);
}

/// Number of permutations summed for degree m.
inline Integer primitive_form_terms(int m) { return factorial(static_cast<unsigned long>(2 * m - 1)); }

}  // namespace arithtrace
