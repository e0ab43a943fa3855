#pragma once

// Independent reference computations the suites compare the library against.
// None of these call the routine they check.

#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "arithtrace/arithtrace.hpp"

namespace arithtrace::oracles {

/// n with every square factor removed, sign kept.
inline long squarefree_kernel(long n) {
  long s = n < 0 ? -1 : 1, m = n < 0 ? -n : n, out = 1;
  for (long q = 2; q * q <= m; ++q) {
    int e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e % 2 == 1) out *= q;
  }
  return s * out * m;
}

/// Whether a x^2 + b y^2 = z^2 has a nonzero solution over Q_p, by search
/// modulo p^k. a and b must be squarefree. A primitive solution modulo p^3
/// (2^5 for p = 2) lifts by Hensel's lemma, and every p-adic solution reduces
/// to one.
inline bool locally_solvable(long a, long b, long p) {
  static std::map<std::tuple<long, long, long>, bool> cache;
  auto key = std::make_tuple(a, b, p);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  long m = 1;
  for (int i = 0; i < (p == 2 ? 5 : 3); ++i) m *= p;
  std::vector<char> square(static_cast<std::size_t>(m), 0);
  for (long x = 0; x < m; ++x) square[static_cast<std::size_t>(x * x % m)] = 1;
  std::vector<long> squares;
  for (long r = 0; r < m; ++r)
    if (square[static_cast<std::size_t>(r)]) squares.push_back(r);
  long A = ((a % m) + m) % m, B = ((b % m) + m) % m;
  bool found = false;
  for (long X : squares) {
    for (long Y : squares) {
      long Z = (A * X + B * Y) % m;
      if (!square[static_cast<std::size_t>(Z)]) continue;
      // some coordinate is a unit
      if (X % p != 0 || Y % p != 0 || Z % p != 0) {
        found = true;
        break;
      }
    }
    if (found) break;
  }
  cache[key] = found;
  return found;
}

/// Over R a x^2 + b y^2 = z^2 has a nonzero solution unless the form is negative definite.
inline bool real_solvable(long a, long b) { return a > 0 || b > 0; }

/// Hilbert symbol of integers a, b by brute-force solvability; p = 0 is the real place.
inline int brute_force_symbol(long a, long b, long p) {
  if (p == 0) return real_solvable(a, b) ? 1 : -1;
  return locally_solvable(squarefree_kernel(a), squarefree_kernel(b), p) ? 1 : -1;
}

/// (t - 1)^n expanded with binomial coefficients.
inline IntLaurentPoly binomial_power_t_minus_1(int n) {
  std::map<long, Integer> c;
  for (int k = 0; k <= n; ++k) {
    Integer v = binomial(Integer(n), static_cast<unsigned long>(k));
    c[k] = ((n - k) % 2 == 0) ? v : Integer(-v);
  }
  return IntLaurentPoly(c);
}

/// Power sums p_1..p_count of the roots of a monic integer polynomial (Newton).
inline std::vector<Integer> power_sums(const ZPoly& f, int count) {
  int d = f.degree();
  // e_i with f = t^d - e_1 t^{d-1} + e_2 t^{d-2} - ...
  std::vector<Integer> e(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) e[static_cast<std::size_t>(i)] = (i % 2 == 0) ? f.coeff(d - i) : Integer(-f.coeff(d - i));
  std::vector<Integer> p(static_cast<std::size_t>(count) + 1, Integer(0));
  for (int k = 1; k <= count; ++k) {
    Integer s = 0;
    for (int i = 1; i <= std::min(k - 1, d); ++i) {
      Integer t = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
      s += (i % 2 == 1) ? t : Integer(-t);
    }
    if (k <= d) {
      Integer t = Integer(k) * e[static_cast<std::size_t>(k)];
      s += (k % 2 == 1) ? t : Integer(-t);
    }
    p[static_cast<std::size_t>(k)] = s;
  }
  return p;
}

/// Kronecker's argument made finite: if every root lies on the unit circle,
/// the polynomial of k-th powers of the roots has |e_i| <= C(d, i) for all k.
/// Checks k = 1..max_k through power sums; false means some bound broke.
inline bool power_polynomials_bounded(const ZPoly& f, int max_k) {
  int d = f.degree();
  if (d == 0) return true;
  std::vector<Integer> p = power_sums(f, d * max_k);
  for (int k = 1; k <= max_k; ++k) {
    // elementary symmetric functions of alpha^k from q_j = p_{jk}
    std::vector<Rational> e(static_cast<std::size_t>(d) + 1, Rational(0));
    e[0] = 1;
    for (int i = 1; i <= d; ++i) {
      Rational s = 0;
      for (int j = 1; j <= i; ++j) {
        Rational t = e[static_cast<std::size_t>(i - j)] * Rational(p[static_cast<std::size_t>(j * k)]);
        s += (j % 2 == 1) ? t : Rational(-t);
      }
      e[static_cast<std::size_t>(i)] = s / i;
      Rational bound(binomial(Integer(d), static_cast<unsigned long>(i)));
      if (abs(e[static_cast<std::size_t>(i)]) > bound) return false;
    }
  }
  return true;
}

/// Census of length-m cycles on a rose with `loops` loops labeled in Z/n,
/// by brute force over all words; keyed by the least element of the class of
/// the holonomy under x -> kx, gcd(k, n) = 1.
inline std::map<int, Integer> rose_census_brute_force(int loops, const std::vector<int>& labels, int n, int m) {
  std::set<std::vector<int>> necklaces;
  std::vector<int> w(static_cast<std::size_t>(m), 0);
  for (;;) {
    std::vector<int> best = w;
    for (int r = 1; r < m; ++r) {
      std::vector<int> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      best = std::min(best, rot);
    }
    necklaces.insert(best);
    int i = m - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == loops - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  std::map<int, Integer> out;
  for (const auto& c : necklaces) {
    int h = 0;
    for (int e : c) h = (h + labels[static_cast<std::size_t>(e)]) % n;
    int rep = h;
    for (int k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1) rep = std::min(rep, (h * k) % n);
    out[rep] += 1;
  }
  return out;
}

/// p_2(A, B, C) = (tr ABC - tr ACB) / 2, from collecting the six permutations
/// into two cyclic classes.
inline Rational borel_degree_two(const Matrix<Rational>& A, const Matrix<Rational>& B, const Matrix<Rational>& C) {
  return ((A * B * C).trace() - (A * C * B).trace()) / 2;
}

/// Field generated by the traces of all reduced words up to max_len.
inline Subfield word_trace_field(const GroupRep& rep, int max_len) {
  std::vector<AlgebraicNumber> ts;
  for (const auto& w : reduced_words(rep.rank(), max_len)) ts.push_back(char_on_word(rep, w));
  return subfield_generated(rep.field(), ts);
}

/// Field generated by the squared traces of reduced words up to max_len.
inline Subfield squared_trace_field(const GroupRep& rep, int max_len) {
  std::vector<AlgebraicNumber> ts;
  for (const auto& w : reduced_words(rep.rank(), max_len)) {
    AlgebraicNumber t = char_on_word(rep, w);
    ts.push_back(t * t);
  }
  return subfield_generated(rep.field(), ts);
}

}  // namespace arithtrace::oracles
