#pragma once

// Exact integers and rationals (GMP), plus the small amount of elementary
// number theory the rest of the library leans on.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "arithtrace/errors.hpp"

namespace arithtrace {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p", "p/q". No decimal points, no whitespace inside.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorCode::InvalidInput, "empty rational");
  auto check_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(i), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_int(num) || !check_int(den)) fail(ErrorCode::InvalidInput, "malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rat(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) fail(ErrorCode::DivisionByZero, "negative power of zero");
    return pow_rat(Rational(1) / base, -e);
  }
  Integer n = pow_int(base.get_num(), static_cast<unsigned long>(e));
  Integer d = pow_int(base.get_den(), static_cast<unsigned long>(e));
  return make_rational(n, d);
}

/// Least nonnegative residue.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer powmod(const Integer& base, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Inverse modulo m; throws DivisionByZero when gcd(a, m) != 1.
inline Integer invmod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::DivisionByZero, "element not invertible modulo " + m.get_str());
  return mod_floor(r, m);
}

inline bool is_prime(const Integer& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

inline Integer binomial(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// p-adic valuation of a nonzero integer.
inline long vp(const Integer& n, const Integer& p) {
  if (n == 0) fail(ErrorCode::InvalidInput, "valuation of zero integer");
  Integer m = abs_int(n);
  long v = static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
  return v;
}

/// p-adic valuation of a nonzero rational.
inline long vp(const Rational& q, const Integer& p) { return vp(q.get_num(), p) - vp(q.get_den(), p); }

/// Legendre symbol (a/p) for an odd prime p.
inline int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace detail {

inline Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (Integer c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) { return mod_floor(v * v + c, n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd_int(abs_int(Integer(x - y)), n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0), primes ascending.
inline std::map<Integer, int> factor_integer(const Integer& n) {
  if (n == 0) fail(ErrorCode::InvalidInput, "cannot factor zero");
  std::map<Integer, int> out;
  Integer m = abs_int(n);
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    if (p * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Integer(p)];
      m /= p;
    }
  }
  if (m > 1) detail::factor_into(m, out);
  return out;
}

inline std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

/// Euler's totient by factoring.
inline long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace arithtrace
