#pragma once

// Truncated p-adic integers, the binomial power series for principal units,
// and its matrix version on the congruence subgroup of SL(2, Z_p).

#include <array>
#include <map>
#include <vector>

#include "arithtrace/integer.hpp"

namespace arithtrace {

inline constexpr int kDefaultPadicPrecision = 16;

/// An element of Z_p known modulo p^N.
class PadicApprox {
 public:
  PadicApprox(Integer p, int precision, const Integer& value) : p_(std::move(p)), n_(precision) {
    if (!is_prime(p_)) fail(ErrorCode::InvalidInput, "p-adic prime " + p_.get_str() + " is not prime");
    if (n_ < 1) fail(ErrorCode::InvalidInput, "p-adic precision must be positive");
    mod_ = pow_int(p_, static_cast<unsigned long>(n_));
    r_ = mod_floor(value, mod_);
  }

  /// The image of a p-integral rational number.
  static PadicApprox from_rational(const Integer& p, int precision, const Rational& q) {
    Integer m = pow_int(p, static_cast<unsigned long>(precision));
    if (mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t()))
      fail(ErrorCode::InvalidInput, "rational " + arithtrace::to_string(q) + " is not " + p.get_str() + "-integral");
    return PadicApprox(p, precision, q.get_num() * invmod(q.get_den(), m));
  }

  const Integer& prime() const { return p_; }
  int precision() const { return n_; }
  const Integer& residue() const { return r_; }
  const Integer& modulus() const { return mod_; }

  bool is_unit() const { return !mpz_divisible_p(r_.get_mpz_t(), p_.get_mpz_t()); }
  /// v_p of the residue, capped at the precision.
  int valuation() const {
    if (r_ == 0) return n_;
    return static_cast<int>(vp(r_, p_));
  }

  friend bool operator==(const PadicApprox& a, const PadicApprox& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.r_ == b.r_;
  }

  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
    int n = check(a, b);
    return PadicApprox(a.p_, n, a.r_ + b.r_);
  }
  friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) {
    int n = check(a, b);
    return PadicApprox(a.p_, n, a.r_ - b.r_);
  }
  friend PadicApprox operator-(const PadicApprox& a) { return PadicApprox(a.p_, a.n_, -a.r_); }
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
    int n = check(a, b);
    return PadicApprox(a.p_, n, a.r_ * b.r_);
  }

  PadicApprox inverse() const {
    if (!is_unit()) fail(ErrorCode::DivisionByZero, "inverse of a non-unit p-adic number");
    return PadicApprox(p_, n_, invmod(r_, mod_));
  }

  PadicApprox with_precision(int n) const { return PadicApprox(p_, n, r_); }

  std::string to_string() const { return r_.get_str() + " mod " + p_.get_str() + "^" + std::to_string(n_); }

 private:
  static int check(const PadicApprox& a, const PadicApprox& b) {
    if (a.p_ != b.p_) fail(ErrorCode::InvalidInput, "p-adic operands for different primes");
    return std::min(a.n_, b.n_);
  }
  Integer p_;
  int n_;
  Integer mod_;
  Integer r_;
};

namespace detail {

/// Number of series terms needed: every term m with m*v - v_p(m!) >= N can
/// be dropped, and since v_p(m!) <= (m-1)/(p-1) it suffices that
/// m*v - (m-1)/(p-1) >= N for the first dropped m.
inline long binomial_terms(const Integer& p, long v, int N) {
  Integer pm1 = p - 1;
  for (long m = 1;; ++m) {
    // m*v*(p-1) - (m-1) >= N*(p-1)
    Integer lhs = Integer(m) * v * pm1 - (m - 1);
    if (lhs >= Integer(N) * pm1) return m;
  }
}

/// binom(a, m) mod p^N for the natural representative a.
inline Integer binomial_mod(const Integer& a_rep, long m, const Integer& mod) {
  return mod_floor(binomial(a_rep, static_cast<unsigned long>(m)), mod);
}

inline bool principal_unit(const PadicApprox& x) {
  Integer need = x.prime() == 2 ? Integer(4) : x.prime();
  return mod_floor(x.residue(), need) == 1;
}

}  // namespace detail

/// base^exponent for a principal unit base, via sum_m binom(a, m) (base - 1)^m.
inline PadicApprox padic_binomial_pow(const PadicApprox& base, const PadicApprox& exponent) {
  if (base.prime() != exponent.prime()) fail(ErrorCode::InvalidInput, "p-adic operands for different primes");
  if (!detail::principal_unit(base))
    fail(ErrorCode::BaseNotPrincipalUnit,
         "base " + base.residue().get_str() + " is not 1 mod " + (base.prime() == 2 ? "4" : base.prime().get_str()));
  int N = std::min(base.precision(), exponent.precision());
  const Integer& p = base.prime();
  Integer mod = pow_int(p, static_cast<unsigned long>(N));
  // Work with the exponent representative a in [0, p^N); changing a by a
  // multiple of p^N changes the result by a factor that is 1 mod p^{N+1}.
  Integer a = mod_floor(exponent.residue(), mod);
  Integer beta = mod_floor(Integer(base.residue() - 1), mod);
  if (beta == 0) return PadicApprox(p, N, 1);
  long v = vp(beta, p);
  long terms = detail::binomial_terms(p, v, N);
  Integer sum = 0, beta_pow = 1;
  for (long m = 0; m < terms; ++m) {
    if (m > 0) beta_pow = mod_floor(beta_pow * beta, mod);
    if (Integer(m) > a) break;  // binom(a, m) = 0 for natural a < m
    sum += detail::binomial_mod(a, m, mod) * beta_pow;
  }
  return PadicApprox(p, N, sum);
}

using PadicMatrix = std::array<std::array<PadicApprox, 2>, 2>;

inline PadicMatrix padic_matmul(const PadicMatrix& x, const PadicMatrix& y) {
  return {{{x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]},
           {x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]}}};
}

inline PadicMatrix padic_identity(const Integer& p, int N) {
  PadicApprox one(p, N, 1), zero(p, N, 0);
  return {{{one, zero}, {zero, one}}};
}

/// A^exponent for A = I + B in the principal congruence subgroup, via
/// sum_m binom(a, m) B^m.
inline PadicMatrix sl2_padic_power(const PadicMatrix& A, const PadicApprox& exponent) {
  const Integer& p = exponent.prime();
  int N = exponent.precision();
  for (const auto& row : A)
    for (const auto& x : row) {
      if (x.prime() != p) fail(ErrorCode::InvalidInput, "p-adic operands for different primes");
      N = std::min(N, x.precision());
    }
  Integer need = p == 2 ? Integer(4) : p;
  auto cong = [&](const PadicApprox& x, int target) { return mod_floor(Integer(x.residue() - target), need) == 0; };
  if (!cong(A[0][0], 1) || !cong(A[1][1], 1) || !cong(A[0][1], 0) || !cong(A[1][0], 0))
    fail(ErrorCode::NotCongruenceElement, "matrix is not congruent to the identity mod " + need.get_str());
  PadicApprox det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
  if (det.with_precision(N).residue() != 1) fail(ErrorCode::NotCongruenceElement, "matrix does not have determinant 1");
  Integer mod = pow_int(p, static_cast<unsigned long>(N));
  Integer a = mod_floor(exponent.residue(), mod);
  PadicMatrix I = padic_identity(p, N);
  PadicMatrix B = {{{A[0][0].with_precision(N) - I[0][0], A[0][1].with_precision(N)},
                    {A[1][0].with_precision(N), A[1][1].with_precision(N) - I[1][1]}}};
  long v = N;
  for (const auto& row : B)
    for (const auto& x : row)
      if (x.residue() != 0) v = std::min<long>(v, x.valuation());
  PadicMatrix sum = I;
  if (v >= N) return sum;
  long terms = detail::binomial_terms(p, v, N);
  PadicMatrix bpow = I;
  for (long m = 1; m < terms; ++m) {
    if (Integer(m) > a) break;
    bpow = padic_matmul(bpow, B);
    PadicApprox c(p, N, detail::binomial_mod(a, m, mod));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum[i][j] = sum[i][j] + c * bpow[i][j];
  }
  return sum;
}

/// Finite-precision stand-in for a profinite unit: one p-adic unit per prime.
class ProfiniteUnitApprox {
 public:
  ProfiniteUnitApprox() = default;
  void set(const PadicApprox& unit) {
    if (!unit.is_unit()) fail(ErrorCode::InvalidInput, "component at " + unit.prime().get_str() + " is not a unit");
    entries_.insert_or_assign(unit.prime(), unit);
  }
  const std::map<Integer, PadicApprox>& entries() const { return entries_; }

 private:
  std::map<Integer, PadicApprox> entries_;
};

/// Per prime: mu_p = +-1 modulo p^N.
inline std::map<Integer, bool> is_two_torsion(const ProfiniteUnitApprox& mu) {
  std::map<Integer, bool> out;
  for (const auto& [p, x] : mu.entries()) {
    Integer r = x.residue();
    out[p] = (r == 1 || r == x.modulus() - 1 || x.modulus() == 2);
  }
  return out;
}

}  // namespace arithtrace
