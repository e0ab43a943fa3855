#pragma once

// Dense univariate polynomials over Integer or Rational, constant term first.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arithtrace/integer.hpp"

namespace arithtrace {

template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const R& a) { return Poly(std::vector<R>{a}); }
  static Poly monomial(const R& a, int degree) {
    std::vector<R> c(static_cast<std::size_t>(degree) + 1, R(0));
    c.back() = a;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(R(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int i) const {
    return (i < 0 || i > degree()) ? R(0) : c_[static_cast<std::size_t>(i)];
  }
  R lc() const { return c_.empty() ? R(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<R> c(a.c_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const R& s, const Poly& a) {
    std::vector<R> c(a.c_);
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  template <class V>
  V eval(const V& x) const {
    V acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * R(static_cast<long>(i));
    return Poly(std::move(c));
  }

  /// Coefficient reversal t^deg f(1/t).
  Poly reversed() const {
    std::vector<R> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c));
  }

  /// f(g)
  Poly compose(const Poly& g) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + Poly::constant(*it);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      R a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      bool neg = a < 0;
      R mag = neg ? R(-a) : a;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      bool unit = (mag == 1);
      if (!unit || i == 0) out += arithtrace::to_string(mag);
      if (i >= 1) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<R> c_;
};

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

inline QPoly to_qpoly(const ZPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.emplace_back(a);
  return QPoly(std::move(c));
}

/// Quotient and remainder over Q.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> r(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  Rational inv_lc = Rational(1) / b.lc();
  for (int i = a.degree(); i >= db; --i) {
    Rational coef = r[static_cast<std::size_t>(i)] * inv_lc;
    q[static_cast<std::size_t>(i - db)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= coef * b.coeff(j);
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

/// Division of integer polynomials by a monic divisor; exact over Z.
inline std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b) {
  if (!b.is_monic()) fail(ErrorCode::InvalidInput, "divisor must be monic");
  std::vector<Integer> r(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {ZPoly(), a};
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1), Integer(0));
  for (int i = a.degree(); i >= db; --i) {
    Integer coef = r[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - db)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= coef * b.coeff(j);
  }
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

inline QPoly monic(const QPoly& f) {
  if (f.is_zero()) return f;
  return (Rational(1) / f.lc()) * f;
}

inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
inline std::tuple<QPoly, QPoly, QPoly> xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b, s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = Rational(1) / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

/// f / gcd(f, f'), monic.
inline QPoly squarefree_part(const QPoly& f) {
  if (f.degree() <= 0) return monic(f);
  QPoly g = gcd(f, f.derivative());
  return monic(divmod(f, g).first);
}

inline Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& a : f.coeffs()) g = gcd_int(g, a);
  return g;
}

/// Scales a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
inline ZPoly primitive_integer_part(const QPoly& f) {
  if (f.is_zero()) return ZPoly();
  Integer den = 1;
  for (const auto& a : f.coeffs()) den = lcm_int(den, a.get_den());
  std::vector<Integer> c;
  for (const auto& a : f.coeffs()) c.push_back(Integer(a * den));
  ZPoly z(std::move(c));
  Integer g = content(z);
  if (z.lc() < 0) g = -g;
  std::vector<Integer> d;
  for (const auto& a : z.coeffs()) d.push_back(Integer(a / g));
  return ZPoly(std::move(d));
}

/// Integer polynomial when every coefficient is integral; throws otherwise.
inline ZPoly to_zpoly(const QPoly& f) {
  std::vector<Integer> c;
  for (const auto& a : f.coeffs()) {
    if (a.get_den() != 1) fail(ErrorCode::InvalidInput, "polynomial has non-integral coefficient");
    c.push_back(a.get_num());
  }
  return ZPoly(std::move(c));
}

inline bool has_integer_coeffs(const QPoly& f) {
  for (const auto& a : f.coeffs())
    if (a.get_den() != 1) return false;
  return true;
}

/// Characteristic polynomial det(t*I - M) of a square rational matrix
/// (Faddeev-LeVerrier; exact over Q).
template <class Mat>
QPoly charpoly(const Mat& m) {
  std::size_t n = m.size();
  if (n == 0) return QPoly::constant(1);
  using Row = std::vector<Rational>;
  std::vector<Row> a(n, Row(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  std::vector<Row> mk(n, Row(n, Rational(0)));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{n-k+1} I
    std::vector<Row> next(n, Row(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * mk[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * next[l][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
    mk = std::move(next);
  }
  return QPoly(std::move(c));
}

/// Resultant of two integer polynomials via the Sylvester matrix determinant
/// (Bareiss fraction-free elimination).
inline Integer resultant(const ZPoly& f, const ZPoly& g) {
  int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0) return pow_int(f.lc(), static_cast<unsigned long>(n));
  if (n == 0) return pow_int(g.lc(), static_cast<unsigned long>(m));
  std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g.coeff(n - j);
  // Bareiss
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (s[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < size && s[piv][k] == 0) ++piv;
      if (piv == size) return 0;
      std::swap(s[k], s[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Integer v = s[i][j] * s[k][k] - s[i][k] * s[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        s[i][j] = v;
      }
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  Integer det = s[size - 1][size - 1];
  return sign > 0 ? det : Integer(-det);
}

inline Integer discriminant(const ZPoly& f) {
  int n = f.degree();
  Integer r = resultant(f, f.derivative());
  // disc = (-1)^{n(n-1)/2} res(f, f') / lc(f)
  Integer d = r / f.lc();
  if (((n * (n - 1)) / 2) % 2 != 0) d = -d;
  return d;
}

}  // namespace arithtrace
