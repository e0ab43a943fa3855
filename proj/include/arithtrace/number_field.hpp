#pragma once

// Number fields Q[x]/(f) with f monic irreducible in Z[x], and their elements
// in the power basis of the root theta.

#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "arithtrace/linalg.hpp"
#include "arithtrace/modpoly.hpp"
#include "arithtrace/poly.hpp"

namespace arithtrace {

class AlgebraicNumber;

class NumberField {
 public:
  /// Q itself, encoded by the polynomial x.
  NumberField() : NumberField(ZPoly{Integer(0), Integer(1)}, false) {}

  /// `min_poly` must be monic, integral and irreducible over Q. The
  /// irreducibility check (Zassenhaus) can be skipped for polynomials that are
  /// already known to be minimal polynomials.
  explicit NumberField(const ZPoly& min_poly, bool check_irreducible = true) {
    if (min_poly.degree() < 1 || !min_poly.is_monic())
      fail(ErrorCode::InvalidInput, "field polynomial must be monic of degree >= 1");
    if (check_irreducible && !is_irreducible(min_poly))
      fail(ErrorCode::InvalidInput, "field polynomial " + min_poly.to_string() + " is reducible");
    auto data = std::make_shared<Data>();
    data->min_poly = min_poly;
    data->degree = min_poly.degree();
    // x^k mod f for k = n .. 2n-2, used by multiplication
    int n = data->degree;
    std::vector<Integer> cur(static_cast<std::size_t>(n), Integer(0));
    for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = -min_poly.coeff(i);  // x^n
    for (int k = n; k <= 2 * n - 2; ++k) {
      data->reduction.push_back(cur);
      // multiply by x
      Integer top = cur.back();
      std::vector<Integer> next(static_cast<std::size_t>(n), Integer(0));
      for (int i = n - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      for (int i = 0; i < n; ++i) next[static_cast<std::size_t>(i)] -= top * min_poly.coeff(i);
      cur = std::move(next);
    }
    d_ = std::move(data);
  }

  static NumberField rationals() { return NumberField(); }

  const ZPoly& min_poly() const { return d_->min_poly; }
  int degree() const { return d_->degree; }
  bool is_rational_field() const { return d_->degree == 1; }

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.d_ == b.d_ || a.d_->min_poly == b.d_->min_poly;
  }
  friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

  AlgebraicNumber zero() const;
  AlgebraicNumber one() const;
  AlgebraicNumber generator() const;
  AlgebraicNumber from_rational(const Rational& q) const;
  AlgebraicNumber from_coords(std::vector<Rational> coords) const;
  AlgebraicNumber from_poly(const QPoly& p) const;

  const std::vector<std::vector<Integer>>& reduction_table() const { return d_->reduction; }

  std::string to_string() const { return "Q[x]/(" + d_->min_poly.to_string() + ")"; }

 private:
  struct Data {
    ZPoly min_poly;
    int degree = 1;
    std::vector<std::vector<Integer>> reduction;
  };
  std::shared_ptr<const Data> d_;
};

class AlgebraicNumber {
 public:
  AlgebraicNumber(NumberField field, std::vector<Rational> coords) : field_(std::move(field)), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != field_.degree())
      fail(ErrorCode::InvalidInput, "coordinate count does not match field degree");
  }

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& a : c_)
      if (a != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  /// Valid when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  QPoly as_poly() const { return QPoly(c_); }

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    a.check_same(b);
    std::vector<Rational> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return AlgebraicNumber(a.field_, std::move(c));
  }
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    a.check_same(b);
    std::vector<Rational> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return AlgebraicNumber(a.field_, std::move(c));
  }
  friend AlgebraicNumber operator-(const AlgebraicNumber& a) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v = -v;
    return AlgebraicNumber(a.field_, std::move(c));
  }
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    a.check_same(b);
    int n = a.field_.degree();
    if (n == 1) return AlgebraicNumber(a.field_, {a.c_[0] * b.c_[0]});
    std::vector<Rational> prod(static_cast<std::size_t>(2 * n - 1), Rational(0));
    for (int i = 0; i < n; ++i) {
      if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < n; ++j)
        prod[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    std::vector<Rational> c(prod.begin(), prod.begin() + n);
    const auto& table = a.field_.reduction_table();
    for (int k = n; k <= 2 * n - 2; ++k) {
      const Rational& top = prod[static_cast<std::size_t>(k)];
      if (top == 0) continue;
      const auto& row = table[static_cast<std::size_t>(k - n)];
      for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] += top * row[static_cast<std::size_t>(i)];
    }
    return AlgebraicNumber(a.field_, std::move(c));
  }
  friend AlgebraicNumber operator*(const Rational& s, const AlgebraicNumber& a) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v *= s;
    return AlgebraicNumber(a.field_, std::move(c));
  }

  AlgebraicNumber inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero algebraic number");
    if (field_.degree() == 1) return AlgebraicNumber(field_, {Rational(1) / c_[0]});
    auto [g, s, t] = xgcd(as_poly(), to_qpoly(field_.min_poly()));
    // g is a nonzero constant because the modulus is irreducible
    return field_.from_poly(s);
  }

  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

  AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
  AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
  AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }

  AlgebraicNumber pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgebraicNumber result = field_.one(), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Matrix of multiplication by this element in the power basis (column j is
  /// this * theta^j).
  std::vector<std::vector<Rational>> multiplication_matrix() const {
    int n = field_.degree();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    AlgebraicNumber col = *this;
    AlgebraicNumber theta = field_.generator();
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.c_[static_cast<std::size_t>(i)];
      col = col * theta;
    }
    return m;
  }

  /// Field trace Tr_{K/Q}.
  Rational field_trace() const {
    auto m = multiplication_matrix();
    Rational t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
  }

  /// Field norm N_{K/Q}.
  Rational field_norm() const {
    QPoly cp = charpoly(multiplication_matrix());
    Rational n = cp.coeff(0);
    return (field_.degree() % 2 == 0) ? n : Rational(-n);
  }

  std::string to_string(const std::string& var = "a") const { return as_poly().to_string(var); }

 private:
  void check_same(const AlgebraicNumber& o) const {
    if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "operands live in different number fields");
  }
  NumberField field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }
inline AlgebraicNumber one_like(const AlgebraicNumber& a) { return a.field().one(); }
inline AlgebraicNumber zero_like(const AlgebraicNumber& a) { return a.field().zero(); }

inline AlgebraicNumber NumberField::zero() const {
  return AlgebraicNumber(*this, std::vector<Rational>(static_cast<std::size_t>(degree()), Rational(0)));
}
inline AlgebraicNumber NumberField::one() const { return from_rational(1); }
inline AlgebraicNumber NumberField::generator() const {
  if (degree() == 1) return from_rational(-min_poly().coeff(0));
  std::vector<Rational> c(static_cast<std::size_t>(degree()), Rational(0));
  c[1] = 1;
  return AlgebraicNumber(*this, std::move(c));
}
inline AlgebraicNumber NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()), Rational(0));
  c[0] = q;
  return AlgebraicNumber(*this, std::move(c));
}
inline AlgebraicNumber NumberField::from_coords(std::vector<Rational> coords) const {
  return AlgebraicNumber(*this, std::move(coords));
}
inline AlgebraicNumber NumberField::from_poly(const QPoly& p) const {
  QPoly r = divmod(p, to_qpoly(min_poly())).second;
  std::vector<Rational> c(static_cast<std::size_t>(degree()), Rational(0));
  for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(i);
  return AlgebraicNumber(*this, std::move(c));
}

enum class ArithOp { Add, Sub, Mul, Div };

inline AlgebraicNumber nf_arithmetic(const AlgebraicNumber& a, const AlgebraicNumber& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  fail(ErrorCode::InvalidInput, "unknown arithmetic operation");
}

/// Least-degree monic rational polynomial vanishing at a: the squarefree
/// part of its characteristic polynomial (which is a power of the minimal
/// polynomial).
inline QPoly minimal_polynomial(const AlgebraicNumber& a) {
  if (a.is_rational()) return QPoly{Rational(-a.rational_part()), Rational(1)};
  return squarefree_part(charpoly(a.multiplication_matrix()));
}

/// A subfield Q(theta') of an ambient field, with theta' given in ambient
/// coordinates.
class Subfield {
 public:
  Subfield(NumberField field, AlgebraicNumber primitive) : field_(std::move(field)), primitive_(std::move(primitive)) {
    const NumberField& amb = primitive_.field();
    AlgebraicNumber pw = amb.one();
    for (int j = 0; j < field_.degree(); ++j) {
      powers_.push_back(pw.coords());
      pw = pw * primitive_;
    }
  }

  const NumberField& field() const { return field_; }
  const NumberField& ambient() const { return primitive_.field(); }
  /// The generator of `field()` as an ambient element.
  const AlgebraicNumber& primitive() const { return primitive_; }

  std::optional<AlgebraicNumber> try_to_subfield(const AlgebraicNumber& a) const {
    if (a.field() != ambient()) fail(ErrorCode::FieldMismatch, "element is not in the ambient field");
    auto x = solve_columns<Rational>(powers_, a.coords(), Rational(0));
    if (!x) return std::nullopt;
    return field_.from_coords(*x);
  }

  bool contains(const AlgebraicNumber& a) const { return try_to_subfield(a).has_value(); }

  AlgebraicNumber to_subfield(const AlgebraicNumber& a) const {
    auto r = try_to_subfield(a);
    if (!r) fail(ErrorCode::FieldMismatch, "element does not lie in the subfield");
    return *r;
  }

  AlgebraicNumber to_ambient(const AlgebraicNumber& b) const {
    if (b.field() != field_) fail(ErrorCode::FieldMismatch, "element is not in the subfield");
    AlgebraicNumber acc = ambient().zero();
    for (int j = 0; j < field_.degree(); ++j) {
      std::vector<Rational> c = powers_[static_cast<std::size_t>(j)];
      acc = acc + b.coords()[static_cast<std::size_t>(j)] * ambient().from_coords(c);
    }
    return acc;
  }

 private:
  NumberField field_;
  AlgebraicNumber primitive_;
  std::vector<std::vector<Rational>> powers_;
};

namespace detail {

/// Integer vectors with |c|_1 == total in a fixed order: entries compared by
/// the key 0 < 1 < -1 < 2 < -2 < ... lexicographically.
inline void spiral_vectors(std::size_t len, long total, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (cur.size() == len) {
    if (total == 0) out.push_back(cur);
    return;
  }
  std::size_t remaining = len - cur.size();
  for (long mag = 0; mag <= total; ++mag) {
    if (remaining == 1 && mag != total) continue;
    for (int sgn : {1, -1}) {
      if (mag == 0 && sgn == -1) continue;
      cur.push_back(sgn * mag);
      spiral_vectors(len, total - mag, cur, out);
      cur.pop_back();
    }
  }
}

/// Rewrites a primitive element into a normalized one generating the same
/// field: translate to trace zero, scale to an algebraic integer, then strip
/// integer factors k with k^i | a_{n-i}.
inline AlgebraicNumber normalize_primitive(const AlgebraicNumber& theta) {
  QPoly mp = minimal_polynomial(theta);
  int d = mp.degree();
  Rational shift = mp.coeff(d - 1) / Rational(d);
  AlgebraicNumber t = theta + theta.field().from_rational(shift);
  QPoly m2 = minimal_polynomial(t);
  // smallest s with s*t integral: v_p(s) * i + v_p(a_{d-i}) >= 0 for all i
  std::map<Integer, long> need;
  for (int i = 1; i <= d; ++i) {
    Rational c = m2.coeff(d - i);
    if (c == 0) continue;
    for (const auto& [p, e] : factor_integer(c.get_den())) {
      long k = (e + i - 1) / i;
      need[p] = std::max(need[p], k);
    }
  }
  Integer scale = 1;
  for (const auto& [p, k] : need) scale *= pow_int(p, static_cast<unsigned long>(k));
  t = Rational(scale) * t;
  QPoly m3 = minimal_polynomial(t);
  // strip k with k^i | a_{d-i}
  Integer g = 0;
  for (int i = 1; i <= d; ++i)
    if (m3.coeff(d - i) != 0) g = gcd_int(g, m3.coeff(d - i).get_num());
  Integer strip = 1;
  if (g != 0) {
    for (const auto& [p, e] : factor_integer(g)) {
      (void)e;
      while (true) {
        Integer k = strip * p;
        bool ok = true;
        for (int i = 1; i <= d && ok; ++i) {
          Integer c = m3.coeff(d - i).get_num();
          if (c == 0) continue;
          if (!mpz_divisible_p(c.get_mpz_t(), pow_int(k, static_cast<unsigned long>(i)).get_mpz_t())) ok = false;
        }
        if (!ok) break;
        strip = k;
      }
    }
  }
  if (strip != 1) t = make_rational(1, strip) * t;
  return t;
}

}  // namespace detail

/// The subfield Q(elements) of their common ambient field. Returns the field
/// of a (normalized) primitive element found in deterministic spiral order
/// over integer combinations of the independent inputs.
inline Subfield subfield_generated(const NumberField& ambient, const std::vector<AlgebraicNumber>& elements) {
  int n = ambient.degree();
  EchelonBasis<Rational> span(static_cast<std::size_t>(n));
  std::vector<AlgebraicNumber> basis_elems;
  span.insert(ambient.one().coords());
  basis_elems.push_back(ambient.one());
  std::vector<AlgebraicNumber> gens;
  for (const auto& a : elements) {
    if (a.field() != ambient) fail(ErrorCode::FieldMismatch, "subfield generators must share the ambient field");
    if (span.contains(a.coords())) continue;
    gens.push_back(a);
    // close the span under multiplication by all generators
    std::vector<AlgebraicNumber> queue{a};
    span.insert(a.coords());
    basis_elems.push_back(a);
    for (std::size_t idx = 0; idx < basis_elems.size(); ++idx) {
      for (const auto& g : gens) {
        AlgebraicNumber prod = basis_elems[idx] * g;
        if (span.insert(prod.coords())) basis_elems.push_back(prod);
      }
    }
  }
  std::size_t dim = span.rank();
  if (dim == 1) return Subfield(NumberField::rationals(), ambient.one());
  for (long total = 1;; ++total) {
    std::vector<std::vector<long>> vecs;
    std::vector<long> cur;
    detail::spiral_vectors(gens.size(), total, cur, vecs);
    for (const auto& c : vecs) {
      long g = 0;
      for (long v : c) g = std::gcd(g, std::labs(v));
      if (g != 1) continue;
      AlgebraicNumber theta = ambient.zero();
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (c[i] != 0) theta = theta + Rational(c[i]) * gens[i];
      QPoly mp = minimal_polynomial(theta);
      if (static_cast<std::size_t>(mp.degree()) != dim) continue;
      AlgebraicNumber prim = detail::normalize_primitive(theta);
      ZPoly zmp = to_zpoly(minimal_polynomial(prim));
      return Subfield(NumberField(zmp, false), prim);
    }
  }
}

}  // namespace arithtrace
