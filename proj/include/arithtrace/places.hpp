#pragma once

// Archimedean places of a number field. Real roots of the defining
// polynomial are isolated by Sturm sequences; complex roots by certified
// disks around floating-point approximations. All public data is rational.

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "arithtrace/number_field.hpp"

namespace arithtrace {

struct RationalInterval {
  Rational lo, hi;
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

namespace detail {

inline RationalInterval interval_mul(const RationalInterval& a, const RationalInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

/// Encloses q(x) for all x in [lo, hi] (Horner with interval arithmetic).
inline RationalInterval eval_interval(const QPoly& q, const RationalInterval& x) {
  if (q.is_zero()) return {0, 0};
  RationalInterval acc{q.lc(), q.lc()};
  for (int i = q.degree() - 1; i >= 0; --i) {
    acc = interval_mul(acc, x);
    acc.lo += q.coeff(i);
    acc.hi += q.coeff(i);
  }
  return acc;
}

inline std::vector<QPoly> sturm_sequence(const QPoly& f) {
  std::vector<QPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

inline int sign_changes(const std::vector<QPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    Rational v = p.eval(x);
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Cauchy bound: all roots have |z| < bound.
inline Rational root_bound(const QPoly& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rational c = abs(f.coeff(i) / f.lc());
    if (c > m) m = c;
  }
  return m + 1;
}

}  // namespace detail

/// A real embedding: the unique root of the defining polynomial in [lo, hi].
class RealPlace {
 public:
  RealPlace(NumberField field, int index, RationalInterval iv) : field_(std::move(field)), index_(index), iv_(std::move(iv)) {}

  const NumberField& field() const { return field_; }
  /// Position in increasing order of the real roots.
  int index() const { return index_; }
  const RationalInterval& interval() const { return iv_; }

  /// Halves the isolating interval.
  void refine() {
    if (iv_.lo == iv_.hi) return;
    QPoly f = to_qpoly(field_.min_poly());
    Rational mid = (iv_.lo + iv_.hi) / 2;
    Rational fm = f.eval(mid);
    if (fm == 0) {
      iv_ = {mid, mid};
      return;
    }
    if (sgn(f.eval(iv_.lo)) * sgn(fm) < 0)
      iv_.hi = mid;
    else
      iv_.lo = mid;
  }

  /// Refines until the width is at most `width`.
  void refine_to(const Rational& width) {
    while (iv_.hi - iv_.lo > width) refine();
  }

  /// Exact sign of sigma(a); a must belong to this place's field.
  int sign_of(const AlgebraicNumber& a) {
    if (a.field() != field_) fail(ErrorCode::FieldMismatch, "element does not belong to the place's field");
    if (a.is_zero()) return 0;
    QPoly q = a.as_poly();
    while (true) {
      auto v = detail::eval_interval(q, iv_);
      if (v.lo > 0) return 1;
      if (v.hi < 0) return -1;
      if (iv_.lo == iv_.hi) return sgn(v.lo);
      refine();
    }
  }

  /// Rational approximation of sigma(a) within `eps`.
  Rational approximate(const AlgebraicNumber& a, const Rational& eps) {
    QPoly q = a.as_poly();
    while (true) {
      auto v = detail::eval_interval(q, iv_);
      if (v.hi - v.lo <= eps) return (v.lo + v.hi) / 2;
      refine();
    }
  }

 private:
  NumberField field_;
  int index_;
  RationalInterval iv_;
};

/// A conjugate pair of complex embeddings, represented by the root with
/// positive imaginary part. The disk |z - center| <= radius contains exactly
/// that root and no other root of the defining polynomial.
class ComplexPlace {
 public:
  ComplexPlace(NumberField field, Rational re, Rational im, Rational radius)
      : field_(std::move(field)), re_(std::move(re)), im_(std::move(im)), radius_(std::move(radius)) {}

  const NumberField& field() const { return field_; }
  const Rational& center_re() const { return re_; }
  const Rational& center_im() const { return im_; }
  const Rational& radius() const { return radius_; }

  /// Axis-aligned box containing the root.
  RationalInterval re_box() const { return {re_ - radius_, re_ + radius_}; }
  RationalInterval im_box() const { return {im_ - radius_, im_ + radius_}; }

  /// One exact Newton step from the current center; the radius is recertified
  /// and only accepted if it shrinks.
  void refine();

 private:
  NumberField field_;
  Rational re_, im_, radius_;
};

namespace detail {

struct CRat {
  Rational re, im;
};
inline CRat cmul(const CRat& a, const CRat& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline CRat cadd(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
inline CRat cdiv(const CRat& a, const CRat& b) {
  Rational d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline CRat ceval(const QPoly& f, const CRat& z) {
  CRat acc{f.lc(), 0};
  for (int i = f.degree() - 1; i >= 0; --i) acc = cadd(cmul(acc, z), CRat{f.coeff(i), 0});
  return acc;
}

/// Rational upper bound for sqrt(q), q >= 0.
inline Rational sqrt_upper(const Rational& q) {
  if (q == 0) return 0;
  double approx = std::sqrt(q.get_d());
  Rational r(approx * (1 + 1e-9) + 1e-300);
  while (r * r < q) r *= Rational(11, 10);
  return r;
}

/// Radius n * |f(z) / f'(z)|: the disk around z of this radius contains a root.
inline std::optional<Rational> newton_radius(const QPoly& f, const CRat& z) {
  CRat fz = ceval(f, z);
  CRat dz = ceval(f.derivative(), z);
  Rational dn = dz.re * dz.re + dz.im * dz.im;
  if (dn == 0) return std::nullopt;
  Rational q = (fz.re * fz.re + fz.im * fz.im) / dn;
  return Rational(f.degree()) * sqrt_upper(q);
}

/// Rounds to a dyadic rational with `bits` fractional bits.
inline Rational round_dyadic(const Rational& q, unsigned bits) {
  Integer scale = pow_int(2, bits);
  Integer n = q.get_num() * scale;
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), q.get_den().get_mpz_t());
  return make_rational(r, scale);
}

/// Aberth iteration in long double.
inline std::vector<std::complex<long double>> aberth_roots(const QPoly& f) {
  using C = std::complex<long double>;
  int n = f.degree();
  std::vector<C> coeff(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) coeff[static_cast<std::size_t>(i)] = C(static_cast<long double>(f.coeff(i).get_d()), 0);
  auto eval = [&](const C& z, C& d) {
    C p = coeff.back();
    d = 0;
    for (int i = n - 1; i >= 0; --i) {
      d = d * z + p;
      p = p * z + coeff[static_cast<std::size_t>(i)];
    }
    return p;
  };
  long double r = static_cast<long double>(root_bound(f).get_d());
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(r * 0.5L, 2.0L * 3.14159265358979323846L * (k + 0.25L) / n);
  for (int iter = 0; iter < 500; ++iter) {
    long double moved = 0;
    for (int k = 0; k < n; ++k) {
      C d;
      C p = eval(z[static_cast<std::size_t>(k)], d);
      if (p == C(0)) continue;
      C ratio = p / d;
      C s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += C(1) / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      C w = ratio / (C(1) - ratio * s);
      z[static_cast<std::size_t>(k)] -= w;
      moved = std::max(moved, std::abs(w));
    }
    if (moved < 1e-30L) break;
  }
  return z;
}

}  // namespace detail

inline void ComplexPlace::refine() {
  QPoly f = to_qpoly(field_.min_poly());
  detail::CRat z{re_, im_};
  detail::CRat step = detail::cdiv(detail::ceval(f, z), detail::ceval(f.derivative(), z));
  unsigned bits = 8;
  while (Rational(1, 1) / Rational(pow_int(2, bits)) > radius_ / 1024) bits += 8;
  detail::CRat next{detail::round_dyadic(z.re - step.re, bits), detail::round_dyadic(z.im - step.im, bits)};
  auto r = detail::newton_radius(f, next);
  if (!r || *r >= radius_) return;
  // the new disk must stay inside the old one so it isolates the same root
  Rational dre = next.re - re_, dim = next.im - im_;
  Rational dist = detail::sqrt_upper(dre * dre + dim * dim);
  if (dist + *r > radius_) return;
  re_ = next.re;
  im_ = next.im;
  radius_ = *r;
}

struct Places {
  std::vector<RealPlace> real;
  std::vector<ComplexPlace> complex;
};

/// Real places (roots in increasing order) and one representative per pair
/// of complex places; r1 + 2 r2 = degree.
inline Places places(const NumberField& field) {
  Places out;
  QPoly f = to_qpoly(field.min_poly());
  int n = f.degree();
  if (n == 1) {
    Rational r = -f.coeff(0);
    out.real.emplace_back(field, 0, RationalInterval{r, r});
    return out;
  }
  // Real roots by Sturm bisection. The polynomial is irreducible of degree
  // >= 2, so no rational point is a root.
  auto seq = detail::sturm_sequence(f);
  Rational b = detail::root_bound(f);
  std::vector<RationalInterval> stack{{-b, b}};
  std::vector<RationalInterval> found;
  while (!stack.empty()) {
    auto iv = stack.back();
    stack.pop_back();
    int count = detail::sign_changes(seq, iv.lo) - detail::sign_changes(seq, iv.hi);
    if (count == 0) continue;
    if (count == 1) {
      found.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < found.size(); ++i) out.real.emplace_back(field, static_cast<int>(i), found[i]);

  int pairs = (n - static_cast<int>(found.size())) / 2;
  if (pairs == 0) return out;

  // Complex roots: approximate, then certify disjoint disks of radius
  // n|f/f'| around each approximation, refining with exact Newton steps.
  auto approx = detail::aberth_roots(f);
  std::vector<detail::CRat> centers;
  for (const auto& z : approx)
    centers.push_back({detail::round_dyadic(Rational(static_cast<double>(z.real())), 60),
                       detail::round_dyadic(Rational(static_cast<double>(z.imag())), 60)});
  std::vector<Rational> radii(centers.size());
  for (int attempt = 0; attempt < 40; ++attempt) {
    bool ok = true;
    for (std::size_t k = 0; k < centers.size() && ok; ++k) {
      auto r = detail::newton_radius(f, centers[k]);
      if (!r) {
        ok = false;
        break;
      }
      radii[k] = *r;
    }
    for (std::size_t i = 0; i < centers.size() && ok; ++i)
      for (std::size_t j = i + 1; j < centers.size() && ok; ++j) {
        Rational dre = centers[i].re - centers[j].re, dim = centers[i].im - centers[j].im;
        Rational sum = radii[i] + radii[j];
        if (dre * dre + dim * dim <= sum * sum) ok = false;
      }
    // Every real root's disk meets the real axis, so if exactly r1 disks do,
    // the remaining disks hold the non-real roots.
    if (ok) {
      std::size_t crossing = 0;
      for (std::size_t k = 0; k < centers.size(); ++k)
        if (abs(centers[k].im) <= radii[k]) ++crossing;
      if (crossing != found.size()) ok = false;
    }
    if (ok) break;
    // tighten every center with one exact Newton step
    unsigned bits = 60 + 30 * static_cast<unsigned>(attempt + 1);
    for (auto& c : centers) {
      detail::CRat dz = detail::ceval(f.derivative(), c);
      if (dz.re == 0 && dz.im == 0) continue;
      detail::CRat step = detail::cdiv(detail::ceval(f, c), dz);
      c = {detail::round_dyadic(c.re - step.re, bits), detail::round_dyadic(c.im - step.im, bits)};
    }
    if (attempt == 39) fail(ErrorCode::InvalidInput, "could not certify complex roots of " + field.min_poly().to_string());
  }
  for (std::size_t k = 0; k < centers.size(); ++k) {
    if (abs(centers[k].im) <= radii[k]) continue;  // real root
    if (centers[k].im < 0) continue;
    out.complex.emplace_back(field, centers[k].re, centers[k].im, radii[k]);
  }
  std::sort(out.complex.begin(), out.complex.end(), [](const ComplexPlace& a, const ComplexPlace& b) {
    if (a.center_re() != b.center_re()) return a.center_re() < b.center_re();
    return a.center_im() < b.center_im();
  });
  if (static_cast<int>(out.complex.size()) != pairs)
    fail(ErrorCode::InvalidInput, "complex root certification disagrees with the Sturm count");
  return out;
}

}  // namespace arithtrace
