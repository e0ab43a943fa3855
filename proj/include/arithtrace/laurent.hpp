#pragma once

// Integer Laurent polynomials up to units +-t^k, Alexander polynomials and
// torsion of mapping tori, and the cyclotomic dichotomy.

#include <cmath>
#include <cstdint>
#include <mutex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arithtrace/poly.hpp"

namespace arithtrace {

class IntLaurentPoly {
 public:
  IntLaurentPoly() = default;
  explicit IntLaurentPoly(const std::map<long, Integer>& coeffs) {
    for (const auto& [e, c] : coeffs)
      if (c != 0) c_[e] = c;
  }
  /// t^shift * f(t)
  static IntLaurentPoly from_poly(const ZPoly& f, long shift = 0) {
    IntLaurentPoly p;
    for (int i = 0; i <= f.degree(); ++i)
      if (f.coeff(i) != 0) p.c_[shift + i] = f.coeff(i);
    return p;
  }
  static IntLaurentPoly monomial(const Integer& c, long e) { return IntLaurentPoly({{e, c}}); }

  bool is_zero() const { return c_.empty(); }
  const std::map<long, Integer>& coeffs() const { return c_; }
  Integer coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Integer(0) : it->second;
  }
  long low() const { return c_.begin()->first; }
  long high() const { return c_.rbegin()->first; }
  /// Width high - low; 0 for units and the zero polynomial.
  long span() const { return is_zero() ? 0 : high() - low(); }

  /// The ordinary polynomial t^-low * f.
  ZPoly shifted_poly() const {
    if (is_zero()) return ZPoly();
    std::vector<Integer> v(static_cast<std::size_t>(span() + 1), Integer(0));
    for (const auto& [e, c] : c_) v[static_cast<std::size_t>(e - low())] = c;
    return ZPoly(std::move(v));
  }

  Integer eval(const Integer& t) const {
    if (is_zero()) return 0;
    // only defined at t = +-1 for negative exponents; callers use it there
    Integer acc = 0;
    for (const auto& [e, c] : c_) {
      if (e < 0 && abs_int(t) != 1) fail(ErrorCode::DivisionByZero, "negative power evaluated away from units");
      acc += c * pow_int(t, static_cast<unsigned long>(e < 0 ? -e : e));
    }
    return acc;
  }

  friend bool operator==(const IntLaurentPoly& a, const IntLaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntLaurentPoly& a, const IntLaurentPoly& b) { return !(a == b); }
  friend IntLaurentPoly operator+(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    IntLaurentPoly r = a;
    for (const auto& [e, c] : b.c_) r.add(e, c);
    return r;
  }
  friend IntLaurentPoly operator-(const IntLaurentPoly& a) {
    IntLaurentPoly r = a;
    for (auto& [e, c] : r.c_) c = -c;
    return r;
  }
  friend IntLaurentPoly operator-(const IntLaurentPoly& a, const IntLaurentPoly& b) { return a + (-b); }
  friend IntLaurentPoly operator*(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    IntLaurentPoly r;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) r.add(ea + eb, ca * cb);
    return r;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool neg = c < 0;
      Integer mag = neg ? Integer(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (e == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  void add(long e, const Integer& c) {
    Integer& slot = c_[e];
    slot += c;
    if (slot == 0) c_.erase(e);
  }
  std::map<long, Integer> c_;
};

/// Representative of the unit orbit: ordinary polynomial, nonzero constant
/// term, positive leading coefficient.
inline IntLaurentPoly normalize_unit(const IntLaurentPoly& f) {
  if (f.is_zero()) return f;
  ZPoly g = f.shifted_poly();
  if (g.lc() < 0) g = -g;
  return IntLaurentPoly::from_poly(g);
}

/// det(t I - M) for a square integer matrix, in unit-normal form.
inline IntLaurentPoly alexander_from_monodromy(const std::vector<std::vector<Integer>>& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) fail(ErrorCode::SizeMismatch, "monodromy matrix must be square");
  return normalize_unit(IntLaurentPoly::from_poly(to_zpoly(charpoly(m))));
}

/// Monic representative of the unit orbit; NotMonicNormalizable when the
/// extreme coefficients are not +-1.
inline ZPoly normalize_monic(const IntLaurentPoly& f) {
  if (f.is_zero()) fail(ErrorCode::NotMonicNormalizable, "zero polynomial");
  ZPoly g = f.shifted_poly();
  if (abs_int(g.lc()) != 1) fail(ErrorCode::NotMonicNormalizable, "leading coefficient is not a unit");
  if (g.lc() < 0) g = -g;
  return g;
}

/// The member of the unit orbit that is monic and equal to its reversal.
inline IntLaurentPoly normalize_monic_reciprocal(const IntLaurentPoly& f) {
  if (f.is_zero()) fail(ErrorCode::NotReciprocal, "zero polynomial");
  ZPoly g = f.shifted_poly();
  if (abs_int(g.lc()) != 1) fail(ErrorCode::NotReciprocal, "no monic member in the unit orbit");
  if (g.lc() < 0) g = -g;
  if (g.reversed() != g) fail(ErrorCode::NotReciprocal, f.to_string() + " is not reciprocal");
  return IntLaurentPoly::from_poly(g);
}

struct RationalFunctionPair {
  IntLaurentPoly numerator;
  IntLaurentPoly denominator;

  std::string to_string() const {
    if (denominator == IntLaurentPoly::monomial(1, 0)) return numerator.to_string();
    return "(" + numerator.to_string() + ")/(" + denominator.to_string() + ")";
  }
};

/// Reduces num/den to lowest terms up to units.
inline RationalFunctionPair lowest_terms(const IntLaurentPoly& num, const IntLaurentPoly& den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) return {num, IntLaurentPoly::monomial(1, 0)};
  ZPoly a = num.shifted_poly(), b = den.shifted_poly();
  ZPoly g = primitive_integer_part(gcd(to_qpoly(a), to_qpoly(b)));
  a = to_zpoly(divmod(to_qpoly(a), to_qpoly(g)).first);
  b = to_zpoly(divmod(to_qpoly(b), to_qpoly(g)).first);
  Integer c = gcd_int(content(a), content(b));
  if (b.lc() < 0) c = -c;
  a = to_zpoly((Rational(1) / Rational(c)) * to_qpoly(a));
  b = to_zpoly((Rational(1) / Rational(c)) * to_qpoly(b));
  return {IntLaurentPoly::from_poly(a), IntLaurentPoly::from_poly(b)};
}

/// Delta * (t - 1)^-2 in lowest terms.
inline RationalFunctionPair reidemeister_torsion(const IntLaurentPoly& delta) {
  if (delta.is_zero()) fail(ErrorCode::InvalidInput, "torsion of the zero polynomial");
  IntLaurentPoly tm1 = IntLaurentPoly({{1, Integer(1)}, {0, Integer(-1)}});
  return lowest_terms(normalize_unit(delta), tm1 * tm1);
}

/// n-th cyclotomic polynomial as the Moebius product of t^d - 1 over d | n.
inline ZPoly cyclotomic_polynomial(long n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "cyclotomic index must be positive");
  auto mobius = [](long m) {
    int s = 1;
    for (long q = 2; q * q <= m; ++q) {
      if (m % q != 0) continue;
      m /= q;
      if (m % q == 0) return 0;
      s = -s;
    }
    return m > 1 ? -s : s;
  };
  ZPoly num = ZPoly::constant(Integer(1)), den = ZPoly::constant(Integer(1));
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(n / d);
    ZPoly td = ZPoly::monomial(Integer(1), static_cast<int>(d)) - ZPoly::constant(Integer(1));
    if (mu == 1) num *= td;
    if (mu == -1) den *= td;
  }
  // den is monic up to sign
  if (den.lc() < 0) {
    den = -den;
    num = -num;
  }
  return divmod_monic(num, den).first;
}

namespace detail {

inline constexpr std::uint64_t kFilterPrime = 4294967291ULL;  // largest prime below 2^32

inline std::uint64_t mod_filter(const Integer& z) {
  static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
  return mpz_fdiv_ui(z.get_mpz_t(), kFilterPrime);
}

inline std::vector<std::uint64_t> filter_image(const ZPoly& f) {
  std::vector<std::uint64_t> v;
  for (int i = 0; i <= f.degree(); ++i) v.push_back(mod_filter(f.coeff(i)));
  return v;
}

/// Quotient of g by monic c modulo kFilterPrime when the remainder vanishes there.
inline std::optional<std::vector<std::uint64_t>> mod_divide(std::vector<std::uint64_t> g, const std::vector<std::uint64_t>& c) {
  std::size_t dc = c.size() - 1;
  if (g.size() < c.size()) return std::nullopt;
  std::vector<std::uint64_t> q(g.size() - dc, 0);
  for (std::size_t i = g.size() - 1; i >= dc; --i) {
    std::uint64_t lead = g[i];
    q[i - dc] = lead;
    if (lead != 0)
      for (std::size_t j = 0; j <= dc; ++j) {
        std::uint64_t t = (lead * c[j]) % kFilterPrime;
        std::uint64_t& slot = g[i - dc + j];
        slot = slot >= t ? slot - t : slot + kFilterPrime - t;
      }
    if (i == dc) break;
  }
  for (std::size_t i = 0; i < dc; ++i)
    if (g[i] != 0) return std::nullopt;
  return q;
}

/// Whether the product of `factors` equals g, computed in 64-bit arithmetic;
/// nullopt when an intermediate coefficient overflows.
inline std::optional<bool> product_matches(const std::vector<const ZPoly*>& factors, const ZPoly& g) {
  std::vector<std::int64_t> acc{1};
  for (const ZPoly* f : factors) {
    std::vector<std::int64_t> next(acc.size() + static_cast<std::size_t>(f->degree()), 0);
    for (int j = 0; j <= f->degree(); ++j) {
      const Integer& cj = f->coeff(j);
      if (!cj.fits_slong_p()) return std::nullopt;
      std::int64_t c = cj.get_si();
      if (c == 0) continue;
      for (std::size_t i = 0; i < acc.size(); ++i) {
        std::int64_t t;
        if (__builtin_mul_overflow(acc[i], c, &t) || __builtin_add_overflow(next[i + static_cast<std::size_t>(j)], t, &next[i + static_cast<std::size_t>(j)]))
          return std::nullopt;
      }
    }
    acc = std::move(next);
  }
  if (static_cast<int>(acc.size()) != g.degree() + 1) return false;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (mpz_cmp_si(g.coeff(static_cast<int>(i)).get_mpz_t(), acc[i]) != 0) return false;
  return true;
}

inline long totient(long n) {
  static const std::vector<long> table = [] {
    std::vector<long> t(8193);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<long>(i);
    for (std::size_t p = 2; p < t.size(); ++p)
      if (t[p] == static_cast<long>(p))
        for (std::size_t k = p; k < t.size(); k += p) t[k] -= t[k] / static_cast<long>(p);
    return t;
  }();
  return n < static_cast<long>(table.size()) ? table[static_cast<std::size_t>(n)] : euler_phi(n);
}

}  // namespace detail

/// The Phi_n used by the Kronecker test, computed on demand and cached.
/// Entries can be overridden, which the self-test uses for fault injection.
class CyclotomicTable {
 public:
  struct Entry {
    ZPoly poly;
    std::vector<std::uint64_t> image;
  };

  const Entry& entry(long n) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, make_entry(cyclotomic_polynomial(n))).first;
    return it->second;
  }
  const ZPoly& poly(long n) const { return entry(n).poly; }

  void override_entry(long n, const ZPoly& f) {
    if (f.degree() < 1 || !f.is_monic()) fail(ErrorCode::InvalidInput, "cyclotomic table entries must be monic");
    std::lock_guard<std::mutex> lock(mu_);
    cache_.insert_or_assign(n, make_entry(f));
    modified_ = true;
  }
  /// Some entry was overridden.
  bool modified() const {
    std::lock_guard<std::mutex> lock(mu_);
    return modified_;
  }

 private:
  static Entry make_entry(const ZPoly& f) { return {f, detail::filter_image(f)}; }
  mutable std::mutex mu_;
  mutable std::map<long, Entry> cache_;
  bool modified_ = false;
};

inline const CyclotomicTable& default_cyclotomic_table() {
  static const CyclotomicTable table;
  return table;
}

namespace detail {

inline bool cyclotomic_exact(ZPoly g, const CyclotomicTable& phi) {
  long bound = 2L * g.degree() * g.degree();
  for (long n = 1; n <= bound && g.degree() > 0; ++n) {
    if (totient(n) > g.degree()) continue;
    const ZPoly& c = phi.poly(n);
    for (;;) {
      auto [q, r] = divmod_monic(g, c);
      if (!r.is_zero()) break;
      g = std::move(q);
    }
  }
  return g.degree() == 0;
}

}  // namespace detail

/// Kronecker's criterion by trial division: f is, up to units, a product of
/// cyclotomic polynomials. Division runs modulo a prime; a factorization
/// found there is confirmed by an exact product before it is believed.
inline bool is_cyclotomic_product(const IntLaurentPoly& f, const CyclotomicTable& phi = default_cyclotomic_table()) {
  ZPoly g = normalize_monic(f);
  int d = g.degree();
  if (d == 0) return true;
  if (abs_int(g.coeff(0)) != 1) return false;
  // phi(n) >= sqrt(n / 2), so phi(n) <= d forces n <= 2 d^2
  long bound = 2L * d * d;
  std::vector<std::uint64_t> gm = detail::filter_image(g);
  std::vector<const ZPoly*> found;
  for (long n = 1; n <= bound && gm.size() > 1; ++n) {
    if (detail::totient(n) + 1 > static_cast<long>(gm.size())) continue;
    const auto& c = phi.entry(n);
    while (auto q = detail::mod_divide(gm, c.image)) {
      gm = std::move(*q);
      found.push_back(&c.poly);
    }
  }
  // The true Phi_n (n below the prime) stay squarefree and pairwise coprime
  // modulo the prime, so an exact factorization would have been found.
  if (gm.size() > 1 && !phi.modified()) return false;
  if (auto m = detail::product_matches(found, g)) {
    if (*m) return true;
  }
  return detail::cyclotomic_exact(std::move(g), phi);
}

struct OffCircleReport {
  bool off_circle = false;
  /// Proven lower bound > 1 for the largest root modulus, when Graeffe certifies it.
  std::optional<double> modulus_lower_bound;
  bool certified_by_graeffe = false;
};

/// One Graeffe step: roots r -> r^2.
inline ZPoly graeffe_step(const ZPoly& f) {
  int d = f.degree();
  std::vector<Integer> neg(f.coeffs());
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  ZPoly prod = f * ZPoly(neg);
  std::vector<Integer> out(static_cast<std::size_t>(d) + 1, Integer(0));
  for (int i = 0; i <= d; ++i) out[static_cast<std::size_t>(i)] = prod.coeff(2 * i);
  if (d % 2 != 0)
    for (auto& c : out) c = -c;
  return ZPoly(std::move(out));
}

inline constexpr int kGraeffeDepth = 8;

namespace detail {

inline double log_abs(const Integer& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace detail

inline OffCircleReport has_root_off_unit_circle(const IntLaurentPoly& f, int depth = kGraeffeDepth) {
  ZPoly g = normalize_monic(f);
  OffCircleReport rep;
  int d = g.degree();
  if (d > 0) {
    ZPoly h = g;
    for (int k = 0; k < depth; ++k) h = graeffe_step(h);
    double best = 1.0;
    for (int i = 1; i <= d; ++i) {
      // |e_i| <= C(d, i) * R^i where R is the largest root modulus of h
      Integer e = abs_int(h.coeff(d - i));
      Integer b = binomial(Integer(d), static_cast<unsigned long>(i));
      if (e <= b) continue;
      double ratio = std::exp((detail::log_abs(e) - detail::log_abs(b)) / (i * std::ldexp(1.0, depth)));
      best = std::max(best, ratio);
      rep.certified_by_graeffe = true;
    }
    if (rep.certified_by_graeffe) {
      rep.off_circle = true;
      rep.modulus_lower_bound = best;
      return rep;
    }
  }
  rep.off_circle = !is_cyclotomic_product(f);
  return rep;
}

}  // namespace arithtrace
