#pragma once

// Polynomials over Z/mZ (m prime or a prime power), factorization over F_p
// (squarefree decomposition + Berlekamp), Hensel lifting, and the
// Zassenhaus factorization of monic integer polynomials built on top.

#include <algorithm>
#include <vector>

#include "arithtrace/poly.hpp"

namespace arithtrace {

class ModPoly {
 public:
  ModPoly(Integer modulus, std::vector<Integer> coeffs) : m_(std::move(modulus)), c_(std::move(coeffs)) {
    normalize();
  }
  ModPoly(Integer modulus, const ZPoly& f) : ModPoly(std::move(modulus), f.coeffs()) {}
  static ModPoly zero(const Integer& m) { return ModPoly(m, std::vector<Integer>{}); }
  static ModPoly constant(const Integer& m, const Integer& a) { return ModPoly(m, std::vector<Integer>{a}); }
  static ModPoly x(const Integer& m) { return ModPoly(m, std::vector<Integer>{0, 1}); }

  const Integer& modulus() const { return m_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int i) const { return (i < 0 || i > degree()) ? Integer(0) : c_[static_cast<std::size_t>(i)]; }
  Integer lc() const { return c_.empty() ? Integer(0) : c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  /// Lift to Z with coefficients in [0, m).
  ZPoly lift() const { return ZPoly(c_); }
  /// Lift to Z with coefficients in the symmetric range (-m/2, m/2].
  ZPoly lift_symmetric() const {
    std::vector<Integer> c(c_);
    Integer half = m_ / 2;
    for (auto& v : c)
      if (v > half) v -= m_;
    return ZPoly(std::move(c));
  }

  ModPoly reduce_to(const Integer& m) const { return ModPoly(m, c_); }

  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.m_ == b.m_ && a.c_ == b.c_; }
  friend bool operator<(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return ModPoly(a.m_, std::move(c));
  }
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return ModPoly(a.m_, std::move(c));
  }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.m_);
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ModPoly(a.m_, std::move(c));
  }
  friend ModPoly operator*(const Integer& s, const ModPoly& a) {
    std::vector<Integer> c(a.c_);
    for (auto& v : c) v *= s;
    return ModPoly(a.m_, std::move(c));
  }

  /// Division by a polynomial whose leading coefficient is a unit mod m.
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& b) const {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "modular polynomial division by zero");
    Integer inv = invmod(b.lc(), m_);
    std::vector<Integer> r(c_);
    int db = b.degree();
    if (degree() < db) return {zero(m_), *this};
    std::vector<Integer> q(static_cast<std::size_t>(degree() - db + 1), Integer(0));
    for (int i = degree(); i >= db; --i) {
      Integer coef = mod_floor(r[static_cast<std::size_t>(i)] * inv, m_);
      q[static_cast<std::size_t>(i - db)] = coef;
      if (coef == 0) continue;
      for (int j = 0; j <= db; ++j) {
        auto& slot = r[static_cast<std::size_t>(i - db + j)];
        slot = mod_floor(slot - coef * b.coeff(j), m_);
      }
    }
    return {ModPoly(m_, std::move(q)), ModPoly(m_, std::move(r))};
  }
  ModPoly operator%(const ModPoly& b) const { return divmod(b).second; }
  ModPoly operator/(const ModPoly& b) const { return divmod(b).first; }

  ModPoly make_monic() const {
    if (is_zero()) return *this;
    return invmod(lc(), m_) * *this;
  }

  ModPoly derivative() const {
    if (c_.size() <= 1) return zero(m_);
    std::vector<Integer> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return ModPoly(m_, std::move(c));
  }

  Integer eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_floor(acc * x + *it, m_);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const { return lift().to_string(var); }

 private:
  void normalize() {
    for (auto& v : c_) v = mod_floor(v, m_);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  Integer m_;
  std::vector<Integer> c_;
};

/// base^e mod (f), coefficients mod m.
inline ModPoly powmod(ModPoly base, Integer e, const ModPoly& f) {
  ModPoly result = ModPoly::constant(f.modulus(), 1) % f;
  base = base % f;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % f;
    base = (base * base) % f;
    e >>= 1;
  }
  return result;
}

/// Monic gcd over F_p.
inline ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_monic();
}

/// (g, s, t) with s*a + t*b = g monic, over F_p.
inline std::tuple<ModPoly, ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b) {
  const Integer& p = a.modulus();
  ModPoly r0 = a, r1 = b, s0 = ModPoly::constant(p, 1), s1 = ModPoly::zero(p), t0 = ModPoly::zero(p),
          t1 = ModPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::exchange(s1, s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::exchange(t1, t2);
  }
  Integer inv = invmod(r0.lc(), p);
  return {inv * r0, inv * s0, inv * t0};
}

struct ModFactor {
  ModPoly factor;
  int multiplicity;
};

namespace detail {

/// Null space basis of a square matrix over F_p (row-reduction on columns).
inline std::vector<std::vector<Integer>> nullspace_mod_p(std::vector<std::vector<Integer>> a, const Integer& p) {
  std::size_t n = a.size();
  std::vector<int> where(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[row]);
    Integer inv = invmod(a[row][col], p);
    for (auto& v : a[row]) v = mod_floor(v * inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Integer f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = mod_floor(a[i][j] - f * a[row][j], p);
    }
    where[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (where[free] != -1) continue;
    std::vector<Integer> v(n, Integer(0));
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col)
      if (where[col] != -1) v[col] = mod_floor(-a[static_cast<std::size_t>(where[col])][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Splits a monic squarefree polynomial over F_p into irreducibles.
inline std::vector<ModPoly> berlekamp(const ModPoly& f) {
  const Integer& p = f.modulus();
  int n = f.degree();
  if (n <= 1) return {f};
  // Row i of Q: x^{i p} mod f. We need v with v Q = v.
  std::vector<std::vector<Integer>> q(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n), 0));
  ModPoly xp = powmod(ModPoly::x(p), p, f);
  ModPoly cur = ModPoly::constant(p, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cur.coeff(j);
    cur = (cur * xp) % f;
  }
  // (Q - I)^T v = 0
  std::vector<std::vector<Integer>> m(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Integer v = q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (i == j) v -= 1;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mod_floor(v, p);
    }
  auto basis = nullspace_mod_p(m, p);
  std::size_t k = basis.size();
  std::vector<ModPoly> factors{f};
  if (k == 1) return factors;
  for (const auto& vec : basis) {
    ModPoly g(p, vec);
    if (g.degree() <= 0) continue;
    std::vector<ModPoly> next;
    for (const auto& h : factors) {
      if (h.degree() <= 1) {
        next.push_back(h);
        continue;
      }
      ModPoly rest = h;
      for (Integer s = 0; s < p && rest.degree() > 0; ++s) {
        ModPoly d = gcd(rest, g - ModPoly::constant(p, s));
        if (d.degree() > 0 && d.degree() < rest.degree()) {
          next.push_back(d);
          rest = rest / d;
        }
      }
      if (rest.degree() > 0) next.push_back(rest.make_monic());
    }
    factors = std::move(next);
    if (factors.size() == k) break;
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

inline ModPoly pth_root(const ModPoly& f) {
  const Integer& p = f.modulus();
  unsigned long pp = p.get_ui();
  std::vector<Integer> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(pp)) c.push_back(f.coeff(i));
  return ModPoly(p, std::move(c));
}

inline void squarefree_decompose(const ModPoly& f, int mult, std::vector<std::pair<ModPoly, int>>& out) {
  const Integer& p = f.modulus();
  if (f.degree() <= 0) return;
  ModPoly df = f.derivative();
  if (df.is_zero()) {
    squarefree_decompose(pth_root(f), mult * static_cast<int>(p.get_ui()), out);
    return;
  }
  ModPoly c = gcd(f, df);
  ModPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.make_monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_decompose(pth_root(c.make_monic()), mult * static_cast<int>(p.get_ui()), out);
}

}  // namespace detail

/// Factorization of a polynomial over F_p into monic irreducibles with
/// multiplicities, sorted by (degree, coefficients). The leading coefficient
/// is dropped.
inline std::vector<ModFactor> factor_mod_p(const ModPoly& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidInput, "cannot factor zero polynomial");
  std::vector<std::pair<ModPoly, int>> sqf;
  detail::squarefree_decompose(f.make_monic(), 1, sqf);
  std::vector<ModFactor> out;
  for (const auto& [g, e] : sqf)
    for (auto& h : detail::berlekamp(g)) out.push_back({h, e});
  std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  // merge equal factors (can arise from separate squarefree strata)
  std::vector<ModFactor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().factor == fac.factor)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(fac);
  }
  return merged;
}

/// Lifts f = g*h mod p (g, h monic, coprime mod p, f monic) to mod p^k.
inline std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& f, const ZPoly& g, const ZPoly& h, const Integer& p,
                                                int k) {
  ModPoly gp(p, g), hp(p, h);
  auto [one, s, t] = xgcd(gp, hp);
  if (!one.is_one()) fail(ErrorCode::InvalidInput, "Hensel lifting needs coprime factors");
  ZPoly G = gp.lift(), H = hp.lift();
  Integer pk = p;
  for (int step = 1; step < k; ++step) {
    ZPoly diff = f - G * H;
    std::vector<Integer> ec;
    for (const auto& c : diff.coeffs()) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
      ec.push_back(q);
    }
    ModPoly e(p, std::move(ec));
    ModPoly gm(p, G), hm(p, H);
    ModPoly dg = (t * e) % gm;
    ModPoly dh = (e - dg * hm) / gm;
    G = G + pk * dg.lift();
    H = H + pk * dh.lift();
    pk *= p;
  }
  return {ModPoly(pk, G).lift(), ModPoly(pk, H).lift()};
}

/// Lifts a factorization of a monic f into pairwise coprime monic factors
/// mod p to a factorization mod p^k (factors returned with coefficients in
/// [0, p^k)).
inline std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, const Integer& p, int k) {
  Integer pk = pow_int(p, static_cast<unsigned long>(k));
  std::vector<ZPoly> out;
  ZPoly rest = ModPoly(pk, f).lift();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i + 1 == factors.size()) {
      out.push_back(ModPoly(pk, rest).lift());
      break;
    }
    ModPoly others = ModPoly::constant(p, 1);
    for (std::size_t j = i + 1; j < factors.size(); ++j) others = others * factors[j];
    auto [gi, hi] = hensel_lift_pair(rest, factors[i].lift(), others.lift(), p, k);
    out.push_back(gi);
    rest = hi;
  }
  return out;
}

/// Irreducible factors over Z of a monic squarefree integer polynomial
/// (Zassenhaus). Factors are monic, sorted by degree then coefficients.
inline std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  if (!f.is_monic()) fail(ErrorCode::InvalidInput, "factorization expects a monic polynomial");
  if (f.degree() <= 1) return {f};
  Integer disc = discriminant(f);
  if (disc == 0) fail(ErrorCode::InvalidInput, "factorization expects a squarefree polynomial");
  Integer p = 3;
  while (mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t())) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  auto mod_factors = factor_mod_p(ModPoly(p, f));
  if (mod_factors.size() == 1) return {f};
  // Mignotte bound on factor coefficients.
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = (root + 1) * pow_int(2, static_cast<unsigned long>(f.degree())) * 2 + 1;
  int k = 1;
  Integer pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }
  std::vector<ModPoly> base;
  for (const auto& mf : mod_factors) base.push_back(mf.factor);
  auto lifted = hensel_lift(f, base, p, k);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ModPoly prod = ModPoly::constant(pk, 1);
      for (auto i : idx) prod = prod * ModPoly(pk, pool[i]);
      ZPoly cand = prod.lift_symmetric();
      auto [q, r] = divmod_monic(rest, cand);
      if (r.is_zero()) {
        result.push_back(cand);
        rest = q;
        std::vector<ZPoly> keep;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(pool[i]);
        pool = std::move(keep);
        found = true;
        break;
      }
      // next combination
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == pool.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() > 0) result.push_back(rest);
  std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  return result;
}

/// Irreducibility over Q of a monic integer polynomial.
inline bool is_irreducible(const ZPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  QPoly q = to_qpoly(f);
  if (gcd(q, q.derivative()).degree() > 0) return false;
  return factor_monic_squarefree(f).size() == 1;
}

}  // namespace arithtrace
