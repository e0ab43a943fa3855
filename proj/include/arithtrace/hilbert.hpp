#pragma once

// Local Hilbert symbols and ramification of quaternion algebras.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arithtrace/places.hpp"
#include "arithtrace/primes.hpp"
#include "arithtrace/quaternion.hpp"

namespace arithtrace {

/// A place of Q: a rational prime, or infinity.
struct RationalPlace {
  bool infinite = true;
  Integer p = 0;

  static RationalPlace infinity() { return {}; }
  static RationalPlace prime(const Integer& q) { return {false, q}; }
  std::string to_string() const { return infinite ? "inf" : p.get_str(); }
};

namespace detail {

/// Hilbert symbol over Q_2 for a = 2^alpha u, b = 2^beta v with u, v odd.
inline int dyadic_symbol(long alpha, const Integer& u, long beta, const Integer& v) {
  auto eps = [](const Integer& w) { return mod_floor(w, 4) == 3 ? 1 : 0; };
  auto omega = [](const Integer& w) {
    Integer r = mod_floor(w, 8);
    return (r == 3 || r == 5) ? 1 : 0;
  };
  long e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
  return (e % 2 == 0) ? 1 : -1;
}

/// Hilbert symbol over Q_p, p odd, for a = p^alpha u, b = p^beta v.
inline int odd_symbol(const Integer& p, long alpha, const Integer& u, long beta, const Integer& v) {
  int s = 1;
  if ((alpha * beta) % 2 != 0 && mod_floor(p, 4) == 3) s = -s;
  if (beta % 2 != 0) s *= legendre(u, p);
  if (alpha % 2 != 0) s *= legendre(v, p);
  return s;
}

inline Integer square_class_rep(const Rational& q) { return q.get_num() * q.get_den(); }

}  // namespace detail

/// (a, b)_v over Q: -1 iff (a, b / Q_v) is a division algebra.
inline int hilbert_symbol_local(const Rational& a, const Rational& b, const RationalPlace& place) {
  if (a == 0 || b == 0) fail(ErrorCode::InvalidInput, "Hilbert symbol of zero");
  if (place.infinite) return (a < 0 && b < 0) ? -1 : 1;
  const Integer& p = place.p;
  if (!is_prime(p)) fail(ErrorCode::InvalidInput, p.get_str() + " is not prime");
  Integer A = detail::square_class_rep(a), B = detail::square_class_rep(b);
  long alpha = vp(A, p), beta = vp(B, p);
  Integer u = A / pow_int(p, static_cast<unsigned long>(alpha));
  Integer v = B / pow_int(p, static_cast<unsigned long>(beta));
  if (p == 2) return detail::dyadic_symbol(alpha, u, beta, v);
  return detail::odd_symbol(p, alpha, u, beta, v);
}

/// One computed local symbol of an algebra over a number field.
struct LocalSymbol {
  enum class Kind { Real, Finite };
  Kind kind = Kind::Finite;
  std::optional<RealPlace> real;
  std::optional<PrimeData> prime;
  int symbol = 1;
  /// Finite symbol deduced from the product formula rather than computed locally.
  bool from_product_formula = false;

  std::string label() const {
    if (kind == Kind::Real) return "real#" + std::to_string(real->index());
    std::string s = prime->p.get_str();
    if (prime->field().degree() > 1) s += ":" + prime->factor.lift().to_string();
    return s;
  }
};

struct RamificationSet {
  std::vector<RealPlace> real_places;
  std::vector<PrimeData> finite_places;

  std::size_t size() const { return real_places.size() + finite_places.size(); }
  bool empty() const { return size() == 0; }
  /// Rational primes under the ramified finite places.
  std::vector<Integer> primes() const {
    std::vector<Integer> out;
    for (const auto& P : finite_places) out.push_back(P.p);
    return out;
  }
  std::vector<int> real_indices() const {
    std::vector<int> out;
    for (const auto& r : real_places) out.push_back(r.index());
    return out;
  }
};

namespace detail {

/// Rational primes at which (a, b) can ramify: 2 and the primes dividing
/// denominators and norms of the integral numerators of a and b.
inline std::vector<Integer> ramification_candidates(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  Integer acc = 2;
  for (const auto* x : {&a, &b}) {
    Integer d = 1;
    for (const auto& c : x->coords()) d = lcm_int(d, c.get_den());
    // theta is integral, so d*x is an algebraic integer
    Rational n = (Rational(d) * *x).field_norm();
    acc *= d * n.get_num() * n.get_den();
  }
  return prime_divisors(acc);
}

inline std::optional<int> finite_symbol(const AlgebraicNumber& a, const AlgebraicNumber& b, const PrimeData& P) {
  long alpha = *local_valuation(a, P);
  long beta = *local_valuation(b, P);
  if (P.p != 2) {
    // ((-1)^{alpha beta} a^beta b^{-alpha} mod P) is a square in the residue field
    AlgebraicNumber u = a.pow(beta) * b.pow(-alpha);
    if ((alpha * beta) % 2 != 0) u = -u;
    ModPoly r = residue(u, P);
    Integer q = P.residue_size();
    ModPoly s = powmod(r, Integer((q - 1) / 2), P.factor);
    return s.is_one() ? 1 : -1;
  }
  if (P.residue_degree == 1 && P.ramification_index == 1) {
    auto ea = *embed_in_qp(a, P, 3);
    auto eb = *embed_in_qp(b, P, 3);
    return dyadic_symbol(ea.first, ea.second, eb.first, eb.second);
  }
  return std::nullopt;
}

}  // namespace detail

/// Local symbols at every real place and every candidate finite place.
/// Dyadic places that are not unramified of degree one are resolved by the
/// product formula when exactly one place is left; otherwise UnsupportedPrime.
inline std::vector<LocalSymbol> local_symbols(const HilbertSymbolAlgebra& alg) {
  const NumberField& K = alg.field();
  std::vector<LocalSymbol> out;
  for (auto& rp : places(K).real) {
    LocalSymbol s;
    s.kind = LocalSymbol::Kind::Real;
    s.symbol = (rp.sign_of(alg.a()) < 0 && rp.sign_of(alg.b()) < 0) ? -1 : 1;
    s.real = rp;
    out.push_back(std::move(s));
  }
  std::optional<std::size_t> unresolved;
  for (const auto& p : detail::ramification_candidates(alg.a(), alg.b())) {
    std::vector<PrimeData> ps;
    try {
      ps = primes_above(K, p, PrimeSearch::AlternativeModels);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedPrime) throw;
      fail(ErrorCode::UnsupportedPrime, "ramification at " + p.get_str() + " needs a maximal order: " + e.what());
    }
    for (auto& P : ps) {
      LocalSymbol s;
      s.kind = LocalSymbol::Kind::Finite;
      std::optional<int> v;
      if (K.degree() == 1)
        v = hilbert_symbol_local(alg.a().rational_part(), alg.b().rational_part(), RationalPlace::prime(p));
      else
        v = detail::finite_symbol(alg.a(), alg.b(), P);
      s.prime = std::move(P);
      if (v) {
        s.symbol = *v;
      } else {
        if (unresolved)
          fail(ErrorCode::UnsupportedPrime, "more than one dyadic place needs a general local symbol");
        unresolved = out.size();
      }
      out.push_back(std::move(s));
    }
  }
  if (unresolved) {
    int prod = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (i != *unresolved) prod *= out[i].symbol;
    out[*unresolved].symbol = prod;
    out[*unresolved].from_product_formula = true;
  }
  return out;
}

inline RamificationSet ramification_set(const HilbertSymbolAlgebra& alg) {
  RamificationSet r;
  for (auto& s : local_symbols(alg)) {
    if (s.symbol != -1) continue;
    if (s.kind == LocalSymbol::Kind::Real)
      r.real_places.push_back(*s.real);
    else
      r.finite_places.push_back(*s.prime);
  }
  return r;
}

inline bool real_place_ramified(const HilbertSymbolAlgebra& alg, RealPlace sigma) {
  if (sigma.field() != alg.field()) fail(ErrorCode::FieldMismatch, "place of a different field");
  return sigma.sign_of(alg.a()) < 0 && sigma.sign_of(alg.b()) < 0;
}

inline bool same_ramification(const RamificationSet& x, const RamificationSet& y) {
  if (x.real_indices() != y.real_indices()) return false;
  if (x.finite_places.size() != y.finite_places.size()) return false;
  for (std::size_t i = 0; i < x.finite_places.size(); ++i) {
    const auto &P = x.finite_places[i], &Q = y.finite_places[i];
    if (P.p != Q.p || P.model != Q.model || !(P.factor == Q.factor)) return false;
  }
  return true;
}

/// Isomorphism over a common base field, decided by ramification sets.
inline bool algebras_isomorphic(const HilbertSymbolAlgebra& x, const HilbertSymbolAlgebra& y) {
  if (x.field() != y.field()) fail(ErrorCode::FieldMismatch, "algebras over different base fields");
  return same_ramification(ramification_set(x), ramification_set(y));
}

}  // namespace arithtrace
