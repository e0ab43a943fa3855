#pragma once

// Primes of a number field above a rational prime p, restricted to primes
// where some integral generator beta has Z_p[beta] maximal (Dedekind's
// criterion). Valuations and residues are computed in the p-adic factors of
// the minimal polynomial of beta.

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "arithtrace/number_field.hpp"

namespace arithtrace {

enum class PrimeSearch {
  /// Only the defining polynomial's root theta is tried.
  Strict,
  /// Small integral combinations (sum c_i theta^i) / p^j are tried as well.
  AlternativeModels,
};

struct PrimeData {
  Integer p;
  /// Monic irreducible factor of `model` modulo p.
  ModPoly factor{Integer(2), std::vector<Integer>{}};
  int residue_degree = 1;
  int ramification_index = 1;
  /// Minimal polynomial of the generator beta used to describe the prime.
  /// Equal to the field polynomial unless an alternative model was needed.
  ZPoly model;
  /// beta as an element of the field; converts field elements to beta-coordinates.
  std::shared_ptr<const Subfield> model_map;
  /// All factors of `model` mod p and the position of `factor` among them.
  std::vector<ModFactor> siblings;
  std::size_t position = 0;

  const NumberField& field() const { return model_map->ambient(); }
  const AlgebraicNumber& generator() const { return model_map->primitive(); }
  /// Size of the residue field.
  Integer residue_size() const { return pow_int(p, static_cast<unsigned long>(residue_degree)); }
};

/// Dedekind's criterion: true iff p does not divide [O : Z[theta]] for a
/// root theta of the monic integer polynomial f.
inline bool dedekind_p_maximal(const ZPoly& f, const Integer& p) {
  Integer disc = discriminant(f);
  if (disc != 0 && !mpz_divisible_p(disc.get_mpz_t(), Integer(p * p).get_mpz_t())) return true;
  auto facs = factor_mod_p(ModPoly(p, f));
  ModPoly g = ModPoly::constant(p, 1), h = ModPoly::constant(p, 1);
  for (const auto& fac : facs) {
    g = g * fac.factor;
    for (int k = 1; k < fac.multiplicity; ++k) h = h * fac.factor;
  }
  ZPoly diff = g.lift() * h.lift() - f;
  std::vector<Integer> c;
  for (const auto& a : diff.coeffs()) c.push_back(Integer(a / p));
  ModPoly F(p, std::move(c));
  ModPoly common = gcd(gcd(F, g), h);
  return common.degree() == 0;
}

namespace detail {

inline std::optional<std::pair<ZPoly, AlgebraicNumber>> find_p_maximal_model(const NumberField& field, const Integer& p,
                                                                             PrimeSearch mode) {
  int n = field.degree();
  if (dedekind_p_maximal(field.min_poly(), p)) return std::make_pair(field.min_poly(), field.generator());
  if (mode == PrimeSearch::Strict || n == 1 || !p.fits_slong_p()) return std::nullopt;
  long pl = p.get_si();
  auto try_element = [&](const AlgebraicNumber& beta) -> std::optional<std::pair<ZPoly, AlgebraicNumber>> {
    QPoly mp = minimal_polynomial(beta);
    if (mp.degree() != n || !has_integer_coeffs(mp)) return std::nullopt;
    ZPoly z = to_zpoly(mp);
    if (!dedekind_p_maximal(z, p)) return std::nullopt;
    return std::make_pair(z, beta);
  };
  std::vector<AlgebraicNumber> powers{field.one()};
  for (int i = 1; i < n; ++i) powers.push_back(powers.back() * field.generator());
  // (sum c_i theta^i) / p^j with 0 <= c_i < p^j, then j = 2
  for (long j = 1; j <= 2; ++j) {
    long range = j == 1 ? pl : pl * pl;
    Rational scale = make_rational(1, pow_int(p, static_cast<unsigned long>(j)));
    long total = 1;
    for (int i = 1; i < n; ++i) {
      if (total > 100000 / range) return std::nullopt;
      total *= range;
    }
    for (long code = 0; code < total * range; ++code) {
      long rest = code;
      AlgebraicNumber beta = field.zero();
      bool has_theta = false;
      for (int i = 0; i < n; ++i) {
        long c = rest % range;
        rest /= range;
        if (c == 0) continue;
        if (i > 0) has_theta = true;
        beta = beta + Rational(c) * powers[static_cast<std::size_t>(i)];
      }
      if (!has_theta) continue;
      if (auto m = try_element(scale * beta)) return m;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Primes above p, sorted by (residue degree, factor). Throws UnsupportedPrime
/// when no p-maximal model is available for the requested search mode.
inline std::vector<PrimeData> primes_above(const NumberField& field, const Integer& p,
                                           PrimeSearch mode = PrimeSearch::Strict) {
  if (!is_prime(p)) fail(ErrorCode::InvalidInput, p.get_str() + " is not prime");
  auto model = detail::find_p_maximal_model(field, p, mode);
  if (!model)
    fail(ErrorCode::UnsupportedPrime,
         "prime " + p.get_str() + " divides the index of " + field.min_poly().to_string());
  auto map = std::make_shared<const Subfield>(NumberField(model->first, false), model->second);
  auto facs = factor_mod_p(ModPoly(p, model->first));
  std::vector<PrimeData> out;
  for (std::size_t i = 0; i < facs.size(); ++i) {
    PrimeData P;
    P.p = p;
    P.factor = facs[i].factor;
    P.residue_degree = facs[i].factor.degree();
    P.ramification_index = facs[i].multiplicity;
    P.model = model->first;
    P.model_map = map;
    P.siblings = facs;
    P.position = i;
    out.push_back(std::move(P));
  }
  return out;
}

namespace detail {

/// a = A(beta) / d with A integral of degree < n and d > 0.
inline std::pair<ZPoly, Integer> model_coords(const AlgebraicNumber& a, const PrimeData& P) {
  AlgebraicNumber b = P.model_map->to_subfield(a);
  Integer d = 1;
  for (const auto& c : b.coords()) d = lcm_int(d, c.get_den());
  std::vector<Integer> coeffs;
  for (const auto& c : b.coords()) coeffs.push_back(Integer(c * d));
  return {ZPoly(std::move(coeffs)), d};
}

/// The p-adic factor of the model belonging to P, modulo p^M.
inline ZPoly local_factor(const PrimeData& P, int M) {
  std::vector<ModPoly> blocks;
  for (const auto& s : P.siblings) {
    ModPoly b = ModPoly::constant(P.p, 1);
    for (int k = 0; k < s.multiplicity; ++k) b = b * s.factor;
    blocks.push_back(b);
  }
  if (blocks.size() == 1) return ModPoly(pow_int(P.p, static_cast<unsigned long>(M)), P.model).lift();
  return hensel_lift(P.model, blocks, P.p, M)[P.position];
}

inline ZPoly reduce_coeffs(const ZPoly& f, const Integer& m) { return ModPoly(m, f).lift(); }

}  // namespace detail

/// Valuation normalized by valuation(p) = 1; nullopt stands for +infinity.
inline std::optional<Rational> valuation(const AlgebraicNumber& a, const PrimeData& P) {
  if (a.field() != P.field()) fail(ErrorCode::FieldMismatch, "element and prime live in different fields");
  if (a.is_zero()) return std::nullopt;
  auto [A, d] = detail::model_coords(a, P);
  long vd = vp(d, P.p);
  long ef = static_cast<long>(P.residue_degree) * P.ramification_index;
  for (int M = 8;; M *= 2) {
    ZPoly F = detail::local_factor(P, M);
    Integer res = resultant(F, A);
    Integer pm = pow_int(P.p, static_cast<unsigned long>(M));
    res = mod_floor(res, pm);
    if (res != 0) return make_rational(vp(res, P.p), ef) - Rational(vd);
  }
}

/// Valuation normalized by v(uniformizer) = 1 (an integer).
inline std::optional<long> local_valuation(const AlgebraicNumber& a, const PrimeData& P) {
  auto w = valuation(a, P);
  if (!w) return std::nullopt;
  Rational v = *w * P.ramification_index;
  if (v.get_den() != 1) fail(ErrorCode::InvalidInput, "non-integral local valuation");
  return v.get_num().get_si();
}

inline bool is_integral_at(const AlgebraicNumber& a, const PrimeData& P) {
  auto w = valuation(a, P);
  return !w || *w >= 0;
}

/// Image of a P-integral element in the residue field F_p[x]/(factor).
inline ModPoly residue(const AlgebraicNumber& a, const PrimeData& P) {
  if (!is_integral_at(a, P)) fail(ErrorCode::InvalidInput, "residue of a non-integral element");
  auto [A, d] = detail::model_coords(a, P);
  long k = vp(d, P.p);
  int M = static_cast<int>(k) + 2;
  Integer pm = pow_int(P.p, static_cast<unsigned long>(M));
  ZPoly F = detail::local_factor(P, M);
  ZPoly R = detail::reduce_coeffs(divmod_monic(A, F).second, pm);
  Integer pk = pow_int(P.p, static_cast<unsigned long>(k));
  std::vector<Integer> c;
  for (const auto& x : R.coeffs()) {
    if (!mpz_divisible_p(x.get_mpz_t(), pk.get_mpz_t()))
      fail(ErrorCode::InvalidInput, "residue computation lost integrality");
    c.push_back(Integer(x / pk));
  }
  Integer unit = invmod(Integer(d / pk), P.p);
  return (unit * ModPoly(P.p, std::move(c))) % P.factor;
}

/// For a prime with e = f = 1 the completion is Q_p. Returns (v, u) with
/// a = p^v * u and u a unit known modulo p^digits; nullopt for a = 0.
inline std::optional<std::pair<long, Integer>> embed_in_qp(const AlgebraicNumber& a, const PrimeData& P, int digits) {
  if (P.residue_degree != 1 || P.ramification_index != 1)
    fail(ErrorCode::UnsupportedPrime, "completion is not Q_p");
  if (a.is_zero()) return std::nullopt;
  auto [A, d] = detail::model_coords(a, P);
  long vd = vp(d, P.p);
  Integer d_unit = d / pow_int(P.p, static_cast<unsigned long>(vd));
  for (int M = digits + 8;; M *= 2) {
    Integer pm = pow_int(P.p, static_cast<unsigned long>(M));
    ZPoly F = detail::local_factor(P, M);
    Integer root = mod_floor(Integer(-F.coeff(0)), pm);
    Integer value = mod_floor(A.eval(root), pm);
    if (value == 0) continue;
    long va = vp(value, P.p);
    if (va + digits > M) continue;
    Integer pd = pow_int(P.p, static_cast<unsigned long>(digits));
    Integer unit = mod_floor(Integer(value / pow_int(P.p, static_cast<unsigned long>(va))), pd);
    unit = mod_floor(unit * invmod(d_unit, pd), pd);
    return std::make_pair(va - vd, unit);
  }
}

}  // namespace arithtrace
