#pragma once

// SL(2) representations of finitely generated groups and their arithmetic
// invariants: characters, irreducibility, Zariski density, trace fields and
// quaternion algebras, boundedness at primes, and sign-twist equivalence.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arithtrace/hilbert.hpp"
#include "arithtrace/laurent.hpp"
#include "arithtrace/matrix.hpp"
#include "arithtrace/number_field.hpp"

namespace arithtrace {

/// Letters are 1-based generator indices, negative for inverses.
using Word = std::vector<int>;
using Mat2 = Matrix<AlgebraicNumber>;

inline Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

inline Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j));
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word commutator_word(const Word& g, const Word& h) {
  return free_reduce(concat(concat(g, h), concat(inverse_word(g), inverse_word(h))));
}

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += "g" + std::to_string(std::abs(w[i]));
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

/// Reduced words of length 1..max_len in shortlex order, letters ordered
/// g1, g1^-1, g2, g2^-1, ...
inline std::vector<Word> reduced_words(int rank, int max_len) {
  std::vector<int> letters;
  for (int i = 1; i <= rank; ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  std::vector<Word> out, layer{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int x : letters) {
        if (!w.empty() && w.back() == -x) continue;
        Word v = w;
        v.push_back(x);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

class GroupRep {
 public:
  GroupRep(NumberField field, std::vector<Mat2> images, std::vector<Word> relators = {})
      : field_(std::move(field)), images_(std::move(images)), relators_(std::move(relators)) {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      const auto& m = images_[i];
      if (m.rows() != 2 || m.cols() != 2) fail(ErrorCode::SizeMismatch, "generator images must be 2x2");
      if (m(0, 0).field() != field_) fail(ErrorCode::FieldMismatch, "generator image over another field");
      if (m.det() != field_.one())
        fail(ErrorCode::InvalidInput, "image of g" + std::to_string(i + 1) + " does not have determinant 1");
    }
    Mat2 id = identity();
    for (const auto& r : relators_) {
      Mat2 v = image(r);
      if (v != id && v != -id) fail(ErrorCode::InvalidInput, "relator " + word_to_string(r) + " is not sent to +-1");
    }
  }

  const NumberField& field() const { return field_; }
  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Mat2>& images() const { return images_; }
  const std::vector<Word>& relators() const { return relators_; }

  Mat2 identity() const { return Mat2::identity(2, field_.one()); }

  Mat2 image(const Word& w) const {
    Mat2 acc = identity();
    for (int x : w) {
      int i = std::abs(x);
      if (i < 1 || i > rank()) fail(ErrorCode::InvalidInput, "generator index " + std::to_string(x) + " out of range");
      const Mat2& m = images_[static_cast<std::size_t>(i - 1)];
      acc = acc * (x > 0 ? m : m.sl2_inverse());
    }
    return acc;
  }

 private:
  NumberField field_;
  std::vector<Mat2> images_;
  std::vector<Word> relators_;
};

inline AlgebraicNumber char_on_word(const GroupRep& rep, const Word& w) { return rep.image(w).trace(); }

/// Representation with generators sent to the images of `words`.
inline GroupRep restrict_rep(const GroupRep& rep, const std::vector<Word>& words) {
  std::vector<Mat2> imgs;
  for (const auto& w : words) imgs.push_back(rep.image(w));
  return GroupRep(rep.field(), std::move(imgs));
}

/// epsilon * rep with epsilon(g_i) = signs[i] in {+1, -1}.
inline GroupRep twist_rep(const GroupRep& rep, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != rep.rank()) fail(ErrorCode::SizeMismatch, "one sign per generator");
  std::vector<Mat2> imgs;
  for (int i = 0; i < rep.rank(); ++i) {
    const Mat2& m = rep.images()[static_cast<std::size_t>(i)];
    if (signs[static_cast<std::size_t>(i)] == 1)
      imgs.push_back(m);
    else if (signs[static_cast<std::size_t>(i)] == -1)
      imgs.push_back(-m);
    else
      fail(ErrorCode::InvalidInput, "twist signs must be +1 or -1");
  }
  return GroupRep(rep.field(), std::move(imgs));
}

/// Nonempty increasing subsets of {1..rank} of size at most max_size, by size then lexicographically.
inline std::vector<Word> generator_subsets(int rank, int max_size) {
  std::vector<Word> out;
  for (int size = 1; size <= std::min(rank, max_size); ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
      out.push_back(idx);
      int k = size - 1;
      while (k >= 0 && idx[static_cast<std::size_t>(k)] == rank - size + k + 1) --k;
      if (k < 0) break;
      ++idx[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

/// Traces of the products of distinct generators in increasing order.
struct CharacterData {
  int rank = 0;
  std::map<Word, AlgebraicNumber> subset_traces;
};

inline constexpr int kMaxCharacterRank = 12;

inline CharacterData character_data(const GroupRep& rep) {
  if (rep.rank() > kMaxCharacterRank) fail(ErrorCode::RankTooLarge, "character data is exponential in the rank");
  CharacterData cd;
  cd.rank = rep.rank();
  for (const auto& s : generator_subsets(rep.rank(), rep.rank())) cd.subset_traces.emplace(s, char_on_word(rep, s));
  return cd;
}

namespace detail {

inline Word rotate(const Word& w, std::size_t k) {
  Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

/// Rotation of w or of its inverse with the fewest inverse letters, least
/// among those; traces agree on all of them.
inline Word trace_canonical(const Word& w) {
  Word c = cyclic_reduce(w);
  auto key = [](const Word& v) {
    return std::make_pair(std::count_if(v.begin(), v.end(), [](int x) { return x < 0; }), v);
  };
  auto best = key(c);
  Word inv = inverse_word(c);
  for (std::size_t k = 0; k < c.size(); ++k) {
    best = std::min(best, key(rotate(c, k)));
    best = std::min(best, key(rotate(inv, k)));
  }
  return best.second;
}

class TraceReconstructor {
 public:
  explicit TraceReconstructor(const CharacterData& cd) : cd_(cd) {
    if (cd.subset_traces.empty()) fail(ErrorCode::InvalidInput, "empty character data");
  }

  AlgebraicNumber trace(const Word& w0) {
    Word w = trace_canonical(w0);
    if (w.empty()) return two();
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    AlgebraicNumber v = compute(w);
    memo_.emplace(w, v);
    return v;
  }

 private:
  AlgebraicNumber two() const { return cd_.subset_traces.begin()->second.field().from_rational(2); }

  AlgebraicNumber compute(const Word& w) {
    std::size_t n = w.size();
    // tr(X x^-1) = tr(X) tr(x) - tr(X x)
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] > 0) continue;
      Word r = rotate(w, (i + 1) % n);
      int x = -r.back();
      Word X(r.begin(), r.end() - 1);
      return trace(X) * trace(Word{x}) - trace(concat(X, Word{x}));
    }
    // tr(xU xV) = tr(xU) tr(xV) - tr(U V^-1)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (w[i] != w[j]) continue;
        Word r = rotate(w, i);
        std::size_t d = j - i;
        Word xU(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d));
        Word xV(r.begin() + static_cast<std::ptrdiff_t>(d), r.end());
        Word U(xU.begin() + 1, xU.end()), V(xV.begin() + 1, xV.end());
        return trace(xU) * trace(xV) - trace(concat(U, inverse_word(V)));
      }
    // distinct positive letters, least letter first
    Word r = rotate(w, static_cast<std::size_t>(std::min_element(w.begin(), w.end()) - w.begin()));
    std::size_t i = 0;
    while (i + 1 < n && r[i] < r[i + 1]) ++i;
    if (i + 1 == n) {
      auto it = cd_.subset_traces.find(r);
      if (it == cd_.subset_traces.end()) fail(ErrorCode::InvalidInput, "missing subset trace " + word_to_string(r));
      return it->second;
    }
    // r = ... y x ... with y > x; tr(yxZ) = tr x tr(yZ) + tr y tr(xZ) + tr Z tr(xy) - tr x tr y tr Z - tr(xyZ)
    Word s = rotate(r, i);
    int y = s[0], x = s[1];
    Word Z(s.begin() + 2, s.end());
    AlgebraicNumber tx = trace(Word{x}), ty = trace(Word{y}), tz = trace(Z);
    return tx * trace(concat(Word{y}, Z)) + ty * trace(concat(Word{x}, Z)) + tz * trace(Word{x, y}) - tx * ty * tz -
           trace(concat(Word{x, y}, Z));
  }

  const CharacterData& cd_;
  std::map<Word, AlgebraicNumber> memo_;
};

}  // namespace detail

/// Trace of w computed from subset traces by ring operations only.
inline AlgebraicNumber trace_from_character_data(const CharacterData& cd, const Word& w) {
  detail::TraceReconstructor t(cd);
  return t.trace(w);
}

/// Dimension of the K-span of the image (the algebra generated by the generators).
inline std::size_t image_span_dimension(const GroupRep& rep) {
  auto flat = [](const Mat2& m) { return m.entries(); };
  EchelonBasis<AlgebraicNumber> span(4);
  std::vector<Mat2> basis{rep.identity()};
  span.insert(flat(basis[0]));
  for (std::size_t i = 0; i < basis.size() && span.rank() < 4; ++i)
    for (const auto& g : rep.images()) {
      Mat2 p = basis[i] * g;
      if (span.insert(flat(p))) basis.push_back(p);
    }
  return span.rank();
}

struct IrreducibilityResult {
  bool irreducible = false;
  /// Words g, h with chi([g, h]) != 2, when one was found within the sample depth.
  std::optional<std::pair<Word, Word>> witness;
  AlgebraicNumber witness_value;
};

inline constexpr int kDefaultSampleDepth = 3;

/// Absolute irreducibility: the image spans Mat(2, K) (Burnside). The witness
/// search runs over reduced words of length <= sample_depth.
inline IrreducibilityResult is_irreducible_rep(const GroupRep& rep, int sample_depth = kDefaultSampleDepth) {
  IrreducibilityResult res{false, std::nullopt, rep.field().zero()};
  if (rep.rank() == 0) return res;
  res.irreducible = image_span_dimension(rep) == 4;
  if (!res.irreducible) return res;
  auto words = reduced_words(rep.rank(), sample_depth);
  AlgebraicNumber two = rep.field().from_rational(2);
  for (const auto& g : words)
    for (const auto& h : words) {
      AlgebraicNumber t = char_on_word(rep, commutator_word(g, h));
      if (t != two) {
        res.witness = std::make_pair(g, h);
        res.witness_value = t;
        return res;
      }
    }
  return res;
}

/// Reidemeister-Schreier generators of the kernel of F_r -> (Z/2)^r, the
/// subgroup generated by squares: 2^r (r - 1) + 1 words.
inline constexpr int kMaxFrattiniRank = 4;

inline std::vector<Word> fratt2_generators(int rank) {
  if (rank > kMaxFrattiniRank) fail(ErrorCode::RankTooLarge, "Frattini generators are capped at rank 4");
  auto rep_of = [](unsigned mask, int r) {
    Word w;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) w.push_back(i + 1);
    return w;
  };
  std::vector<Word> out;
  std::set<Word> seen;
  for (unsigned mask = 0; mask < (1u << rank); ++mask)
    for (int i = 0; i < rank; ++i) {
      Word w = free_reduce(concat(concat(rep_of(mask, rank), Word{i + 1}), inverse_word(rep_of(mask ^ (1u << i), rank))));
      if (w.empty() || !seen.insert(w).second) continue;
      out.push_back(w);
    }
  return out;
}

/// Schreier generators for the kernel of the homomorphism to Z/2 sending g_i to parity[i].
inline std::vector<Word> index_two_subgroup(int rank, const std::vector<int>& parity) {
  int t = -1;
  for (int i = 0; i < rank; ++i)
    if (parity[static_cast<std::size_t>(i)] % 2 != 0) {
      t = i + 1;
      break;
    }
  if (t < 0) fail(ErrorCode::InvalidInput, "parity vector defines the trivial homomorphism");
  std::vector<Word> out;
  for (int coset = 0; coset < 2; ++coset)
    for (int i = 1; i <= rank; ++i) {
      int p = parity[static_cast<std::size_t>(i - 1)] % 2 != 0 ? 1 : 0;
      Word left = coset ? Word{t} : Word{};
      Word right = ((coset + p) % 2) ? Word{t} : Word{};
      Word w = free_reduce(concat(concat(left, Word{i}), inverse_word(right)));
      if (!w.empty() && std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  return out;
}

enum class Verdict { False, True, Inconclusive };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ZariskiResult {
  Verdict verdict = Verdict::Inconclusive;
  std::string certificate;
  std::optional<Word> witness;
};

inline constexpr std::size_t kFiniteClosureCap = 2000;

namespace detail {

inline std::string matrix_key(const Mat2& m) {
  std::string s;
  for (const auto& e : m.entries()) {
    for (const auto& c : e.coords()) s += c.get_str() + ",";
    s += ";";
  }
  return s;
}

/// Order of the image group, or nullopt once more than `cap` elements appear.
inline std::optional<std::size_t> finite_image_order(const GroupRep& rep, std::size_t cap) {
  std::set<std::string> seen;
  std::vector<Mat2> elems{rep.identity()};
  seen.insert(matrix_key(elems[0]));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : rep.images()) {
      Mat2 p = elems[i] * g;
      if (seen.insert(matrix_key(p)).second) {
        elems.push_back(p);
        if (elems.size() > cap) return std::nullopt;
      }
    }
  return elems.size();
}

/// Polynomial t^d m(t + 1/t) whose roots are the eigenvalues over all conjugates of tau.
inline std::optional<IntLaurentPoly> eigenvalue_polynomial(const AlgebraicNumber& tau) {
  QPoly m = minimal_polynomial(tau);
  if (!has_integer_coeffs(m)) return std::nullopt;
  // sum_k c_k (t^2 + 1)^k t^(d - k)
  int d = m.degree();
  ZPoly acc, t2p1{Integer(1), Integer(0), Integer(1)};
  ZPoly pw = ZPoly::constant(Integer(1));
  for (int k = 0; k <= d; ++k) {
    Integer c = m.coeff(k).get_num();
    acc += c * (pw * ZPoly::monomial(Integer(1), d - k));
    pw *= t2p1;
  }
  return IntLaurentPoly::from_poly(acc);
}

}  // namespace detail

/// Three-valued Zariski density test: irreducible on the Frattini words, and
/// an infinite image certified by a parabolic or a non-torsion element.
inline ZariskiResult is_zariski_dense(const GroupRep& rep, int sample_depth = kDefaultSampleDepth + 1) {
  ZariskiResult res;
  if (rep.rank() == 0 || image_span_dimension(rep) < 4) {
    res.verdict = Verdict::False;
    res.certificate = "reducible";
    return res;
  }
  if (rep.rank() <= kMaxFrattiniRank && image_span_dimension(restrict_rep(rep, fratt2_generators(rep.rank()))) < 4) {
    res.verdict = Verdict::False;
    res.certificate = "reducible on the subgroup generated by squares";
    return res;
  }
  Mat2 id = rep.identity();
  AlgebraicNumber two = rep.field().from_rational(2);
  for (const auto& w : reduced_words(rep.rank(), sample_depth)) {
    Mat2 m = rep.image(w);
    AlgebraicNumber t = m.trace();
    if ((t == two && m != id) || (t == -two && m != -id)) {
      res.verdict = Verdict::True;
      res.certificate = "parabolic element " + word_to_string(w);
      res.witness = w;
      return res;
    }
    auto ev = detail::eigenvalue_polynomial(t);
    if (!ev || !is_cyclotomic_product(*ev)) {
      res.verdict = Verdict::True;
      res.certificate = "eigenvalue of " + word_to_string(w) + " is not a root of unity";
      res.witness = w;
      return res;
    }
  }
  if (auto order = detail::finite_image_order(rep, kFiniteClosureCap)) {
    res.verdict = Verdict::False;
    res.certificate = "finite image of order " + std::to_string(*order);
    return res;
  }
  res.certificate = "no certificate within the sample depth";
  return res;
}

/// Generators of the trace ring: traces of products of at most three distinct generators.
inline std::vector<AlgebraicNumber> trace_ring_generators(const GroupRep& rep) {
  std::vector<AlgebraicNumber> out;
  for (const auto& s : generator_subsets(rep.rank(), 3)) out.push_back(char_on_word(rep, s));
  return out;
}

inline Subfield trace_field(const GroupRep& rep) {
  if (!is_irreducible_rep(rep, 1).irreducible) fail(ErrorCode::ReducibleRepresentation, "trace field needs an irreducible representation");
  return subfield_generated(rep.field(), trace_ring_generators(rep));
}

inline GroupRep fratt2_restriction(const GroupRep& rep) {
  return restrict_rep(rep, fratt2_generators(rep.rank()));
}

inline Subfield invariant_trace_field(const GroupRep& rep) {
  if (rep.rank() > kMaxFrattiniRank) fail(ErrorCode::RankTooLarge, "invariant trace field is capped at rank 4");
  GroupRep sub = fratt2_restriction(rep);
  if (image_span_dimension(sub) < 4)
    fail(ErrorCode::NotZariskiDense, "representation is reducible on the subgroup generated by squares");
  return subfield_generated(rep.field(), trace_ring_generators(sub));
}

struct QuaternionAlgebraResult {
  Subfield trace_field;
  HilbertSymbolAlgebra algebra;
  Word g, h;
  /// The basis 1, i, j, ij built from g and h spans the image algebra with
  /// trace-field coordinates and satisfies the symbol's relations.
  bool verified = false;
};

namespace detail {

inline std::vector<Word> witness_candidates(int rank) {
  if (rank <= kMaxFrattiniRank) return reduced_words(rank, kDefaultSampleDepth);
  std::vector<Word> out;
  for (int i = 1; i <= rank; ++i) out.push_back({i});
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j) out.push_back({i, j});
  return out;
}

inline bool verify_symbol(const GroupRep& rep, const Subfield& k, const Mat2& A, const Mat2& B, const AlgebraicNumber& a,
                          const AlgebraicNumber& b) {
  Mat2 id = rep.identity();
  Mat2 i = Mat2(A) + A - A.trace() * id;
  Mat2 j = A * B - B * A;
  Mat2 ij = i * j;
  if (i * i != a * id || j * j != b * id || ij != -(j * i)) return false;
  std::vector<std::vector<AlgebraicNumber>> cols{id.entries(), i.entries(), j.entries(), ij.entries()};
  EchelonBasis<AlgebraicNumber> span(4);
  for (const auto& c : cols)
    if (!span.insert(c)) return false;
  for (const auto& g : rep.images()) {
    auto x = solve_columns<AlgebraicNumber>(cols, g.entries(), rep.field().zero());
    if (!x) return false;
    for (const auto& c : *x)
      if (!k.contains(c)) return false;
  }
  return true;
}

}  // namespace detail

/// Hilbert symbol (chi(g)^2 - 4, chi([g, h]) - 2) over the trace field.
inline QuaternionAlgebraResult quaternion_algebra_of_rep(const GroupRep& rep) {
  if (!is_irreducible_rep(rep, 1).irreducible)
    fail(ErrorCode::ReducibleRepresentation, "quaternion algebra needs an irreducible representation");
  Subfield k = trace_field(rep);
  auto words = detail::witness_candidates(rep.rank());
  AlgebraicNumber four = rep.field().from_rational(4), two = rep.field().from_rational(2);
  for (const auto& g : words) {
    AlgebraicNumber tg = char_on_word(rep, g);
    AlgebraicNumber a = tg * tg - four;
    if (a.is_zero()) continue;
    for (const auto& h : words) {
      AlgebraicNumber b = char_on_word(rep, commutator_word(g, h)) - two;
      if (b.is_zero()) continue;
      HilbertSymbolAlgebra alg(k.to_subfield(a), k.to_subfield(b));
      bool ok = detail::verify_symbol(rep, k, rep.image(g), rep.image(h), a, b);
      return {k, alg, g, h, ok};
    }
  }
  fail(ErrorCode::NoHyperbolicWitness, "no word pair with chi(g)^2 != 4 and chi([g,h]) != 2 in the search range");
}

inline QuaternionAlgebraResult invariant_quaternion_algebra(const GroupRep& rep) {
  if (rep.rank() > kMaxFrattiniRank) fail(ErrorCode::RankTooLarge, "invariant quaternion algebra is capped at rank 4");
  GroupRep sub = fratt2_restriction(rep);
  if (image_span_dimension(sub) < 4)
    fail(ErrorCode::NotZariskiDense, "representation is reducible on the subgroup generated by squares");
  return quaternion_algebra_of_rep(sub);
}

/// Every trace-ring generator is integral at P.
inline bool is_bounded_at_prime(const GroupRep& rep, const PrimeData& P) {
  if (P.field() != rep.field()) fail(ErrorCode::FieldMismatch, "prime of a different field");
  if (!is_irreducible_rep(rep, 1).irreducible)
    fail(ErrorCode::ReducibleRepresentation, "boundedness test needs an irreducible representation");
  for (const auto& t : trace_ring_generators(rep))
    if (!is_integral_at(t, P)) return false;
  return true;
}

/// Characters agree on the subgroup generated by squares. rep1 must be
/// certified Zariski dense.
inline bool pm1_equivalent(const GroupRep& rep1, const GroupRep& rep2) {
  if (rep1.rank() != rep2.rank()) fail(ErrorCode::SizeMismatch, "representations of different rank");
  if (rep1.field() != rep2.field()) fail(ErrorCode::FieldMismatch, "representations over different fields");
  if (rep1.rank() > kMaxFrattiniRank) fail(ErrorCode::RankTooLarge, "sign equivalence is capped at rank 4");
  ZariskiResult z = is_zariski_dense(rep1);
  if (z.verdict != Verdict::True) fail(ErrorCode::NotZariskiDense, "first representation: " + z.certificate);
  auto words = fratt2_generators(rep1.rank());
  GroupRep s1 = restrict_rep(rep1, words), s2 = restrict_rep(rep2, words);
  for (const auto& s : generator_subsets(s1.rank(), 3))
    if (char_on_word(s1, s) != char_on_word(s2, s)) return false;
  return true;
}

}  // namespace arithtrace
