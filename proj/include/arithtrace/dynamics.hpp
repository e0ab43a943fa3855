#pragma once

// Path rewriting into dynamical normal form and the reduction of path traces
// to integer polynomials in traces of dynamical cycles.

#include <map>
#include <string>
#include <vector>

#include "arithtrace/digraph.hpp"
#include "arithtrace/matrix.hpp"
#include "arithtrace/number_field.hpp"

namespace arithtrace {

/// SL(2) labels of edges; every label has determinant exactly 1.
class Sl2Labeling {
 public:
  Sl2Labeling() = default;
  void set(int edge, Matrix<AlgebraicNumber> m) {
    if (m.rows() != 2 || m.cols() != 2) fail(ErrorCode::SizeMismatch, "edge labels are 2x2 matrices");
    if (m.det() != m(0, 0).field().one()) fail(ErrorCode::InvalidInput, "edge label must have determinant 1");
    labels_.insert_or_assign(edge, std::move(m));
  }
  const Matrix<AlgebraicNumber>& at(int edge) const {
    auto it = labels_.find(edge);
    if (it == labels_.end()) fail(ErrorCode::LabelOutOfRange, "edge " + std::to_string(edge) + " has no label");
    return it->second;
  }
  bool empty() const { return labels_.empty(); }
  const NumberField& field() const { return labels_.begin()->second(0, 0).field(); }

 private:
  std::map<int, Matrix<AlgebraicNumber>> labels_;
};

/// Product of the labels along the path, left to right; reversed steps use inverses.
inline Matrix<AlgebraicNumber> holonomy(const CombPath& path, const Sl2Labeling& labels) {
  Matrix<AlgebraicNumber> acc = Matrix<AlgebraicNumber>::identity(2, labels.field().one());
  for (const auto& s : path.steps()) {
    const auto& m = labels.at(s.edge);
    acc = acc * (s.reversed ? m.sl2_inverse() : m);
  }
  return acc;
}

/// xi_0 . (eta_1)^-1 . xi_1 ... (eta_n)^-1 . xi_n, with forward segments xi_i
/// (possibly empty) and closed forward cycles eta_i.
struct DynamicalNormalForm {
  std::vector<std::vector<int>> segments;  // n + 1 entries
  std::vector<std::vector<int>> cycles;    // n entries

  std::size_t reversed_count() const { return cycles.size(); }

  CombPath to_path(const Digraph& g) const {
    std::vector<Step> steps;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      if (i > 0) {
        const auto& eta = cycles[i - 1];
        for (auto it = eta.rbegin(); it != eta.rend(); ++it) steps.push_back({*it, true});
      }
      for (int e : segments[i]) steps.push_back({e, false});
    }
    return CombPath(g, std::move(steps));
  }

  std::string to_string(const Digraph& g) const {
    auto word = [&](const std::vector<int>& w) {
      if (w.empty()) return std::string("1");
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && g.edge_count() > 26) s += ".";
        s += g.edge_name(w[i]);
      }
      return s;
    };
    std::string s = word(segments[0]);
    for (std::size_t i = 0; i < cycles.size(); ++i) s += " (" + word(cycles[i]) + ")' " + word(segments[i + 1]);
    return s;
  }
};

/// Replaces each maximal reversed run b' (from v to w) by d . (b d)' where d
/// is the shortest forward path from v to w.
inline DynamicalNormalForm rewrite_to_dynamical_form(const Digraph& g, const CombPath& path) {
  if (!path.is_closed()) fail(ErrorCode::NotClosed, "path is not closed");
  if (!is_irreducible(g)) fail(ErrorCode::NotIrreducible, "graph is not irreducible");
  DynamicalNormalForm nf;
  nf.segments.emplace_back();
  const auto& steps = path.steps();
  std::size_t i = 0;
  while (i < steps.size()) {
    if (!steps[i].reversed) {
      nf.segments.back().push_back(steps[i].edge);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < steps.size() && steps[j].reversed) ++j;
    int v = CombPath::start_of(g, steps[i]);
    int w = CombPath::end_of(g, steps[j - 1]);
    // beta is the forward reading of the run: from w to v
    std::vector<int> beta;
    for (std::size_t k = j; k-- > i;) beta.push_back(steps[k].edge);
    auto delta = g.shortest_path(v, w);
    if (!delta) fail(ErrorCode::NotIrreducible, "no forward path between run endpoints");
    for (int e : *delta) nf.segments.back().push_back(e);
    std::vector<int> eta = beta;
    eta.insert(eta.end(), delta->begin(), delta->end());
    nf.cycles.push_back(std::move(eta));
    nf.segments.emplace_back();
    i = j;
  }
  return nf;
}

/// Polynomials over Z in variables T_c indexed by dynamical cycles.
class CyclePolynomial {
 public:
  using Monomial = std::map<DynamicalCycle, int>;

  static CyclePolynomial constant(const Integer& c) {
    CyclePolynomial p;
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
  }
  static CyclePolynomial variable(const DynamicalCycle& c) {
    CyclePolynomial p;
    p.terms_[Monomial{{c, 1}}] = 1;
    return p;
  }

  const std::map<Monomial, Integer>& terms() const { return terms_; }

  friend CyclePolynomial operator+(const CyclePolynomial& a, const CyclePolynomial& b) {
    CyclePolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, c);
    return r;
  }
  friend CyclePolynomial operator-(const CyclePolynomial& a, const CyclePolynomial& b) {
    CyclePolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, -c);
    return r;
  }
  friend CyclePolynomial operator*(const CyclePolynomial& a, const CyclePolynomial& b) {
    CyclePolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (const auto& [v, e] : mb) m[v] += e;
        r.add(m, ca * cb);
      }
    return r;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (const auto& [v, e] : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  template <class Eval>
  AlgebraicNumber evaluate(const NumberField& field, Eval&& trace_of) const {
    AlgebraicNumber sum = field.zero();
    for (const auto& [m, c] : terms_) {
      AlgebraicNumber term = field.from_rational(Rational(c));
      for (const auto& [v, e] : m) term = term * trace_of(v).pow(e);
      sum = sum + term;
    }
    return sum;
  }

  std::string to_string(const Digraph& g) const {
    if (terms_.empty()) return "0";
    std::string s;
    // higher degree first, then by monomial order
    std::vector<std::pair<Monomial, Integer>> items(terms_.begin(), terms_.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
      auto deg = [](const Monomial& m) {
        int d = 0;
        for (const auto& [v, e] : m) d += e;
        return d;
      };
      return deg(x.first) > deg(y.first);
    });
    for (const auto& [m, c] : items) {
      bool neg = c < 0;
      Integer mag = neg ? Integer(-c) : c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      std::string mono;
      for (const auto& [v, e] : m) {
        if (!mono.empty()) mono += "*";
        mono += "T_" + v.name(g);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty())
        s += mag.get_str();
      else if (mag == 1)
        s += mono;
      else
        s += mag.get_str() + "*" + mono;
    }
    return s;
  }

 private:
  void add(const Monomial& m, const Integer& c) {
    Integer& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }
  std::map<Monomial, Integer> terms_;
};

struct TraceReduction {
  CyclePolynomial polynomial;
  AlgebraicNumber value;
};

namespace detail {

inline CyclePolynomial reduce_normal_form(const Digraph& g, std::vector<std::vector<int>> segments,
                                          std::vector<std::vector<int>> cycles) {
  if (cycles.empty()) {
    if (segments[0].empty()) return CyclePolynomial::constant(2);
    return CyclePolynomial::variable(make_cycle(g, segments[0]));
  }
  // Rotate: tr(W) = tr(X . eta_n^-1) with X = (xi_n xi_0) eta_1' ... xi_{n-1}.
  std::size_t n = cycles.size();
  std::vector<int> head = segments[n];
  head.insert(head.end(), segments[0].begin(), segments[0].end());
  std::vector<std::vector<int>> xs(segments.begin(), segments.begin() + static_cast<std::ptrdiff_t>(n));
  xs[0] = head;
  std::vector<std::vector<int>> ys(cycles.begin(), cycles.begin() + static_cast<std::ptrdiff_t>(n - 1));
  const std::vector<int>& eta = cycles[n - 1];
  // tr(X Y^-1) = tr(X) tr(Y) - tr(X Y)
  CyclePolynomial tx = reduce_normal_form(g, xs, ys);
  CyclePolynomial ty = CyclePolynomial::variable(make_cycle(g, eta));
  std::vector<std::vector<int>> xys = xs;
  xys.back().insert(xys.back().end(), eta.begin(), eta.end());
  CyclePolynomial txy = reduce_normal_form(g, xys, ys);
  return tx * ty - txy;
}

}  // namespace detail

/// Integer polynomial in dynamical-cycle traces equal to tr(holonomy(path))
/// for every SL(2) labeling, together with its value under `labels`.
inline TraceReduction cycle_trace_reduce(const Digraph& g, const CombPath& path, const Sl2Labeling& labels) {
  DynamicalNormalForm nf = rewrite_to_dynamical_form(g, path);
  CyclePolynomial poly = detail::reduce_normal_form(g, nf.segments, nf.cycles);
  auto trace_of = [&](const DynamicalCycle& c) {
    std::vector<Step> steps;
    for (int e : c.edges) steps.push_back({e, false});
    return holonomy(CombPath(g, std::move(steps)), labels).trace();
  };
  AlgebraicNumber value = poly.evaluate(labels.field(), trace_of);
  return {std::move(poly), std::move(value)};
}

}  // namespace arithtrace
