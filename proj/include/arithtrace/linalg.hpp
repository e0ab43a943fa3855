#pragma once

// Small dense linear algebra over an exact field F (Rational or
// AlgebraicNumber). The scalar type only needs +, -, *, / and is_zero().

#include <optional>
#include <vector>

#include "arithtrace/integer.hpp"

namespace arithtrace {

inline bool is_zero(const Rational& q) { return q == 0; }
inline Rational one_like(const Rational&) { return 1; }
inline Rational zero_like(const Rational&) { return 0; }

/// Incrementally built row-echelon basis of a subspace of F^n. Each stored
/// vector remembers how it was written in terms of the inserted vectors, so
/// membership tests can also return coordinates.
template <class F>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the basis; returns the residual and the combination
  /// of inserted vectors that was subtracted.
  std::pair<std::vector<F>, std::vector<std::optional<F>>> reduce(std::vector<F> v) const {
    std::vector<std::optional<F>> combo(inserted_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& row = rows_[r];
      std::size_t piv = pivots_[r];
      if (is_zero(v[piv])) continue;
      F factor = v[piv] / row[piv];
      for (std::size_t j = piv; j < dim_; ++j)
        if (!is_zero(row[j])) v[j] = v[j] - factor * row[j];
      const auto& rc = combos_[r];
      for (std::size_t k = 0; k < rc.size(); ++k) {
        if (!rc[k]) continue;
        F term = factor * *rc[k];
        combo[k] = combo[k] ? F(*combo[k] + term) : term;
      }
    }
    return {std::move(v), std::move(combo)};
  }

  bool contains(const std::vector<F>& v) const {
    auto res = reduce(v).first;
    for (const auto& x : res)
      if (!is_zero(x)) return false;
    return true;
  }

  /// Coordinates of v in terms of the inserted vectors (indices into the
  /// order of successful `insert` calls), or nullopt if v is not in the span.
  std::optional<std::vector<std::optional<F>>> coordinates(const std::vector<F>& v) const {
    auto [res, combo] = reduce(v);
    for (const auto& x : res)
      if (!is_zero(x)) return std::nullopt;
    return combo;
  }

  /// Inserts v if it is independent; returns true when the rank grew.
  bool insert(const std::vector<F>& v) {
    auto [res, combo] = reduce(v);
    std::size_t piv = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!is_zero(res[j])) {
        piv = j;
        break;
      }
    if (piv == dim_) return false;
    // res = v - sum combo_k * inserted_k  ->  row expressed as inserted combination
    std::vector<std::optional<F>> rc(inserted_ + 1);
    for (std::size_t k = 0; k < combo.size(); ++k)
      if (combo[k]) rc[k] = F(-*combo[k]);
    rc[inserted_] = one_like(res[piv]);
    for (auto& c : combos_) c.resize(inserted_ + 1);
    ++inserted_;
    // Rows stay sorted by pivot column; reduce() relies on that order.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(res));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(rc));
    return true;
  }

 private:
  std::size_t dim_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::optional<F>>> combos_;
};

/// Solves A x = b for a (possibly non-square) system given as columns.
/// Returns nullopt if inconsistent; if the columns are dependent, any
/// solution is returned.
template <class F>
std::optional<std::vector<F>> solve_columns(const std::vector<std::vector<F>>& columns, const std::vector<F>& b,
                                            const F& zero) {
  // columns[i] is the i-th column of A; every column has b.size() entries.
  if (columns.empty()) {
    for (const auto& x : b)
      if (!is_zero(x)) return std::nullopt;
    return std::vector<F>{};
  }
  EchelonBasis<F> basis(b.size());
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (basis.insert(columns[i])) used.push_back(i);
  auto coords = basis.coordinates(b);
  if (!coords) return std::nullopt;
  std::vector<F> x(columns.size(), zero);
  for (std::size_t k = 0; k < used.size(); ++k)
    if (k < coords->size() && (*coords)[k]) x[used[k]] = *(*coords)[k];
  return x;
}

}  // namespace arithtrace
