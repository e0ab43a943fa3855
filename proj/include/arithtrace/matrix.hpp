#pragma once

// Dense matrices over an exact ring (Integer, Rational, AlgebraicNumber).
// Zero and one are taken from an existing entry via zero_like/one_like, so
// number-field matrices never need a global "current field".

#include <string>
#include <vector>

#include "arithtrace/linalg.hpp"

namespace arithtrace {

inline bool is_zero(const Integer& z) { return z == 0; }
inline Integer one_like(const Integer&) { return 1; }
inline Integer zero_like(const Integer&) { return 0; }

template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  explicit Matrix(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows[0].empty()) fail(ErrorCode::InvalidInput, "empty matrix");
    rows_ = rows.size();
    cols_ = rows[0].size();
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorCode::SizeMismatch, "ragged matrix rows");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n, const T& one) {
    T zero = zero_like(one);
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.same_shape(y);
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + y.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.same_shape(y);
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - y.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a_) v = -v;
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) fail(ErrorCode::SizeMismatch, "matrix product with incompatible shapes");
    Matrix r(x.rows_, y.cols_, zero_like(x.a_[0]));
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a_) v = s * v;
    return r;
  }

  T trace() const {
    if (!is_square()) fail(ErrorCode::SizeMismatch, "trace of a non-square matrix");
    T t = zero_like(a_[0]);
    for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  /// Determinant by cofactor-free elimination; needs exact division.
  T det() const {
    if (!is_square()) fail(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
    if (rows_ == 1) return a_[0];
    if (rows_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
    Matrix m = *this;
    T result = one_like(a_[0]);
    for (std::size_t c = 0; c < rows_; ++c) {
      std::size_t piv = c;
      while (piv < rows_ && is_zero(m(piv, c))) ++piv;
      if (piv == rows_) return zero_like(a_[0]);
      if (piv != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(c, j));
        result = -result;
      }
      result = result * m(c, c);
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (is_zero(m(r, c))) continue;
        T f = m(r, c) / m(c, c);
        for (std::size_t j = c; j < cols_; ++j) m(r, j) = m(r, j) - f * m(c, j);
      }
    }
    return result;
  }

  /// Inverse over a field (Gauss-Jordan); DivisionByZero when singular.
  Matrix inverse() const {
    if (!is_square()) fail(ErrorCode::SizeMismatch, "inverse of a non-square matrix");
    std::size_t n = rows_;
    Matrix m = *this;
    Matrix inv = identity(n, one_like(a_[0]));
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && is_zero(m(piv, c))) ++piv;
      if (piv == n) fail(ErrorCode::DivisionByZero, "singular matrix");
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
      T s = one_like(a_[0]) / m(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(c, j) = s * m(c, j);
        inv(c, j) = s * inv(c, j);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || is_zero(m(r, c))) continue;
        T f = m(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          m(r, j) = m(r, j) - f * m(c, j);
          inv(r, j) = inv(r, j) - f * inv(c, j);
        }
      }
    }
    return inv;
  }

  /// Inverse of a 2x2 matrix of determinant 1: [[d, -b], [-c, a]].
  Matrix sl2_inverse() const {
    if (rows_ != 2 || cols_ != 2) fail(ErrorCode::SizeMismatch, "sl2_inverse needs a 2x2 matrix");
    return Matrix({{(*this)(1, 1), -(*this)(0, 1)}, {-(*this)(1, 0), (*this)(0, 0)}});
  }

  Matrix pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Matrix result = identity(rows_, one_like(a_[0])), base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  const std::vector<T>& entries() const { return a_; }

 private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::SizeMismatch, "matrix shapes differ");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

}  // namespace arithtrace
