#pragma once

// Quaternion algebras (a, b / F) given by Hilbert symbols: i^2 = a, j^2 = b,
// ij = -ji = k. Includes the split model (1, 1 / F) = Mat(2, F) and the
// classical trace relations for norm-one elements.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "arithtrace/matrix.hpp"
#include "arithtrace/number_field.hpp"

namespace arithtrace {

class HilbertSymbolAlgebra {
 public:
  HilbertSymbolAlgebra(AlgebraicNumber a, AlgebraicNumber b) {
    if (a.field() != b.field()) fail(ErrorCode::FieldMismatch, "Hilbert symbol entries in different fields");
    if (a.is_zero() || b.is_zero()) fail(ErrorCode::InvalidInput, "Hilbert symbol entries must be nonzero");
    d_ = std::make_shared<const Data>(Data{a.field(), std::move(a), std::move(b)});
  }
  HilbertSymbolAlgebra(const Rational& a, const Rational& b)
      : HilbertSymbolAlgebra(NumberField().from_rational(a), NumberField().from_rational(b)) {}

  const NumberField& field() const { return d_->field; }
  const AlgebraicNumber& a() const { return d_->a; }
  const AlgebraicNumber& b() const { return d_->b; }

  friend bool operator==(const HilbertSymbolAlgebra& x, const HilbertSymbolAlgebra& y) {
    return x.d_ == y.d_ || (x.d_->a == y.d_->a && x.d_->b == y.d_->b);
  }
  friend bool operator!=(const HilbertSymbolAlgebra& x, const HilbertSymbolAlgebra& y) { return !(x == y); }

  std::string to_string() const { return "(" + a().to_string() + ", " + b().to_string() + ")"; }

 private:
  struct Data {
    NumberField field;
    AlgebraicNumber a, b;
  };
  std::shared_ptr<const Data> d_;
};

class Quaternion {
 public:
  Quaternion(HilbertSymbolAlgebra alg, AlgebraicNumber t, AlgebraicNumber x, AlgebraicNumber y, AlgebraicNumber z)
      : alg_(std::move(alg)), c_{std::move(t), std::move(x), std::move(y), std::move(z)} {
    for (const auto& v : c_)
      if (v.field() != alg_.field()) fail(ErrorCode::FieldMismatch, "quaternion coordinate outside the base field");
  }

  static Quaternion scalar(const HilbertSymbolAlgebra& alg, const AlgebraicNumber& s) {
    auto z = alg.field().zero();
    return Quaternion(alg, s, z, z, z);
  }
  static Quaternion one(const HilbertSymbolAlgebra& alg) { return scalar(alg, alg.field().one()); }
  static Quaternion i(const HilbertSymbolAlgebra& alg) {
    auto z = alg.field().zero();
    return Quaternion(alg, z, alg.field().one(), z, z);
  }
  static Quaternion j(const HilbertSymbolAlgebra& alg) {
    auto z = alg.field().zero();
    return Quaternion(alg, z, z, alg.field().one(), z);
  }
  static Quaternion k(const HilbertSymbolAlgebra& alg) {
    auto z = alg.field().zero();
    return Quaternion(alg, z, z, z, alg.field().one());
  }

  const HilbertSymbolAlgebra& algebra() const { return alg_; }
  const AlgebraicNumber& t() const { return c_[0]; }
  const AlgebraicNumber& x() const { return c_[1]; }
  const AlgebraicNumber& y() const { return c_[2]; }
  const AlgebraicNumber& z() const { return c_[3]; }
  const std::array<AlgebraicNumber, 4>& coords() const { return c_; }

  friend bool operator==(const Quaternion& p, const Quaternion& q) { return p.alg_ == q.alg_ && p.c_ == q.c_; }
  friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    p.check_same(q);
    return Quaternion(p.alg_, p.t() + q.t(), p.x() + q.x(), p.y() + q.y(), p.z() + q.z());
  }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    p.check_same(q);
    return Quaternion(p.alg_, p.t() - q.t(), p.x() - q.x(), p.y() - q.y(), p.z() - q.z());
  }
  friend Quaternion operator-(const Quaternion& p) { return Quaternion(p.alg_, -p.t(), -p.x(), -p.y(), -p.z()); }
  friend Quaternion operator*(const AlgebraicNumber& s, const Quaternion& p) {
    return Quaternion(p.alg_, s * p.t(), s * p.x(), s * p.y(), s * p.z());
  }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);

  Quaternion conjugate() const { return Quaternion(alg_, t(), -x(), -y(), -z()); }

  /// Reduced trace 2t.
  AlgebraicNumber trace() const { return t() + t(); }
  /// Reduced norm t^2 - a x^2 - b y^2 + ab z^2.
  AlgebraicNumber norm() const {
    const auto& a = alg_.a();
    const auto& b = alg_.b();
    return t() * t() - a * x() * x() - b * y() * y() + a * b * z() * z();
  }

  Quaternion inverse() const {
    AlgebraicNumber n = norm();
    if (n.is_zero()) fail(ErrorCode::DivisionByZero, "quaternion of norm zero is not invertible");
    return n.inverse() * conjugate();
  }

  std::string to_string() const {
    return "[" + t().to_string() + ", " + x().to_string() + ", " + y().to_string() + ", " + z().to_string() + "]";
  }

 private:
  void check_same(const Quaternion& o) const {
    if (alg_ != o.alg_) fail(ErrorCode::AlgebraMismatch, "quaternions from different algebras");
  }
  HilbertSymbolAlgebra alg_;
  std::array<AlgebraicNumber, 4> c_;
};

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  p.check_same(q);
  const auto& a = p.alg_.a();
  const auto& b = p.alg_.b();
  const auto &t1 = p.t(), &x1 = p.x(), &y1 = p.y(), &z1 = p.z();
  const auto &t2 = q.t(), &x2 = q.x(), &y2 = q.y(), &z2 = q.z();
  // i^2 = a, j^2 = b, k^2 = -ab, ij = k, jk = -b i, ki = -a j
  AlgebraicNumber ab = a * b;
  AlgebraicNumber t = t1 * t2 + a * x1 * x2 + b * y1 * y2 - ab * z1 * z2;
  AlgebraicNumber x = t1 * x2 + x1 * t2 - b * (y1 * z2 - z1 * y2);
  AlgebraicNumber y = t1 * y2 + y1 * t2 + a * (x1 * z2 - z1 * x2);
  AlgebraicNumber z = t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2;
  return Quaternion(p.alg_, t, x, y, z);
}

inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

inline std::pair<AlgebraicNumber, AlgebraicNumber> trace_norm(const Quaternion& q) { return {q.trace(), q.norm()}; }

/// The split algebra (1, 1 / F).
inline HilbertSymbolAlgebra split_algebra(const NumberField& field) {
  return HilbertSymbolAlgebra(field.one(), field.one());
}

/// Mat(2, F) -> (1, 1 / F) with i = diag(1, -1), j = [[0,1],[1,0]], k = [[0,1],[-1,0]].
inline Quaternion quaternion_from_matrix(const Matrix<AlgebraicNumber>& m) {
  if (m.rows() != 2 || m.cols() != 2) fail(ErrorCode::SizeMismatch, "split model needs a 2x2 matrix");
  NumberField f = m(0, 0).field();
  Rational half(1, 2);
  return Quaternion(split_algebra(f), half * (m(0, 0) + m(1, 1)), half * (m(0, 0) - m(1, 1)),
                    half * (m(0, 1) + m(1, 0)), half * (m(0, 1) - m(1, 0)));
}

inline Matrix<AlgebraicNumber> matrix_from_quaternion(const Quaternion& q) {
  const auto& alg = q.algebra();
  if (alg.a() != alg.field().one() || alg.b() != alg.field().one())
    fail(ErrorCode::AlgebraMismatch, "matrix model is only defined for (1, 1 / F)");
  return Matrix<AlgebraicNumber>({{q.t() + q.x(), q.y() + q.z()}, {q.y() - q.z(), q.t() - q.x()}});
}

enum class TraceRelation {
  Inverse,            // Tr(A^-1) = Tr(A)
  Square,             // Tr(A^2) = Tr(A)^2 - 2
  Swap,               // Tr(BA) = Tr(AB)
  Conjugate,          // Tr(B A B^-1) = Tr(A)
  InverseProduct,     // Tr(A B^-1) = Tr(A) Tr(B) - Tr(AB)
  Commutator,         // Tr[A, B] = Tr(A)^2 + Tr(B)^2 + Tr(AB)^2 - Tr(A) Tr(B) Tr(AB) - 2
  FourFold,           // 2 Tr(ABCD) = ...
};

inline const std::vector<TraceRelation>& all_trace_relations() {
  static const std::vector<TraceRelation> all = {TraceRelation::Inverse,        TraceRelation::Square,
                                                 TraceRelation::Swap,           TraceRelation::Conjugate,
                                                 TraceRelation::InverseProduct, TraceRelation::Commutator,
                                                 TraceRelation::FourFold};
  return all;
}

inline const char* trace_relation_name(TraceRelation r) {
  switch (r) {
    case TraceRelation::Inverse: return "inverse";
    case TraceRelation::Square: return "square";
    case TraceRelation::Swap: return "swap";
    case TraceRelation::Conjugate: return "conjugate";
    case TraceRelation::InverseProduct: return "inverse-product";
    case TraceRelation::Commutator: return "commutator";
    case TraceRelation::FourFold: return "four-fold";
  }
  return "?";
}

inline std::size_t trace_relation_arity(TraceRelation r) {
  switch (r) {
    case TraceRelation::Inverse:
    case TraceRelation::Square: return 1;
    case TraceRelation::FourFold: return 4;
    default: return 2;
  }
}

// Uniform access so the relations run in both the quaternion model and the
// matrix model.
inline AlgebraicNumber element_trace(const Quaternion& q) { return q.trace(); }
inline AlgebraicNumber element_norm(const Quaternion& q) { return q.norm(); }
inline Quaternion element_inverse(const Quaternion& q) { return q.conjugate(); }  // norm one
inline AlgebraicNumber element_trace(const Matrix<AlgebraicNumber>& m) { return m.trace(); }
inline AlgebraicNumber element_norm(const Matrix<AlgebraicNumber>& m) { return m.det(); }
inline Matrix<AlgebraicNumber> element_inverse(const Matrix<AlgebraicNumber>& m) { return m.sl2_inverse(); }

/// Both sides of a trace relation for norm-one arguments.
template <class E>
std::pair<AlgebraicNumber, AlgebraicNumber> trace_relation_sides(TraceRelation r, const std::vector<E>& args) {
  if (args.size() != trace_relation_arity(r)) fail(ErrorCode::InvalidInput, "wrong number of trace relation arguments");
  for (const auto& e : args)
    if (element_norm(e) != element_norm(e).field().one())
      fail(ErrorCode::NonUnimodularArgument, "trace relations need arguments of norm 1");
  auto Tr = [](const E& e) { return element_trace(e); };
  const NumberField field = Tr(args[0]).field();
  const AlgebraicNumber two = field.from_rational(2);
  const E& A = args[0];
  switch (r) {
    case TraceRelation::Inverse: return {Tr(element_inverse(A)), Tr(A)};
    case TraceRelation::Square: return {Tr(A * A), Tr(A) * Tr(A) - two};
    case TraceRelation::Swap: return {Tr(args[1] * A), Tr(A * args[1])};
    case TraceRelation::Conjugate: {
      const E& B = args[1];
      return {Tr(B * A * element_inverse(B)), Tr(A)};
    }
    case TraceRelation::InverseProduct: {
      const E& B = args[1];
      return {Tr(A * element_inverse(B)), Tr(A) * Tr(B) - Tr(A * B)};
    }
    case TraceRelation::Commutator: {
      const E& B = args[1];
      AlgebraicNumber ta = Tr(A), tb = Tr(B), tab = Tr(A * B);
      return {Tr(A * B * element_inverse(A) * element_inverse(B)), ta * ta + tb * tb + tab * tab - ta * tb * tab - two};
    }
    case TraceRelation::FourFold: {
      const E &B = args[1], &C = args[2], &D = args[3];
      AlgebraicNumber a = Tr(A), b = Tr(B), c = Tr(C), d = Tr(D);
      AlgebraicNumber ab = Tr(A * B), ac = Tr(A * C), ad = Tr(A * D), bc = Tr(B * C), bd = Tr(B * D), cd = Tr(C * D);
      AlgebraicNumber rhs = a * Tr(B * C * D) + b * Tr(A * C * D) + c * Tr(A * B * D) + d * Tr(A * B * C) + ab * cd -
                            ac * bd + ad * bc - a * b * cd - c * d * ab - a * d * bc - b * c * ad + a * b * c * d;
      return {two * Tr(A * B * C * D), rhs};
    }
  }
  fail(ErrorCode::InvalidInput, "unknown trace relation");
}

template <class E>
bool trace_relation_check(TraceRelation r, const std::vector<E>& args) {
  auto [lhs, rhs] = trace_relation_sides(r, args);
  return lhs == rhs;
}

}  // namespace arithtrace
