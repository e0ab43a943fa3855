#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "arithtrace/arithtrace.hpp"

namespace arithtrace {

// readable values in assertion messages
inline void PrintTo(const AlgebraicNumber& a, std::ostream* os) { *os << a.to_string(); }
inline void PrintTo(const IntLaurentPoly& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const Quaternion& q, std::ostream* os) { *os << q.to_string(); }

}  // namespace arithtrace

namespace testing_helpers {

using namespace arithtrace;

inline NumberField field(std::vector<long> coeffs) {
  std::vector<Integer> c;
  for (long x : coeffs) c.push_back(Integer(x));
  return NumberField(ZPoly(std::move(c)));
}

inline Rational q(const std::string& s) { return parse_rational(s); }

inline AlgebraicNumber el(const NumberField& K, std::vector<std::string> coords) {
  std::vector<Rational> c(static_cast<std::size_t>(K.degree()), Rational(0));
  for (std::size_t i = 0; i < coords.size(); ++i) c[i] = parse_rational(coords[i]);
  return K.from_coords(std::move(c));
}

inline Mat2 mat(const NumberField& K, std::vector<std::vector<long>> rows) {
  std::vector<std::vector<AlgebraicNumber>> r;
  for (const auto& row : rows) {
    std::vector<AlgebraicNumber> x;
    for (long v : row) x.push_back(K.from_rational(v));
    r.push_back(x);
  }
  return Mat2(r);
}

inline ZPoly zpoly(std::vector<long> coeffs) {
  std::vector<Integer> c;
  for (long x : coeffs) c.push_back(Integer(x));
  return ZPoly(std::move(c));
}

inline IntLaurentPoly laurent(std::vector<long> coeffs, long shift = 0) { return IntLaurentPoly::from_poly(zpoly(coeffs), shift); }

inline std::vector<std::vector<Integer>> imat(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Integer>> m;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (long v : row) r.push_back(Integer(v));
    m.push_back(r);
  }
  return m;
}

}  // namespace testing_helpers
