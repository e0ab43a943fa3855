#pragma once

// Reading inputs (fields, matrices, graphs, group tables, representations)
// from JSON documents, and writing polynomials back.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "arithtrace/digraph.hpp"
#include "arithtrace/finite_group.hpp"
#include "arithtrace/laurent.hpp"
#include "arithtrace/rep.hpp"

namespace arithtrace::io {

using json = nlohmann::json;

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorCode::InvalidInput, "expected an integer or a rational string, got " + j.dump());
}

inline Integer integer_from_json(const json& j) {
  Rational q = rational_from_json(j);
  if (q.get_den() != 1) fail(ErrorCode::InvalidInput, "expected an integer, got " + j.dump());
  return q.get_num();
}

/// Absent or null means Q; otherwise the monic integer minimal polynomial,
/// coefficients listed from the constant term up.
inline NumberField field_from_json(const json& j) {
  if (j.is_null()) return NumberField::rationals();
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "field must be a coefficient list, constant term first");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return NumberField(ZPoly(std::move(c)));
}

/// A rational scalar, or a list of power-basis coordinates.
inline AlgebraicNumber algebraic_from_json(const json& j, const NumberField& K) {
  if (!j.is_array()) return K.from_rational(rational_from_json(j));
  if (static_cast<int>(j.size()) > K.degree()) fail(ErrorCode::InvalidInput, "too many coordinates for the field");
  std::vector<Rational> c(static_cast<std::size_t>(K.degree()), Rational(0));
  for (std::size_t i = 0; i < j.size(); ++i) c[i] = rational_from_json(j[i]);
  return K.from_coords(std::move(c));
}

inline Matrix<AlgebraicNumber> matrix_from_json(const json& j, const NumberField& K) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::InvalidInput, "matrix must be a nonempty list of rows");
  std::vector<std::vector<AlgebraicNumber>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) fail(ErrorCode::InvalidInput, "matrix rows must be lists");
    std::vector<AlgebraicNumber> row;
    for (const auto& x : r) row.push_back(algebraic_from_json(x, K));
    rows.push_back(std::move(row));
  }
  return Matrix<AlgebraicNumber>(rows);
}

inline std::vector<std::vector<Integer>> integer_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::InvalidInput, "matrix must be a nonempty list of rows");
  std::vector<std::vector<Integer>> m;
  for (const auto& r : j) {
    std::vector<Integer> row;
    for (const auto& x : r) row.push_back(integer_from_json(x));
    if (!m.empty() && row.size() != m[0].size()) fail(ErrorCode::SizeMismatch, "ragged matrix");
    m.push_back(std::move(row));
  }
  return m;
}

/// {"vertices": n, "edges": [[tail, head], ...]}, vertices numbered from 0.
inline Digraph graph_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("edges")) fail(ErrorCode::InvalidInput, "graph needs vertices and edges");
  int n = j.at("vertices").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::InvalidInput, "edges are [tail, head] pairs");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Digraph(n, std::move(edges));
}

/// {"order": n, "table": [[...], ...]}
inline FiniteGroupTable group_from_json(const json& j) {
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
    fail(ErrorCode::InvalidInput, "group order does not match the table");
  return FiniteGroupTable(std::move(table));
}

/// Edge labels as a list indexed by edge id, or an object keyed by edge id.
inline std::map<int, int> labels_from_json(const json& j) {
  const json& l = j.contains("labels") ? j.at("labels") : j;
  std::map<int, int> out;
  if (l.is_array()) {
    for (std::size_t i = 0; i < l.size(); ++i) out[static_cast<int>(i)] = l[i].get<int>();
  } else if (l.is_object()) {
    for (const auto& [k, v] : l.items()) out[std::stoi(k)] = v.get<int>();
  } else {
    fail(ErrorCode::InvalidInput, "labels must be a list or an object");
  }
  return out;
}

/// {"weights": [{"cycle": [edge ids], "weight": k}, ...]}
inline std::map<DynamicalCycle, Integer> weights_from_json(const json& j, const Digraph& g) {
  std::map<DynamicalCycle, Integer> out;
  for (const auto& w : j.at("weights")) out[make_cycle(g, w.at("cycle").get<std::vector<int>>())] = integer_from_json(w.at("weight"));
  return out;
}

/// {"field": [...], "generators": [matrix, ...], "relators": [[1, 2, -1, -2], ...]}
inline GroupRep rep_from_json(const json& j) {
  NumberField K = field_from_json(j.contains("field") ? j.at("field") : json());
  std::vector<Matrix<AlgebraicNumber>> gens;
  for (const auto& m : j.at("generators")) gens.push_back(matrix_from_json(m, K));
  std::vector<Word> rels;
  if (j.contains("relators"))
    for (const auto& r : j.at("relators")) rels.push_back(r.get<Word>());
  return GroupRep(K, std::move(gens), std::move(rels));
}

inline json laurent_to_json(const IntLaurentPoly& f) {
  json o = json::object();
  for (const auto& [e, c] : f.coeffs()) o[std::to_string(e)] = c.get_str();
  return o;
}

inline json algebraic_to_json(const AlgebraicNumber& a) {
  if (a.is_rational()) return to_string(a.rational_part());
  return a.to_string("a");
}

}  // namespace arithtrace::io
