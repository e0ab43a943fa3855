#pragma once

// First homology of transition graphs and generation checks for the
// subgroup of the free group pi_1(g, base) carried by a set of cycles.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "arithtrace/digraph.hpp"

namespace arithtrace {

/// Spanning forest chosen by BFS from the lowest-numbered vertex of each
/// component, taking edges in id order and ignoring direction.
struct SpanningForest {
  std::vector<bool> in_tree;      // per edge
  std::vector<int> non_tree;      // edge ids, increasing
  std::vector<int> parent_edge;   // per vertex, -1 at roots
  std::vector<int> root;          // per vertex
  int components = 0;
};

inline SpanningForest spanning_forest(const Digraph& g) {
  int V = g.vertex_count(), E = g.edge_count();
  SpanningForest f;
  f.in_tree.assign(static_cast<std::size_t>(E), false);
  f.parent_edge.assign(static_cast<std::size_t>(V), -1);
  f.root.assign(static_cast<std::size_t>(V), -1);
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(V));
  for (int e = 0; e < E; ++e) {
    inc[static_cast<std::size_t>(g.edge(e).tail)].push_back(e);
    if (g.edge(e).head != g.edge(e).tail) inc[static_cast<std::size_t>(g.edge(e).head)].push_back(e);
  }
  for (int s = 0; s < V; ++s) {
    if (f.root[static_cast<std::size_t>(s)] >= 0) continue;
    ++f.components;
    f.root[static_cast<std::size_t>(s)] = s;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int e : inc[static_cast<std::size_t>(v)]) {
        int w = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
        if (f.root[static_cast<std::size_t>(w)] >= 0) continue;
        f.root[static_cast<std::size_t>(w)] = s;
        f.parent_edge[static_cast<std::size_t>(w)] = e;
        f.in_tree[static_cast<std::size_t>(e)] = true;
        queue.push_back(w);
      }
    }
  }
  for (int e = 0; e < E; ++e)
    if (!f.in_tree[static_cast<std::size_t>(e)]) f.non_tree.push_back(e);
  return f;
}

inline int first_betti_number(const Digraph& g) {
  return g.edge_count() - g.vertex_count() + spanning_forest(g).components;
}

/// Hermite-style row reduction over Z; returns the nonzero rows in echelon form.
inline std::vector<std::vector<Integer>> integer_echelon(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return rows;
  std::size_t cols = rows[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (;;) {
      std::size_t piv = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (piv == rows.size() || abs_int(rows[i][c]) < abs_int(rows[piv][c]))) piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[r], rows[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) {
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

struct SpanResult {
  int rank = 0;
  int betti = 0;
  /// Index of the span in H_1(g; Z); only defined when the span has full rank.
  std::optional<Integer> index;
};

/// Class of a closed forward walk in H_1 against the spanning-forest basis.
inline std::vector<Integer> homology_class(const SpanningForest& f, const std::vector<int>& walk) {
  std::vector<Integer> v(f.non_tree.size(), Integer(0));
  for (int e : walk) {
    auto it = std::lower_bound(f.non_tree.begin(), f.non_tree.end(), e);
    if (it != f.non_tree.end() && *it == e) v[static_cast<std::size_t>(it - f.non_tree.begin())] += 1;
  }
  return v;
}

inline SpanResult cycle_span_rank(const Digraph& g, int max_len) {
  SpanningForest f = spanning_forest(g);
  SpanResult out;
  out.betti = static_cast<int>(f.non_tree.size());
  if (out.betti == 0) {
    out.index = Integer(1);
    return out;
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& c : enumerate_dynamical_cycles(g, max_len)) rows.push_back(homology_class(f, c.edges));
  auto ech = integer_echelon(std::move(rows));
  out.rank = static_cast<int>(ech.size());
  if (out.rank == out.betti) {
    Integer idx = 1;
    for (std::size_t i = 0; i < ech.size(); ++i) {
      std::size_t c = 0;
      while (ech[i][c] == 0) ++c;
      idx *= abs_int(ech[i][c]);
    }
    out.index = idx;
  }
  return out;
}

/// Folded core graph of a subgroup of a free group given by generator words.
/// Letters are 1-based generator numbers, negative for inverses.
class FoldedGraph {
 public:
  FoldedGraph(const std::vector<std::vector<int>>& words) {
    int next = 1;
    for (const auto& w : words) {
      if (w.empty()) continue;
      int prev = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        int to = (i + 1 == w.size()) ? 0 : next++;
        add_edge(prev, to, w[i]);
        prev = to;
      }
    }
    vertices_ = next;
    fold();
    trim();
  }

  int vertex_count() const { return static_cast<int>(live_vertices().size()); }
  std::size_t edge_count() const { return edges_.size(); }

  /// True iff the core is a single vertex carrying a loop for each of `rank` generators.
  bool is_full_rose(int rank) const {
    if (vertex_count() != 1) return false;
    std::set<int> labels;
    for (const auto& e : edges_) labels.insert(e.label);
    return static_cast<int>(labels.size()) == rank && static_cast<int>(edges_.size()) == rank;
  }

 private:
  struct LabeledEdge {
    int from, to, label;
    friend bool operator<(const LabeledEdge& a, const LabeledEdge& b) {
      return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
    }
  };

  void add_edge(int from, int to, int letter) {
    if (letter > 0)
      edges_.push_back({from, to, letter});
    else
      edges_.push_back({to, from, -letter});
  }

  int find(int v) {
    while (parent_.count(v) && parent_[v] != v) v = parent_[v] = find(parent_[v]);
    return v;
  }

  void fold() {
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& e : edges_) {
        e.from = find(e.from);
        e.to = find(e.to);
      }
      std::sort(edges_.begin(), edges_.end());
      edges_.erase(std::unique(edges_.begin(), edges_.end(),
                               [](const LabeledEdge& a, const LabeledEdge& b) {
                                 return a.from == b.from && a.to == b.to && a.label == b.label;
                               }),
                   edges_.end());
      std::map<std::pair<int, int>, int> out, in;
      for (const auto& e : edges_) {
        auto [it, fresh] = out.emplace(std::make_pair(e.from, e.label), e.to);
        if (!fresh && it->second != e.to) {
          merge(it->second, e.to);
          changed = true;
          break;
        }
        auto [jt, fresh_in] = in.emplace(std::make_pair(e.to, e.label), e.from);
        if (!fresh_in && jt->second != e.from) {
          merge(jt->second, e.from);
          changed = true;
          break;
        }
      }
    }
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);  // the base vertex 0 stays a representative
    parent_[a] = a;
    parent_[b] = a;
  }

  void trim() {
    for (bool changed = true; changed;) {
      changed = false;
      std::map<int, int> degree;
      for (const auto& e : edges_) {
        ++degree[e.from];
        ++degree[e.to];
      }
      for (const auto& [v, d] : degree) {
        if (v == 0 || d != 1) continue;
        edges_.erase(std::remove_if(edges_.begin(), edges_.end(),
                                    [v = v](const LabeledEdge& e) { return e.from == v || e.to == v; }),
                     edges_.end());
        changed = true;
        break;
      }
    }
  }

  std::set<int> live_vertices() const {
    std::set<int> s{0};
    for (const auto& e : edges_) {
      s.insert(e.from);
      s.insert(e.to);
    }
    return s;
  }

  std::vector<LabeledEdge> edges_;
  std::map<int, int> parent_;
  int vertices_ = 1;
};

/// Generator word of a closed forward walk in pi_1(g, base): the non-tree
/// edges it crosses, as 1-based generator numbers.
inline std::vector<int> free_group_word(const SpanningForest& f, const std::vector<int>& walk) {
  std::vector<int> w;
  for (int e : walk) {
    auto it = std::lower_bound(f.non_tree.begin(), f.non_tree.end(), e);
    if (it != f.non_tree.end() && *it == e) w.push_back(static_cast<int>(it - f.non_tree.begin()) + 1);
  }
  return w;
}

inline bool stallings_generates(const Digraph& g, const std::vector<DynamicalCycle>& cycles, int base = 0) {
  if (!is_irreducible(g)) fail(ErrorCode::NotIrreducible, "graph is not irreducible");
  if (base < 0 || base >= g.vertex_count()) fail(ErrorCode::InvalidInput, "base vertex out of range");
  // In a connected graph every tree path is trivial in the generators, so the
  // conjugated loop at any base reads the same generator word.
  SpanningForest f = spanning_forest(g);
  std::vector<std::vector<int>> words;
  for (const auto& c : cycles) words.push_back(free_group_word(f, c.edges));
  FoldedGraph core(words);
  return core.is_full_rose(static_cast<int>(f.non_tree.size()));
}

inline int folded_core_vertices(const Digraph& g, const std::vector<DynamicalCycle>& cycles) {
  SpanningForest f = spanning_forest(g);
  std::vector<std::vector<int>> words;
  for (const auto& c : cycles) words.push_back(free_group_word(f, c.edges));
  return FoldedGraph(words).vertex_count();
}

}  // namespace arithtrace
