#pragma once

// Directed transition graphs, combinatorial paths and dynamical cycles
// (closed forward walks up to rotation).

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "arithtrace/integer.hpp"

namespace arithtrace {

inline constexpr std::size_t kDefaultCycleLimit = 1000000;

struct Edge {
  int tail = 0;
  int head = 0;
};

class Digraph {
 public:
  Digraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 1) fail(ErrorCode::InvalidInput, "graph needs at least one vertex");
    for (const auto& e : edges_)
      if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
        fail(ErrorCode::InvalidInput, "edge endpoint out of range");
    out_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) out_[static_cast<std::size_t>(edges_[i].tail)].push_back(static_cast<int>(i));
  }

  /// One vertex with `loops` loop edges.
  static Digraph rose(int loops) { return Digraph(1, std::vector<Edge>(static_cast<std::size_t>(loops), Edge{0, 0})); }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const {
    if (id < 0 || id >= edge_count()) fail(ErrorCode::InvalidInput, "edge id out of range");
    return edges_[static_cast<std::size_t>(id)];
  }
  /// Outgoing edge ids of v, increasing.
  const std::vector<int>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }

  /// Display name of an edge: a, b, c, ... for small graphs, e<id> otherwise.
  std::string edge_name(int id) const {
    if (edge_count() <= 26) return std::string(1, static_cast<char>('a' + id));
    return "e" + std::to_string(id);
  }

  std::vector<std::vector<Integer>> adjacency() const {
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(n_), std::vector<Integer>(static_cast<std::size_t>(n_), 0));
    for (const auto& e : edges_) m[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)] += 1;
    return m;
  }

  /// Number of weakly connected components.
  int component_count() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) {
      nbr[static_cast<std::size_t>(e.tail)].push_back(e.head);
      nbr[static_cast<std::size_t>(e.head)].push_back(e.tail);
    }
    int c = 0;
    for (int s = 0; s < n_; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<int> stack{s};
      comp[static_cast<std::size_t>(s)] = c;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : nbr[static_cast<std::size_t>(v)])
          if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = c;
            stack.push_back(w);
          }
      }
      ++c;
    }
    return c;
  }

  /// Shortest forward path from `from` to `to` by BFS; among shortest paths
  /// the one whose edge-id sequence is lexicographically least. Empty when
  /// from == to; nullopt when unreachable.
  std::optional<std::vector<int>> shortest_path(int from, int to) const {
    if (from == to) return std::vector<int>{};
    // distances to `to` via reverse BFS, then greedy least-edge walk
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<int>> in(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < edges_.size(); ++i) in[static_cast<std::size_t>(edges_[i].head)].push_back(static_cast<int>(i));
    std::deque<int> q{to};
    dist[static_cast<std::size_t>(to)] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int e : in[static_cast<std::size_t>(v)]) {
        int u = edges_[static_cast<std::size_t>(e)].tail;
        if (dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          q.push_back(u);
        }
      }
    }
    if (dist[static_cast<std::size_t>(from)] < 0) return std::nullopt;
    std::vector<int> path;
    int v = from;
    while (v != to) {
      for (int e : out_edges(v)) {
        int w = edges_[static_cast<std::size_t>(e)].head;
        if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] - 1) {
          path.push_back(e);
          v = w;
          break;
        }
      }
    }
    return path;
  }

  bool reachable(int from, int to) const { return shortest_path(from, to).has_value(); }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
};

/// Strongly connected with every vertex on a cycle (a single vertex needs a loop).
inline bool is_irreducible(const Digraph& g) {
  // with at least one edge, strong connectivity puts every vertex on a cycle
  if (g.edge_count() == 0) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.reachable(0, v) || !g.reachable(v, 0)) return false;
  return true;
}

struct Step {
  int edge = 0;
  bool reversed = false;
  friend bool operator==(const Step& a, const Step& b) { return a.edge == b.edge && a.reversed == b.reversed; }
};

/// A path in the underlying graph that may traverse edges backwards.
class CombPath {
 public:
  CombPath(const Digraph& g, std::vector<Step> steps) : steps_(std::move(steps)) {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      g.edge(steps_[i].edge);
      if (i > 0 && end_of(g, steps_[i - 1]) != start_of(g, steps_[i]))
        fail(ErrorCode::InvalidInput, "consecutive path steps do not meet");
    }
    if (!steps_.empty()) {
      start_ = start_of(g, steps_.front());
      end_ = end_of(g, steps_.back());
    }
  }

  static int start_of(const Digraph& g, const Step& s) { return s.reversed ? g.edge(s.edge).head : g.edge(s.edge).tail; }
  static int end_of(const Digraph& g, const Step& s) { return s.reversed ? g.edge(s.edge).tail : g.edge(s.edge).head; }

  const std::vector<Step>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }
  bool is_closed() const { return steps_.empty() || start_ == end_; }
  bool all_forward() const {
    return std::none_of(steps_.begin(), steps_.end(), [](const Step& s) { return s.reversed; });
  }
  int start() const { return start_; }
  int end() const { return end_; }

  std::string to_string(const Digraph& g) const {
    if (steps_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (i) s += ".";
      s += g.edge_name(steps_[i].edge);
      if (steps_[i].reversed) s += "'";
    }
    return s;
  }

 private:
  std::vector<Step> steps_;
  int start_ = 0, end_ = 0;
};

/// A closed forward walk in its lexicographically least rotation.
struct DynamicalCycle {
  std::vector<int> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const DynamicalCycle& a, const DynamicalCycle& b) { return a.edges == b.edges; }
  /// (length, lexicographic) order.
  friend bool operator<(const DynamicalCycle& a, const DynamicalCycle& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  }
  std::string name(const Digraph& g) const {
    std::string s;
    bool dotted = g.edge_count() > 26;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (dotted && i) s += ".";
      s += g.edge_name(edges[i]);
    }
    return s;
  }
};

/// Least rotation of a nonempty sequence.
inline std::vector<int> least_rotation(const std::vector<int>& w) {
  std::vector<int> best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<int> rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    if (rot < best) best = std::move(rot);
  }
  return best;
}

/// Canonical dynamical cycle of a closed forward walk; throws if the walk is
/// not closed or not connected.
inline DynamicalCycle make_cycle(const Digraph& g, const std::vector<int>& walk) {
  if (walk.empty()) fail(ErrorCode::InvalidInput, "empty dynamical cycle");
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Edge& e = g.edge(walk[i]);
    const Edge& next = g.edge(walk[(i + 1) % walk.size()]);
    if (e.head != next.tail) fail(ErrorCode::NotClosed, "walk is not a closed forward path");
  }
  return DynamicalCycle{least_rotation(walk)};
}

/// All closed forward walks of length <= max_len up to rotation, ordered by
/// (length, lexicographic). With `elementary_only`, walks that revisit a
/// vertex are skipped.
inline std::vector<DynamicalCycle> enumerate_dynamical_cycles(const Digraph& g, int max_len, bool elementary_only = false,
                                                              std::size_t limit = kDefaultCycleLimit) {
  if (max_len < 1) fail(ErrorCode::InvalidInput, "max_len must be at least 1");
  std::vector<DynamicalCycle> out;
  int E = g.edge_count();
  int V = g.vertex_count();
  for (int len = 1; len <= max_len; ++len) {
    std::vector<DynamicalCycle> level;
    // The least rotation starts with the least edge id s, and uses only edges >= s.
    for (int s = 0; s < E; ++s) {
      int start = g.edge(s).tail;
      // back[k][v]: a walk of k edges (ids >= s) leads from v to start
      std::vector<std::vector<char>> back(static_cast<std::size_t>(len + 1), std::vector<char>(static_cast<std::size_t>(V), 0));
      back[0][static_cast<std::size_t>(start)] = 1;
      for (int k = 1; k <= len; ++k)
        for (int e = s; e < E; ++e)
          if (back[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(g.edge(e).head)])
            back[static_cast<std::size_t>(k)][static_cast<std::size_t>(g.edge(e).tail)] = 1;
      if (!back[static_cast<std::size_t>(len - 1)][static_cast<std::size_t>(g.edge(s).head)]) continue;
      std::vector<int> walk{s};
      std::vector<char> seen(static_cast<std::size_t>(V), 0);
      seen[static_cast<std::size_t>(start)] = 1;
      auto recurse = [&](auto&& self) -> void {
        int v = g.edge(walk.back()).head;
        int remaining = len - static_cast<int>(walk.size());
        if (remaining == 0) {
          if (v != start) return;
          if (least_rotation(walk) == walk) {
            level.push_back(DynamicalCycle{walk});
            if (out.size() + level.size() > limit)
              fail(ErrorCode::EnumerationOverflow, "more than " + std::to_string(limit) + " dynamical cycles");
          }
          return;
        }
        if (elementary_only) {
          if (seen[static_cast<std::size_t>(v)]) return;
          seen[static_cast<std::size_t>(v)] = 1;
        }
        for (int e : g.out_edges(v)) {
          if (e < s) continue;
          if (!back[static_cast<std::size_t>(remaining - 1)][static_cast<std::size_t>(g.edge(e).head)]) continue;
          walk.push_back(e);
          self(self);
          walk.pop_back();
        }
        if (elementary_only) seen[static_cast<std::size_t>(v)] = 0;
      };
      recurse(recurse);
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// tr(M^m) for the adjacency matrix M: based closed forward walks of length m.
inline Integer closed_walk_count(const Digraph& g, int m) {
  if (m < 1) fail(ErrorCode::InvalidInput, "m must be at least 1");
  auto a = g.adjacency();
  std::size_t n = a.size();
  auto mul = [&](const std::vector<std::vector<Integer>>& x, const std::vector<std::vector<Integer>>& y) {
    std::vector<std::vector<Integer>> r(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
      }
    return r;
  };
  auto result = a;
  for (int i = 1; i < m; ++i) result = mul(result, a);
  Integer t = 0;
  for (std::size_t i = 0; i < n; ++i) t += result[i][i];
  return t;
}

}  // namespace arithtrace
