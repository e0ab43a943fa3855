#pragma once

// Finite groups by multiplication table, conjugacy classes, their
// power-equivalence classes, and orbit censuses of labeled transition graphs.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "arithtrace/digraph.hpp"

namespace arithtrace {

class FiniteGroupTable {
 public:
  /// table[x][y] is the index of x*y; the axioms are checked.
  explicit FiniteGroupTable(std::vector<std::vector<int>> table) : t_(std::move(table)) {
    int n = order();
    if (n == 0) fail(ErrorCode::InvalidInput, "group table is empty");
    for (const auto& row : t_) {
      if (static_cast<int>(row.size()) != n) fail(ErrorCode::InvalidInput, "group table is not square");
      for (int v : row)
        if (v < 0 || v >= n) fail(ErrorCode::InvalidInput, "group table entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) fail(ErrorCode::InvalidInput, "group table has no identity");
    inv_.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        if (mul(x, y) == identity_) inv_[static_cast<std::size_t>(x)] = y;
      if (inv_[static_cast<std::size_t>(x)] < 0 || mul(inv(x), x) != identity_)
        fail(ErrorCode::InvalidInput, "group table element without inverse");
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) fail(ErrorCode::InvalidInput, "group table is not associative");
  }

  static FiniteGroupTable cyclic(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % n;
    return FiniteGroupTable(std::move(t));
  }

  /// Symmetric group on 3 letters; elements are permutations in lexicographic order.
  static FiniteGroupTable symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::array<int, 3>& q) {
      return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (std::size_t x = 0; x < 6; ++x)
      for (std::size_t y = 0; y < 6; ++y) {
        std::array<int, 3> c{};
        // (x*y)(i) = x(y(i))
        for (std::size_t i = 0; i < 3; ++i) c[i] = perms[x][static_cast<std::size_t>(perms[y][i])];
        t[x][y] = index(c);
      }
    return FiniteGroupTable(std::move(t));
  }

  int order() const { return static_cast<int>(t_.size()); }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return t_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  int inv(int x) const { return inv_[static_cast<std::size_t>(x)]; }
  int pow(int x, long k) const {
    if (k < 0) return pow(inv(x), -k);
    int r = identity_;
    for (long i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }
  const std::vector<std::vector<int>>& table() const { return t_; }

 private:
  std::vector<std::vector<int>> t_;
  std::vector<int> inv_;
  int identity_ = 0;
};

/// Partition of group elements; blocks sorted, ordered by least element.
struct ElementPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;

  int representative(int x) const { return blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(x)])][0]; }
  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const ElementPartition& a, const ElementPartition& b) { return a.blocks == b.blocks; }
};

namespace detail {

inline ElementPartition partition_from_labels(std::vector<int> label) {
  ElementPartition p;
  std::map<int, int> slot;
  p.block_of.assign(label.size(), -1);
  for (std::size_t x = 0; x < label.size(); ++x) {
    auto [it, fresh] = slot.emplace(label[x], static_cast<int>(p.blocks.size()));
    if (fresh) p.blocks.emplace_back();
    p.blocks[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(x));
    p.block_of[x] = it->second;
  }
  return p;
}

}  // namespace detail

inline ElementPartition conjugacy_classes(const FiniteGroupTable& G) {
  int n = G.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (label[static_cast<std::size_t>(x)] >= 0) continue;
    for (int g = 0; g < n; ++g) label[static_cast<std::size_t>(G.mul(G.mul(g, x), G.inv(g)))] = x;
  }
  return detail::partition_from_labels(std::move(label));
}

/// Merges blocks containing x and x^k for every k coprime to |G|.
inline ElementPartition zhat_merge(const FiniteGroupTable& G, const ElementPartition& p) {
  int n = G.order();
  std::vector<int> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (int x = 0; x < n; ++x)
    for (int k = 1; k <= n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      int a = find(p.block_of[static_cast<std::size_t>(x)]);
      int b = find(p.block_of[static_cast<std::size_t>(G.pow(x, k))]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) label[static_cast<std::size_t>(x)] = find(p.block_of[static_cast<std::size_t>(x)]);
  return detail::partition_from_labels(std::move(label));
}

inline ElementPartition zhat_equivalence_classes(const FiniteGroupTable& G) {
  return zhat_merge(G, conjugacy_classes(G));
}

/// Census of cycles of length exactly m by the power class of their holonomy,
/// keyed by the least element of the class. Weights default to 1.
/// `rotation` starts each cycle's product that many edges later.
inline std::map<int, Integer> orbit_class_census(const Digraph& g, const std::map<int, int>& labels,
                                                 const FiniteGroupTable& G, int m,
                                                 const std::map<DynamicalCycle, Integer>& weights = {},
                                                 std::size_t rotation = 0,
                                                 std::size_t limit = kDefaultCycleLimit) {
  if (m < 1) fail(ErrorCode::InvalidInput, "census length must be positive");
  for (int e = 0; e < g.edge_count(); ++e) {
    auto it = labels.find(e);
    if (it == labels.end()) fail(ErrorCode::LabelOutOfRange, "edge " + std::to_string(e) + " has no label");
    if (it->second < 0 || it->second >= G.order())
      fail(ErrorCode::LabelOutOfRange, "label of edge " + std::to_string(e) + " is not a group element");
  }
  ElementPartition z = zhat_equivalence_classes(G);
  std::map<int, Integer> census;
  for (const auto& c : enumerate_dynamical_cycles(g, m, false, limit)) {
    if (static_cast<int>(c.length()) != m) continue;
    int h = G.identity();
    for (std::size_t i = 0; i < c.length(); ++i) h = G.mul(h, labels.at(c.edges[(i + rotation) % c.length()]));
    auto w = weights.find(c);
    census[z.representative(h)] += (w == weights.end()) ? Integer(1) : w->second;
  }
  return census;
}

}  // namespace arithtrace
