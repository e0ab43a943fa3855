#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace arithtrace;
using namespace testing_helpers;

namespace {

Digraph two_cycle() { return Digraph(2, {{0, 1}, {1, 0}}); }

// e: 0 -> 1, f: 1 -> 0, g: 1 -> 0
Digraph theta() { return Digraph(2, {{0, 1}, {1, 0}, {1, 0}}); }

std::vector<std::vector<int>> cycle_edges(const std::vector<DynamicalCycle>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.push_back(c.edges);
  return out;
}

Sl2Labeling random_labels(const Digraph& g, std::mt19937_64& rng) {
  NumberField Q = NumberField::rationals();
  std::uniform_int_distribution<long> d(-3, 3);
  Sl2Labeling L;
  for (int e = 0; e < g.edge_count(); ++e) {
    // upper times lower unipotent, det 1
    Mat2 u = mat(Q, {{1, d(rng)}, {0, 1}}), l = mat(Q, {{1, 0}, {d(rng), 1}});
    L.set(e, u * l);
  }
  return L;
}

CombPath path(const Digraph& g, std::vector<std::pair<int, bool>> s) {
  std::vector<Step> steps;
  for (auto [e, r] : s) steps.push_back({e, r});
  return CombPath(g, steps);
}

}  // namespace

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(Digraph::rose(2)));
  EXPECT_FALSE(is_irreducible(Digraph(2, {{0, 1}})));
  EXPECT_TRUE(is_irreducible(Digraph(2, {{0, 1}, {1, 0}, {1, 0}})));
  EXPECT_FALSE(is_irreducible(Digraph(1, {})));
}

TEST(Cycles, Enumeration) {
  auto rose = enumerate_dynamical_cycles(Digraph::rose(2), 2);
  EXPECT_EQ(cycle_edges(rose), (std::vector<std::vector<int>>{{0}, {1}, {0, 0}, {0, 1}, {1, 1}}));
  EXPECT_TRUE(enumerate_dynamical_cycles(Digraph(3, {{0, 1}, {1, 2}}), 5).empty());
  EXPECT_EQ(cycle_edges(enumerate_dynamical_cycles(two_cycle(), 2)), (std::vector<std::vector<int>>{{0, 1}}));
}

TEST(Cycles, NecklaceCountsOnRose) {
  // binary necklaces of length 1..6
  std::vector<std::size_t> expected{2, 3, 4, 6, 8, 14};
  auto cs = enumerate_dynamical_cycles(Digraph::rose(2), 6);
  std::vector<std::size_t> got(6, 0);
  for (const auto& c : cs) ++got[c.length() - 1];
  EXPECT_EQ(got, expected);
}

TEST(Cycles, OverflowIsAnError) {
  try {
    enumerate_dynamical_cycles(Digraph::rose(3), 10, false, 50);
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EnumerationOverflow);
  }
}

TEST(ClosedWalks, Examples) {
  EXPECT_EQ(closed_walk_count(Digraph::rose(2), 3), 8);
  EXPECT_EQ(closed_walk_count(two_cycle(), 2), 2);
  EXPECT_EQ(closed_walk_count(two_cycle(), 3), 0);
}

TEST(ClosedWalks, MatchBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5), E = 1 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    for (int i = 0; i < E; ++i) edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    Digraph g(n, edges);
    for (int m = 1; m <= 6; ++m) {
      // based closed walks as edge sequences
      long count = 0;
      std::vector<int> seq(static_cast<std::size_t>(m), 0);
      for (;;) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
          ok = edges[seq[i]].head == edges[seq[(i + 1) % m]].tail;
        count += ok;
        int i = m - 1;
        while (i >= 0 && seq[i] == E - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
      }
      EXPECT_EQ(closed_walk_count(g, m), count);
    }
  }
}

TEST(Rewrite, Examples) {
  Digraph rose = Digraph::rose(2);
  auto nf = rewrite_to_dynamical_form(rose, path(rose, {{0, false}, {1, true}}));
  EXPECT_EQ(nf.segments, (std::vector<std::vector<int>>{{0}, {}}));
  EXPECT_EQ(nf.cycles, (std::vector<std::vector<int>>{{1}}));

  Digraph g = theta();
  auto p = path(g, {{0, false}, {2, false}, {1, true}, {2, false}});
  auto nf2 = rewrite_to_dynamical_form(g, p);
  EXPECT_EQ(nf2.segments, (std::vector<std::vector<int>>{{0, 2, 0}, {2}}));
  EXPECT_EQ(nf2.cycles, (std::vector<std::vector<int>>{{1, 0}}));
  EXPECT_EQ(nf2.to_string(g), "aca (ba)' c");

  auto fwd = path(g, {{0, false}, {1, false}});
  auto nf3 = rewrite_to_dynamical_form(g, fwd);
  EXPECT_EQ(nf3.segments, (std::vector<std::vector<int>>{{0, 1}}));
  EXPECT_TRUE(nf3.cycles.empty());
}

TEST(Rewrite, Errors) {
  Digraph g = theta();
  try {
    rewrite_to_dynamical_form(g, path(g, {{0, false}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
  }
  Digraph red(2, {{0, 0}, {0, 1}, {1, 1}});
  try {
    rewrite_to_dynamical_form(red, path(red, {{0, false}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIrreducible);
  }
}

TEST(Rewrite, PreservesHolonomy) {
  Digraph g = theta();
  auto p = path(g, {{0, false}, {2, false}, {1, true}, {2, false}});
  auto nf = rewrite_to_dynamical_form(g, p);
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    auto L = random_labels(g, rng);
    EXPECT_EQ(holonomy(nf.to_path(g), L), holonomy(p, L));
  }
}

TEST(TraceReduce, Examples) {
  Digraph rose = Digraph::rose(2);
  std::mt19937_64 rng(41);
  auto L = random_labels(rose, rng);
  auto fwd = path(rose, {{0, false}, {1, false}});
  auto r1 = cycle_trace_reduce(rose, fwd, L);
  EXPECT_EQ(r1.polynomial.to_string(rose), "T_ab");
  EXPECT_EQ(r1.value, holonomy(fwd, L).trace());
  auto ab = path(rose, {{0, false}, {1, true}});
  auto r2 = cycle_trace_reduce(rose, ab, L);
  EXPECT_EQ(r2.polynomial.to_string(rose), "T_a*T_b - T_ab");
  EXPECT_EQ(r2.value, holonomy(ab, L).trace());
}

TEST(TraceReduce, TwoReversedCyclesOnRandomLabels) {
  Digraph g = theta();
  // f' g f' g: two reversed runs
  auto p = path(g, {{1, true}, {2, false}, {1, true}, {2, false}});
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    auto L = random_labels(g, rng);
    auto r = cycle_trace_reduce(g, p, L);
    // one factor per reversed cycle plus the forward remainder
    EXPECT_LE(r.polynomial.total_degree(), 3);
    EXPECT_EQ(r.value, holonomy(p, L).trace());
  }
}

TEST(Span, Examples) {
  auto s1 = cycle_span_rank(Digraph::rose(2), 1);
  EXPECT_EQ(s1.rank, 2);
  EXPECT_EQ(s1.index, Integer(1));
  auto s2 = cycle_span_rank(two_cycle(), 2);
  EXPECT_EQ(s2.rank, 1);
  EXPECT_EQ(s2.index, Integer(1));
  // one cycle component plus an isolated edge component
  EXPECT_EQ(cycle_span_rank(Digraph(4, {{0, 1}, {1, 0}, {2, 3}}), 4).rank, 1);
}

TEST(Stallings, Examples) {
  Digraph rose = Digraph::rose(2);
  auto cyc = [&](std::vector<int> w) { return make_cycle(rose, w); };
  EXPECT_TRUE(stallings_generates(rose, {cyc({0}), cyc({1})}));
  EXPECT_FALSE(stallings_generates(rose, {cyc({0, 0}), cyc({1, 1})}));
  EXPECT_TRUE(stallings_generates(rose, {cyc({0}), cyc({0, 1})}));
  EXPECT_GT(folded_core_vertices(rose, {cyc({0, 0}), cyc({1, 1})}), 1);
}

TEST(FiniteGroups, ConjugacyAndZhatClasses) {
  auto C4 = FiniteGroupTable::cyclic(4);
  EXPECT_EQ(conjugacy_classes(C4).size(), 4u);
  EXPECT_EQ(zhat_equivalence_classes(C4).size(), 3u);
  auto T = FiniteGroupTable::cyclic(1);
  EXPECT_EQ(conjugacy_classes(T).size(), 1u);
  EXPECT_EQ(zhat_equivalence_classes(T).size(), 1u);
  // S3 from permutations of {0,1,2}
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{perms[i][perms[j][0]], perms[i][perms[j][1]], perms[i][perms[j][2]]};
      table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  FiniteGroupTable S3(table);
  auto cc = conjugacy_classes(S3);
  ASSERT_EQ(cc.size(), 3u);
  std::vector<std::size_t> sizes;
  for (const auto& b : cc.blocks) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(zhat_equivalence_classes(S3).size(), 3u);
  auto z = zhat_equivalence_classes(S3);
  EXPECT_EQ(zhat_merge(S3, z).size(), z.size());
}

TEST(Census, RoseWithCyclicLabels) {
  Digraph rose = Digraph::rose(2);
  auto C4 = FiniteGroupTable::cyclic(4);
  int g = 1;
  std::map<int, int> labels{{0, g}, {1, C4.identity()}};
  auto census = orbit_class_census(rose, labels, C4, 2);
  std::map<int, Integer> expected{{C4.identity(), 1}, {g, 1}, {C4.mul(g, g), 1}};
  EXPECT_EQ(census, expected);
  for (std::size_t rot = 1; rot < 3; ++rot) EXPECT_EQ(orbit_class_census(rose, labels, C4, 2, {}, rot), census);
  auto trivial = orbit_class_census(rose, {{0, 0}, {1, 0}}, FiniteGroupTable::cyclic(1), 5);
  EXPECT_EQ(trivial, (std::map<int, Integer>{{0, 8}}));
  EXPECT_TRUE(orbit_class_census(Digraph(2, {{0, 1}, {1, 0}}), {{0, 0}, {1, 1}}, C4, 3).empty());
  EXPECT_THROW(orbit_class_census(rose, {{0, 9}, {1, 0}}, C4, 2), Error);
}
