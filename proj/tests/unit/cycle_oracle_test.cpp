#include <gtest/gtest.h>

#include "longcycles/cycle_oracle.hpp"
#include "longcycles/generators.hpp"
#include "reference.hpp"

namespace longcycles {
namespace {

const VertexMask kNone;

Graph two_c5() { return gen_disjoint_union(gen_cycle(5), gen_cycle(5)); }

TEST(CanonicalCycle, RotatesAndOrients) {
  const std::vector<Vertex> seq{4, 2, 0, 3};
  EXPECT_EQ(canonical_cycle(seq).vertices, (std::vector<Vertex>{0, 2, 4, 3}));
  const std::vector<Vertex> other{3, 0, 2, 4};
  EXPECT_EQ(canonical_cycle(other), canonical_cycle(seq));
}

TEST(IsCycleIn, Basics) {
  const Graph k4 = gen_complete(4);
  EXPECT_TRUE(is_cycle_in(k4, std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(is_cycle_in(k4, std::vector<Vertex>{3, 1, 2, 0}));
  EXPECT_FALSE(is_cycle_in(k4, std::vector<Vertex>{0, 1}));
  EXPECT_FALSE(is_cycle_in(k4, std::vector<Vertex>{0, 1, 0, 2}));
  EXPECT_FALSE(is_cycle_in(gen_path(3), std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(is_cycle_in(k4, std::vector<Vertex>{0, 1, 9}));
}

TEST(HasLongCycle, SpecExamples) {
  const Graph c6 = gen_cycle(6);
  EXPECT_TRUE(has_long_cycle(c6, kNone, 3));
  EXPECT_FALSE(has_long_cycle(c6, VertexMask().with(0), 3));
  EXPECT_FALSE(has_long_cycle(c6, kNone, 7));
}

// Petersen has cycles of lengths 5, 6, 8 and 9 only (12, 10, 15, 20 of them).
TEST(HasLongCycle, Petersen) {
  const Graph p = gen_petersen();
  const reference::CycleTable table(p);
  EXPECT_EQ(has_long_cycle(p, kNone, 6), table.has_long(6));
  EXPECT_TRUE(has_long_cycle(p, kNone, 6));
  EXPECT_TRUE(has_long_cycle(p, kNone, 9));
  EXPECT_FALSE(has_long_cycle(p, kNone, 10));
  EXPECT_EQ(enumerate_long_cycles(p, kNone, 5, 1000).size(), 57u);
  EXPECT_EQ(enumerate_long_cycles(p, kNone, 6, 1000).size(), 45u);
  EXPECT_EQ(enumerate_long_cycles(p, kNone, 7, 1000).size(), 35u);
}

TEST(ShortestLongCycle, SpecExamples) {
  const auto k5 = shortest_long_cycle(gen_complete(5), kNone, 3);
  ASSERT_TRUE(k5.has_value());
  EXPECT_EQ(k5->vertices, (std::vector<Vertex>{0, 1, 2}));

  const auto c6 = shortest_long_cycle(gen_cycle(6), kNone, 3);
  ASSERT_TRUE(c6.has_value());
  EXPECT_EQ(c6->vertices, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));

  const auto pair = shortest_long_cycle(two_c5(), kNone, 5);
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(pair->vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));

  EXPECT_FALSE(shortest_long_cycle(gen_cycle(6), kNone, 7).has_value());
  const auto masked = shortest_long_cycle(two_c5(), VertexMask().with(2), 5);
  ASSERT_TRUE(masked.has_value());
  EXPECT_EQ(masked->vertices, (std::vector<Vertex>{5, 6, 7, 8, 9}));
}

TEST(EnumerateLongCycles, SpecExamples) {
  EXPECT_EQ(enumerate_long_cycles(gen_cycle(6), kNone, 3, 10).size(), 1u);
  EXPECT_EQ(enumerate_long_cycles(gen_complete(4), kNone, 3, 100).size(), 7u);
  EXPECT_EQ(enumerate_long_cycles(gen_complete(5), kNone, 3, 3).size(), 3u);
  EXPECT_EQ(enumerate_long_cycles(gen_complete(5), kNone, 3, 1000).size(), 37u);
  EXPECT_EQ(enumerate_long_cycles(gen_complete(6), kNone, 3, 1000).size(), 197u);
}

TEST(EnumerateLongCycles, SortedCanonicalAndDistinct) {
  const auto cycles = enumerate_long_cycles(gen_complete(5), kNone, 4, 1000);
  ASSERT_FALSE(cycles.empty());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    EXPECT_EQ(canonical_cycle(cycles[i].vertices), cycles[i]);
    EXPECT_GE(cycles[i].length(), 4);
    if (i > 0) {
      EXPECT_LT(cycles[i - 1], cycles[i]);
    }
  }
}

TEST(MinTransversal, SpecExamples) {
  const auto k5 = min_transversal_bruteforce(gen_complete(5), 3, 5);
  ASSERT_TRUE(k5.has_value());
  EXPECT_EQ(*k5, (VertexSet{0, 1, 2}));

  const auto c6 = min_transversal_bruteforce(gen_cycle(6), 3, 6);
  ASSERT_TRUE(c6.has_value());
  EXPECT_EQ(*c6, (VertexSet{0}));

  const auto two = min_transversal_bruteforce(gen_disjoint_union(gen_cycle(3), gen_cycle(3)), 3, 6);
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->size(), 2);
  EXPECT_TRUE(two->intersects(VertexSet{0, 1, 2}));
  EXPECT_TRUE(two->intersects(VertexSet{3, 4, 5}));

  EXPECT_FALSE(min_transversal_bruteforce(gen_complete(5), 3, 2).has_value());
  EXPECT_EQ(*min_transversal_bruteforce(gen_path(4), 3, 0), VertexSet{});
}

TEST(DisjointPair, SpecExamples) {
  const auto pair = find_disjoint_long_pair_bruteforce(two_c5(), 5);
  ASSERT_TRUE(pair.has_value());
  std::set<std::vector<Vertex>> got{pair->first.vertices, pair->second.vertices};
  EXPECT_EQ(got, (std::set<std::vector<Vertex>>{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}));

  EXPECT_FALSE(find_disjoint_long_pair_bruteforce(gen_complete(5), 3).has_value());

  const Graph p = gen_petersen();
  const auto pp = find_disjoint_long_pair_bruteforce(p, 5);
  ASSERT_TRUE(pp.has_value());
  EXPECT_FALSE(pp->first.vertex_set().intersects(pp->second.vertex_set()));
  EXPECT_TRUE(is_cycle_in(p, pp->first.vertices));
  EXPECT_TRUE(is_cycle_in(p, pp->second.vertices));
  EXPECT_FALSE(find_disjoint_long_pair_bruteforce(p, 6).has_value());
}

TEST(IsTransversal, SpecExamples) {
  EXPECT_TRUE(is_transversal(gen_cycle(6), 3, VertexSet{0}));
  EXPECT_FALSE(is_transversal(gen_complete(5), 3, VertexSet{0, 1}));
  const Graph p = gen_petersen();
  VertexSet all;
  for (Vertex v = 0; v < p.order(); ++v) all.insert(v);
  EXPECT_TRUE(is_transversal(p, 5, all));
}

// K_{2l-1}: minimum transversal l, no two disjoint long cycles.
TEST(MinTransversal, CompleteGraphTightness) {
  EXPECT_EQ(min_transversal_bruteforce(gen_complete(5), 3, 8)->size(), 3);
  EXPECT_EQ(min_transversal_bruteforce(gen_complete(7), 4, 9)->size(), 4);
  EXPECT_FALSE(find_disjoint_long_pair_bruteforce(gen_complete(7), 4).has_value());
}

TEST(LongCycleSupport, SkipsShortBlocks) {
  // A triangle hanging off a 6-cycle by a bridge.
  const Graph g(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 6}});
  EXPECT_EQ(long_cycle_support(g, kNone, 4), (VertexSet{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(long_cycle_support(g, kNone, 3), (VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(long_cycle_support(g, VertexMask().with(0), 4), VertexSet{});
}

class OracleAgainstReference : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(OracleAgainstReference, RandomGraphs) {
  const std::uint64_t seed = GetParam();
  const int n = 6 + static_cast<int>(seed % 4);
  const double p = 0.25 + 0.1 * static_cast<double>(seed % 3);
  const Graph g = gen_gnp(n, p, seed);
  const reference::CycleTable table(g);
  const auto naive = reference::all_cycles(g);
  for (int ell = 3; ell <= 6; ++ell) {
    std::vector<std::vector<Vertex>> expected;
    for (const auto& c : naive) {
      if (static_cast<int>(c.size()) >= ell) expected.push_back(c);
    }
    std::sort(expected.begin(), expected.end());
    const auto got = enumerate_long_cycles(g, kNone, ell, 1 << 20);
    ASSERT_EQ(got.size(), expected.size()) << "ell=" << ell;
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].vertices, expected[i]);
    EXPECT_EQ(got.size(), table.count_long(ell));

    EXPECT_EQ(has_long_cycle(g, kNone, ell), table.has_long(ell));
    const auto shortest = shortest_long_cycle(g, kNone, ell);
    EXPECT_EQ(shortest ? shortest->length() : -1, table.shortest_long(ell));
    if (shortest) {
      // The tie-break is the lexicographically smallest of the minimum length.
      std::vector<Vertex> best;
      for (const auto& c : expected) {
        if (static_cast<int>(c.size()) == shortest->length() && (best.empty() || c < best)) best = c;
      }
      EXPECT_EQ(shortest->vertices, best);
      const auto first = first_long_cycle(g, kNone, ell);
      ASSERT_TRUE(first.has_value());
      EXPECT_EQ(first->vertices, expected.front());
    }

    const auto x = min_transversal_bruteforce(g, ell, n);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(x->size(), table.min_transversal(ell));
    EXPECT_TRUE(is_transversal(g, ell, *x));
    EXPECT_EQ(find_disjoint_long_pair_bruteforce(g, ell).has_value(), table.has_disjoint_pair(ell));

    for (Vertex r = 0; r < n; r += 3) {
      const VertexMask m = VertexMask().with(r);
      EXPECT_EQ(has_long_cycle(g, m, ell), table.has_long(ell, reference::Mask{1} << r));
      EXPECT_EQ(enumerate_long_cycles(g, m, ell, 1 << 20).size(), table.count_long(ell, reference::Mask{1} << r));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, OracleAgainstReference, ::testing::Range<std::uint64_t>(0, 40));

TEST(FirstLongCycle, SkipsGivenCycle) {
  const Graph k4 = gen_complete(4);
  const auto all = enumerate_long_cycles(k4, kNone, 3, 100);
  const auto second = first_long_cycle(k4, kNone, 3, &all[0]);
  ASSERT_TRUE(second.has_value());
  EXPECT_EQ(*second, all[1]);
  const Graph c6 = gen_cycle(6);
  const auto only = first_long_cycle(c6, kNone, 3);
  ASSERT_TRUE(only.has_value());
  EXPECT_FALSE(first_long_cycle(c6, kNone, 3, &*only).has_value());
}

TEST(Properties, TransversalMinimality) {
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    const Graph g = gen_gnp(8, 0.4, seed);
    for (int ell = 3; ell <= 5; ++ell) {
      const auto x = min_transversal_bruteforce(g, ell, 8);
      ASSERT_TRUE(x.has_value());
      const int k = x->size();
      // No smaller set works.
      for (std::uint32_t s = 0; s < (1u << 8); ++s) {
        if (__builtin_popcount(s) >= k) continue;
        VertexSet y;
        for (Vertex v = 0; v < 8; ++v) {
          if (s >> v & 1) y.insert(v);
        }
        EXPECT_FALSE(is_transversal(g, ell, y));
      }
    }
  }
}

TEST(Properties, EarGraphsOutsideForest) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen_ear_graph({10, 5, 1, 6, true}, seed);
    VertexSet base;
    for (Vertex v = 0; v < 10; ++v) base.insert(v);
    EXPECT_FALSE(has_long_cycle(g, VertexMask().with(base), 3)) << "seed=" << seed;
  }
}

}  // namespace
}  // namespace longcycles
