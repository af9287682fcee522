#include <gtest/gtest.h>

#include <random>

#include "longcycles/cycle_geometry.hpp"

namespace longcycles {
namespace {

OrientedCycle hexagon() { return OrientedCycle({0, 1, 2, 3, 4, 5}); }

PathWitness chord(Vertex a, Vertex b) { return {{a, 100 + a, b}}; }

TEST(OrientedCycle, Construction) {
  EXPECT_THROW(OrientedCycle({0, 1}), GeometryError);
  EXPECT_THROW(OrientedCycle({0, 1, 0}), GeometryError);
  const OrientedCycle c({4, 2, 7});
  EXPECT_EQ(c.size(), 3);
  EXPECT_EQ(c.position(7), 2);
  EXPECT_EQ(c.next(7), 4);
  EXPECT_EQ(c.prev(4), 7);
  EXPECT_EQ(c.at(-1), 7);
  EXPECT_EQ(c.at(5), 7);
  EXPECT_THROW((void)c.position(3), GeometryError);
  EXPECT_EQ(c.reversed().vertices(), (std::vector<Vertex>{7, 2, 4}));
  EXPECT_EQ(c.canonical().vertices, (std::vector<Vertex>{2, 4, 7}));
}

TEST(Segment, SpecExamples) {
  const OrientedCycle c = hexagon();
  EXPECT_EQ(segment_vertices(c, 1, 3), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(segment_vertices(c, 4, 1), (std::vector<Vertex>{4, 5, 0, 1}));
  EXPECT_EQ(segment_vertices(c, 2, 2), (std::vector<Vertex>{2}));
  EXPECT_THROW(segment_vertices(c, 2, 9), GeometryError);
  EXPECT_EQ(arc_length(c, 4, 1), 3);
  EXPECT_EQ(arc_length(c, 2, 2), 0);
}

TEST(ShortestContainingSegment, SpecExamples) {
  const OrientedCycle c = hexagon();
  EXPECT_EQ(shortest_containing_segment(c, VertexSet{1, 3}), (Segment{1, 3}));
  EXPECT_EQ(shortest_containing_segment(c, VertexSet{5, 0, 1}), (Segment{5, 1}));
  EXPECT_EQ(shortest_containing_segment(c, VertexSet{0, 3}), (Segment{0, 3}));
  EXPECT_EQ(shortest_containing_segment(c, VertexSet{4}), (Segment{4, 4}));
  EXPECT_THROW(shortest_containing_segment(c, VertexSet{}), GeometryError);
  EXPECT_THROW(shortest_containing_segment(c, VertexSet{1, 8}), GeometryError);
}

TEST(Blocks, SpecExamples) {
  const OrientedCycle c = hexagon();
  EXPECT_EQ(block_preceding(c, 0, 1), (std::vector<Vertex>{5}));
  EXPECT_EQ(block_preceding(c, 0, 2), (std::vector<Vertex>{4, 5}));
  EXPECT_EQ(block_following(c, 0, 1), (std::vector<Vertex>{1}));
  EXPECT_EQ(block_following(c, 5, 2), (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(block_following(c, 2, 0).empty());
  EXPECT_THROW(block_preceding(c, 0, 6), GeometryError);
  EXPECT_THROW(block_following(c, 0, -1), GeometryError);
}

TEST(ClassifyPair, SpecExamples) {
  const OrientedCycle c = hexagon();
  EXPECT_EQ(classify_pair(c, chord(0, 3), chord(1, 2)), ChordClass::kParallel);
  EXPECT_EQ(classify_pair(c, chord(0, 2), chord(1, 3)), ChordClass::kCrossing);
  EXPECT_EQ(classify_pair(c, chord(0, 1), chord(2, 3)), ChordClass::kParallel);
  EXPECT_THROW(classify_pair(c, chord(0, 2), chord(2, 4)), GeometryError);
  EXPECT_THROW(classify_pair(c, PathWitness{{0, 1, 3}}, chord(2, 4)), GeometryError);
}

TEST(Interleaved, Basics) {
  const OrientedCycle c = hexagon();
  EXPECT_TRUE(interleaved(c, 0, 3, 1, 4));
  EXPECT_FALSE(interleaved(c, 0, 3, 1, 2));
  EXPECT_TRUE(interleaved(c, 3, 0, 4, 1));
}

TEST(DistOnCycle, SpecExamples) {
  const OrientedCycle c = hexagon();
  EXPECT_EQ(dist_on_cycle(c, 0, 3), 3);
  EXPECT_EQ(dist_on_cycle(c, 0, 1), 1);
  EXPECT_EQ(dist_on_cycle(c, 0, 5), 1);
  EXPECT_EQ(dist_on_cycle(c, 4, 4), 0);
  EXPECT_THROW(dist_on_cycle(c, 0, 7), GeometryError);
}

TEST(Reorient, SpecExamples) {
  const OrientedCycle c = hexagon();
  EXPECT_EQ(reorient_shortest_first(c, 0, 2), c);
  EXPECT_EQ(reorient_shortest_first(c, 0, 4), c.reversed());
  EXPECT_EQ(reorient_shortest_first(c, 0, 3), c);
}

OrientedCycle random_cycle(std::mt19937_64& rng, int size) {
  std::vector<Vertex> vs(size);
  for (int i = 0; i < size; ++i) vs[i] = i;
  std::shuffle(vs.begin(), vs.end(), rng);
  return OrientedCycle(vs);
}

TEST(Properties, ComplementarySegments) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const OrientedCycle c = random_cycle(rng, 3 + static_cast<int>(rng() % 12));
    const Vertex x = c.at(static_cast<int>(rng() % c.size()));
    const Vertex y = c.at(static_cast<int>(rng() % c.size()));
    if (x == y) continue;
    const auto a = segment_vertices(c, x, y);
    const auto b = segment_vertices(c, y, x);
    EXPECT_EQ(VertexSet::of(a) & VertexSet::of(b), (VertexSet{x, y}));
    EXPECT_EQ(VertexSet::of(a) | VertexSet::of(b), c.vertex_set());
    EXPECT_EQ(arc_length(c, x, y) + arc_length(c, y, x), c.size());
    EXPECT_EQ(static_cast<int>(a.size()) - 1, arc_length(c, x, y));
  }
}

TEST(Properties, ClassifyIsOrientationFree) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const OrientedCycle c = random_cycle(rng, 4 + static_cast<int>(rng() % 10));
    std::vector<Vertex> four = c.vertices();
    std::shuffle(four.begin(), four.end(), rng);
    const PathWitness p = chord(four[0], four[1]);
    const PathWitness q = chord(four[2], four[3]);
    const ChordClass k = classify_pair(c, p, q);
    EXPECT_EQ(classify_pair(c, q, p), k);
    EXPECT_EQ(classify_pair(c.reversed(), p, q), k);
    EXPECT_EQ(classify_pair(c, p.reversed(), q), k);
    std::vector<Vertex> rotated = c.vertices();
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    EXPECT_EQ(classify_pair(OrientedCycle(rotated), p, q), k);
  }
}

TEST(Properties, ShortestSegmentCoversAndIsMinimal) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    const OrientedCycle c = random_cycle(rng, 3 + static_cast<int>(rng() % 12));
    VertexSet s;
    for (Vertex v : c.vertices()) {
      if (rng() % 3 == 0) s.insert(v);
    }
    if (s.empty()) s.insert(c.at(0));
    const Segment seg = shortest_containing_segment(c, s);
    const auto vs = segment_vertices(c, seg);
    EXPECT_TRUE(s.is_subset_of(VertexSet::of(vs)));
    // Brute force over all segments.
    int best = c.size() + 1;
    Vertex best_start = -1;
    for (Vertex a : c.vertices()) {
      for (Vertex b : c.vertices()) {
        const auto cand = segment_vertices(c, a, b);
        if (!s.is_subset_of(VertexSet::of(cand))) continue;
        const int k = static_cast<int>(cand.size());
        if (k < best || (k == best && a < best_start)) {
          best = k;
          best_start = a;
        }
      }
    }
    EXPECT_EQ(static_cast<int>(vs.size()), best);
    EXPECT_EQ(seg.start, best_start);
  }
}

TEST(Properties, BlocksAreDistinct) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const OrientedCycle c = random_cycle(rng, 3 + static_cast<int>(rng() % 12));
    const Vertex x = c.at(static_cast<int>(rng() % c.size()));
    const int k = static_cast<int>(rng() % c.size());
    const int k2 = static_cast<int>(rng() % (c.size() - k));
    const auto before = block_preceding(c, x, k);
    const auto after = block_following(c, x, k2);
    VertexSet all = VertexSet::of(before) | VertexSet::of(after);
    all.insert(x);
    EXPECT_EQ(all.size(), k + k2 + 1);
    if (k > 0) {
      EXPECT_EQ(before.back(), c.prev(x));
    }
    if (k2 > 0) {
      EXPECT_EQ(after.front(), c.next(x));
    }
  }
}

}  // namespace
}  // namespace longcycles
