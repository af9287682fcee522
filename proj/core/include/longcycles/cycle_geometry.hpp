#pragma once

#include <stdexcept>
#include <vector>

#include "longcycles/cycle_oracle.hpp"
#include "longcycles/path_witness.hpp"

namespace longcycles {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A cycle with a traversal direction: the stored order v0, v1, ..., v(L-1).
class OrientedCycle {
 public:
  OrientedCycle() = default;
  // Throws GeometryError when fewer than 3 vertices or a repeated vertex.
  explicit OrientedCycle(std::vector<Vertex> vertices);
  explicit OrientedCycle(const CycleWitness& c) : OrientedCycle(c.vertices) {}

  [[nodiscard]] int size() const { return static_cast<int>(vertices_.size()); }
  [[nodiscard]] const std::vector<Vertex>& vertices() const { return vertices_; }
  [[nodiscard]] const VertexSet& vertex_set() const { return members_; }
  [[nodiscard]] bool contains(Vertex v) const { return members_.contains(v); }
  // Index of v in the stored order; throws GeometryError if v is not on the cycle.
  [[nodiscard]] int position(Vertex v) const;
  [[nodiscard]] Vertex at(int index) const;  // index taken modulo size()
  [[nodiscard]] Vertex next(Vertex v) const { return at(position(v) + 1); }
  [[nodiscard]] Vertex prev(Vertex v) const { return at(position(v) - 1); }
  [[nodiscard]] OrientedCycle reversed() const;
  [[nodiscard]] CycleWitness canonical() const { return canonical_cycle(vertices_); }

  friend bool operator==(const OrientedCycle& a, const OrientedCycle& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
  VertexSet members_;
};

// The arc start -> end following the orientation; start == end is the
// single-vertex segment.
struct Segment {
  Vertex start = 0;
  Vertex end = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
};

std::vector<Vertex> segment_vertices(const OrientedCycle& c, const Segment& seg);
inline std::vector<Vertex> segment_vertices(const OrientedCycle& c, Vertex start, Vertex end) {
  return segment_vertices(c, Segment{start, end});
}
// Edge count of start -> end along the orientation.
int arc_length(const OrientedCycle& c, Vertex start, Vertex end);

// Minimum-vertex segment containing s (nonempty subset of V(c)); ties go to
// the smallest start vertex id.
Segment shortest_containing_segment(const OrientedCycle& c, const VertexSet& s);

// The k vertices strictly before x (resp. after y), listed along the orientation.
std::vector<Vertex> block_preceding(const OrientedCycle& c, Vertex x, int k);
std::vector<Vertex> block_following(const OrientedCycle& c, Vertex y, int k);

enum class ChordClass { kParallel, kCrossing };

// p and q are disjoint (C,C)-paths with four distinct endpoints on c and no
// interior vertex on c. Parallel iff their endpoint pairs do not interleave.
ChordClass classify_pair(const OrientedCycle& c, const PathWitness& p, const PathWitness& q);

// Whether the chord {a, b} separates u from v on c (a, b, u, v distinct).
bool interleaved(const OrientedCycle& c, Vertex a, Vertex b, Vertex u, Vertex v);

int dist_on_cycle(const OrientedCycle& c, Vertex x, Vertex y);

// c itself when x->y is no longer than y->x, otherwise c reversed.
OrientedCycle reorient_shortest_first(const OrientedCycle& c, Vertex x, Vertex y);

}  // namespace longcycles
