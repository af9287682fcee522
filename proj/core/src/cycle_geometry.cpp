#include "longcycles/cycle_geometry.hpp"

#include <algorithm>
#include <string>

namespace longcycles {

OrientedCycle::OrientedCycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw GeometryError("an oriented cycle needs at least 3 vertices");
  for (Vertex v : vertices_) {
    if (members_.contains(v)) {
      throw GeometryError("repeated vertex " + std::to_string(v) + " in oriented cycle");
    }
    members_.insert(v);
  }
}

int OrientedCycle::position(Vertex v) const {
  if (!members_.contains(v)) throw GeometryError("vertex " + std::to_string(v) + " is not on the cycle");
  return static_cast<int>(std::find(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
}

Vertex OrientedCycle::at(int index) const {
  const int n = size();
  return vertices_[((index % n) + n) % n];
}

OrientedCycle OrientedCycle::reversed() const {
  return OrientedCycle(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

int arc_length(const OrientedCycle& c, Vertex start, Vertex end) {
  const int n = c.size();
  return ((c.position(end) - c.position(start)) % n + n) % n;
}

std::vector<Vertex> segment_vertices(const OrientedCycle& c, const Segment& seg) {
  const int first = c.position(seg.start);
  const int len = arc_length(c, seg.start, seg.end);
  std::vector<Vertex> out;
  out.reserve(len + 1);
  for (int i = 0; i <= len; ++i) out.push_back(c.at(first + i));
  return out;
}

Segment shortest_containing_segment(const OrientedCycle& c, const VertexSet& s) {
  if (s.empty()) throw GeometryError("containing segment of an empty set");
  if (!s.is_subset_of(c.vertex_set())) throw GeometryError("set is not contained in the cycle");
  const int n = c.size();
  // Members in cyclic order; the segment starting at member i ends at member i-1.
  std::vector<Vertex> members;
  for (Vertex v : c.vertices()) {
    if (s.contains(v)) members.push_back(v);
  }
  const int m = static_cast<int>(members.size());
  Segment best{members[0], members[m - 1]};
  int best_count = n + 1;
  for (int i = 0; i < m; ++i) {
    const Vertex start = members[i];
    const Vertex end = members[(i + m - 1) % m];
    const int count = arc_length(c, start, end) + 1;
    if (count < best_count || (count == best_count && start < best.start)) {
      best = {start, end};
      best_count = count;
    }
  }
  return best;
}

std::vector<Vertex> block_preceding(const OrientedCycle& c, Vertex x, int k) {
  if (k < 0 || k > c.size() - 1) throw GeometryError("block size out of range");
  const int p = c.position(x);
  std::vector<Vertex> out;
  for (int i = k; i >= 1; --i) out.push_back(c.at(p - i));
  return out;
}

std::vector<Vertex> block_following(const OrientedCycle& c, Vertex y, int k) {
  if (k < 0 || k > c.size() - 1) throw GeometryError("block size out of range");
  const int p = c.position(y);
  std::vector<Vertex> out;
  for (int i = 1; i <= k; ++i) out.push_back(c.at(p + i));
  return out;
}

bool interleaved(const OrientedCycle& c, Vertex a, Vertex b, Vertex u, Vertex v) {
  const int ab = arc_length(c, a, b);
  auto inside = [&](Vertex w) {
    const int aw = arc_length(c, a, w);
    return aw > 0 && aw < ab;
  };
  return inside(u) != inside(v);
}

ChordClass classify_pair(const OrientedCycle& c, const PathWitness& p, const PathWitness& q) {
  if (p.vertices.size() < 2 || q.vertices.size() < 2) throw GeometryError("chord needs two endpoints");
  const VertexSet ends{p.front(), p.back(), q.front(), q.back()};
  if (ends.size() != 4) throw GeometryError("chords must have four distinct endpoints");
  for (Vertex v : ends) {
    if (!c.contains(v)) throw GeometryError("chord endpoint not on the cycle");
  }
  if (p.interior().intersects(c.vertex_set()) || q.interior().intersects(c.vertex_set())) {
    throw GeometryError("chord has an interior vertex on the cycle");
  }
  if (p.vertex_set().intersects(q.vertex_set())) throw GeometryError("chords are not disjoint");
  return interleaved(c, p.front(), p.back(), q.front(), q.back()) ? ChordClass::kCrossing
                                                                  : ChordClass::kParallel;
}

int dist_on_cycle(const OrientedCycle& c, Vertex x, Vertex y) {
  return std::min(arc_length(c, x, y), arc_length(c, y, x));
}

OrientedCycle reorient_shortest_first(const OrientedCycle& c, Vertex x, Vertex y) {
  return arc_length(c, x, y) <= arc_length(c, y, x) ? c : c.reversed();
}

}  // namespace longcycles
