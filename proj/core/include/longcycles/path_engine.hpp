#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "longcycles/cycle_geometry.hpp"
#include "longcycles/graph.hpp"
#include "longcycles/path_witness.hpp"

namespace longcycles {

// The class of (source, target)-paths in G - mask: a path starts in source,
// ends in target, and no interior vertex lies in source, target or
// forbidden_internal.
struct PathQuery {
  VertexSet source;
  VertexSet target;
  VertexMask mask;
  VertexSet forbidden_internal;
};

class PathQueryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Whether `path` belongs to the class described by q.
bool satisfies(const Graph& g, const PathQuery& q, const PathWitness& path);

// A shortest member of the class (edge count); among those, the
// lexicographically smallest vertex sequence (so the smallest start).
// Throws PathQueryError when source and target intersect.
std::optional<PathWitness> find_path(const Graph& g, const PathQuery& q);

struct TwoPaths {
  PathWitness first;
  PathWitness second;
};
struct CutVertex {
  Vertex z = -1;
};
struct NoPath {};
using MengerResult = std::variant<TwoPaths, CutVertex, NoPath>;

// Threshold-2 vertex Menger: two fully vertex-disjoint members of the class,
// or a single vertex met by every member, or the class is empty. The cut
// vertex is an interior vertex whenever one separates; otherwise it is an
// endpoint (a one-vertex endpoint set is its own cut).
MengerResult two_disjoint_paths_or_cut(const Graph& g, const PathQuery& q);

// The shortest suffix of p, ending at p.back(), whose interior avoids V(c).
PathWitness normalize_chord(const PathWitness& p, const OrientedCycle& c);

}  // namespace longcycles
