#pragma once

#include <cstdint>
#include <vector>

#include "longcycles/graph.hpp"

namespace longcycles {

Graph gen_complete(int n);
// Throws GraphError for n < 3.
Graph gen_cycle(int n);
Graph gen_path(int n);
// g2's ids are shifted by g1.order().
Graph gen_disjoint_union(const Graph& g1, const Graph& g2);
// Erdos-Renyi G(n, p); the edge set depends only on (n, p, seed).
Graph gen_gnp(int n, double p, std::uint64_t seed);
Graph gen_petersen();
// Two branch vertices 0 and 1 joined by internally disjoint paths with the
// given edge counts (at most one count may be 1).
Graph gen_theta(const std::vector<int>& path_lengths);

// One representative per isomorphism class of connected graphs on n vertices
// (n <= 8), in a fixed order.
std::vector<Graph> gen_connected_graphs(int n);

// Random sparse 2-connected graph: a base cycle plus `ears` paths, each joining
// two distinct existing vertices with between min_length and max_length edges.
// With forest_outside, ears that would close a cycle avoiding the base cycle
// are redrawn, so every cycle meets the base cycle.
struct EarGraphParams {
  int base_cycle = 12;
  int ears = 4;
  int min_length = 1;
  int max_length = 6;
  bool forest_outside = false;
};
Graph gen_ear_graph(const EarGraphParams& params, std::uint64_t seed);

}  // namespace longcycles
