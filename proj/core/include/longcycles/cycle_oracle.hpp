#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "longcycles/graph.hpp"

namespace longcycles {

// A simple cycle in canonical form: rotated so the smallest id comes first,
// then oriented so the second entry is the smaller neighbor of the first.
struct CycleWitness {
  std::vector<Vertex> vertices;

  [[nodiscard]] int length() const { return static_cast<int>(vertices.size()); }
  [[nodiscard]] VertexSet vertex_set() const { return VertexSet::of(vertices); }

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
  friend auto operator<=>(const CycleWitness& a, const CycleWitness& b) {
    return a.vertices <=> b.vertices;
  }
};

// Rotates/reflects a cyclic sequence into canonical form. Does not validate.
CycleWitness canonical_cycle(std::span<const Vertex> cyclic_sequence);

// True iff the sequence has >= 3 distinct vertices and is a closed walk in g.
bool is_cycle_in(const Graph& g, std::span<const Vertex> cyclic_sequence);

// Vertices of G - mask lying in a biconnected block with at least ell
// vertices; every cycle of length >= ell uses only these.
VertexSet long_cycle_support(const Graph& g, const VertexMask& mask, int ell);

bool has_long_cycle(const Graph& g, const VertexMask& mask, int ell);

// Minimum length among cycles of length >= ell in G - mask; ties go to the
// lexicographically smallest canonical sequence.
std::optional<CycleWitness> shortest_long_cycle(const Graph& g, const VertexMask& mask, int ell);

// Lexicographically smallest canonical cycle of length >= ell in G - mask,
// optionally skipping one specific cycle.
std::optional<CycleWitness> first_long_cycle(const Graph& g, const VertexMask& mask, int ell,
                                             const CycleWitness* skip = nullptr);

// Distinct cycles of length >= ell in canonical lexicographic order, stopping
// after cap results.
std::vector<CycleWitness> enumerate_long_cycles(const Graph& g, const VertexMask& mask, int ell,
                                                int cap);

bool is_transversal(const Graph& g, int ell, const VertexSet& x);

// Minimum-cardinality transversal, searched by increasing size up to budget;
// ties go to the lexicographically smallest sorted vertex set.
std::optional<VertexSet> min_transversal_bruteforce(const Graph& g, int ell, int budget);

// Two vertex-disjoint cycles of length >= ell, or nullopt if none exist.
std::optional<std::pair<CycleWitness, CycleWitness>> find_disjoint_long_pair_bruteforce(
    const Graph& g, int ell);

}  // namespace longcycles
