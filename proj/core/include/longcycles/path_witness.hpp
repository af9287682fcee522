#pragma once

#include <vector>

#include "longcycles/vertex_set.hpp"

namespace longcycles {

// A simple path, listed from its first endpoint to its last.
struct PathWitness {
  std::vector<Vertex> vertices;

  [[nodiscard]] Vertex front() const { return vertices.front(); }
  [[nodiscard]] Vertex back() const { return vertices.back(); }
  [[nodiscard]] int length() const { return static_cast<int>(vertices.size()) - 1; }
  [[nodiscard]] VertexSet vertex_set() const { return VertexSet::of(vertices); }
  [[nodiscard]] VertexSet interior() const {
    VertexSet s;
    for (std::size_t i = 1; i + 1 < vertices.size(); ++i) s.insert(vertices[i]);
    return s;
  }
  [[nodiscard]] PathWitness reversed() const { return {{vertices.rbegin(), vertices.rend()}}; }

  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

}  // namespace longcycles
