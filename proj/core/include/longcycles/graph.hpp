#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "longcycles/vertex_set.hpp"

namespace longcycles {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  static constexpr int kMaxOrder = VertexSet::kCapacity;

  Graph() = default;
  // Duplicate edges are ignored. Throws GraphError on self-loops, ids outside
  // 0..n-1, or n above kMaxOrder.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int edge_count() const { return m_; }
  [[nodiscard]] VertexSet vertices() const { return VertexSet::prefix(n_); }

  [[nodiscard]] const VertexSet& neighbors(Vertex v) const { return neighbors_.at(v); }
  // Neighbors in ascending id order.
  [[nodiscard]] std::span<const Vertex> adjacency(Vertex v) const { return sorted_.at(v); }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(sorted_.at(v).size()); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return u >= 0 && u < n_ && neighbors_[u].contains(v);
  }

  // Edges with u < v, sorted.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.neighbors_ == b.neighbors_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> neighbors_;
  std::vector<std::vector<Vertex>> sorted_;
};

// The induced subgraph G - removed, expressed without copying the graph.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(VertexSet removed) : removed_(removed) {}

  [[nodiscard]] bool removes(Vertex v) const { return removed_.contains(v); }
  [[nodiscard]] bool allows(Vertex v) const { return !removed_.contains(v); }
  [[nodiscard]] const VertexSet& removed() const { return removed_; }

  [[nodiscard]] VertexMask with(Vertex v) const {
    VertexMask m = *this;
    m.removed_.insert(v);
    return m;
  }
  [[nodiscard]] VertexMask with(const VertexSet& more) const { return VertexMask(removed_ | more); }

  // Vertices of g that survive the mask.
  [[nodiscard]] VertexSet surviving(const Graph& g) const { return g.vertices() - removed_; }

 private:
  VertexSet removed_;
};

}  // namespace longcycles
