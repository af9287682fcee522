#include "longcycles/graph.hpp"

#include <algorithm>

namespace longcycles {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  if (n > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(kMaxOrder));
  }
  neighbors_.resize(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (neighbors_[e.u].contains(e.v)) continue;
    neighbors_[e.u].insert(e.v);
    neighbors_[e.v].insert(e.u);
    ++m_;
  }
  sorted_.reserve(n);
  for (const VertexSet& nb : neighbors_) sorted_.push_back(nb.to_vector());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : sorted_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace longcycles
