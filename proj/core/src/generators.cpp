#include "longcycles/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace longcycles {
namespace {

// Uniform integer in [0, bound) from raw mt19937_64 output; unlike
// std::uniform_int_distribution this is identical on every standard library.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % bound;
}

double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

using Code = std::uint64_t;

int pair_index(int i, int j, int n) {
  // Position of (i, j), i < j, in row-major upper-triangle order.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Code encode(const std::vector<std::uint32_t>& adj, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Code code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((adj[perm[i]] >> perm[j]) & 1U) code |= Code{1} << pair_index(i, j, n);
    }
  }
  return code;
}

// Canonical code: maximum encoding over all degree-class-preserving orders.
Code canonical_code(const std::vector<std::uint32_t>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](int v) { return std::popcount(adj[v]); };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg(a) > deg(b); });

  std::vector<std::pair<int, int>> classes;  // [begin, end) runs of equal degree
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(order[j]) == deg(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : classes) std::sort(order.begin() + b, order.begin() + e);

  Code best = 0;
  // Odometer over per-class permutations.
  while (true) {
    best = std::max(best, encode(adj, order));
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [b, e] = classes[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c == classes.size()) break;
  }
  return best;
}

bool connected(const std::vector<std::uint32_t>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if ((frontier >> v) & 1U) next |= adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? ~0U : ((1U << n) - 1));
}

std::vector<std::uint32_t> decode(Code code, int n) {
  std::vector<std::uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((code >> pair_index(i, j, n)) & 1U) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
    }
  }
  return adj;
}

Graph to_graph(const std::vector<std::uint32_t>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((adj[i] >> j) & 1U) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

}  // namespace

Graph gen_complete(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph gen_cycle(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph gen_path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph gen_disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  const int shift = g1.order();
  for (const Edge& e : g2.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g1.order() + g2.order(), edges);
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw GraphError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (draw_unit(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph gen_petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer 5-cycle
    edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    edges.push_back({i, 5 + i});                // spokes
  }
  return Graph(10, edges);
}

Graph gen_theta(const std::vector<int>& path_lengths) {
  std::vector<Edge> edges;
  int next = 2;
  int direct = 0;
  for (int len : path_lengths) {
    if (len < 1) throw GraphError("theta path length must be positive");
    if (len == 1) {
      if (++direct > 1) throw GraphError("theta graph allows at most one direct edge");
      edges.push_back({0, 1});
      continue;
    }
    Vertex prev = 0;
    for (int i = 1; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return Graph(next, edges);
}

std::vector<Graph> gen_connected_graphs(int n) {
  if (n < 1 || n > 8) throw GraphError("connected graph enumeration supports 1 <= n <= 8");
  // All isomorphism classes (connected or not) on k vertices, grown one vertex
  // at a time; every graph on k+1 vertices is some graph on k vertices plus a
  // vertex with an arbitrary neighborhood.
  std::set<Code> level = {0};
  for (int k = 1; k < n; ++k) {
    std::set<Code> next;
    for (Code code : level) {
      const auto base = decode(code, k);
      for (std::uint32_t nb = 0; nb < (1U << k); ++nb) {
        auto adj = base;
        adj.push_back(nb);
        for (int v = 0; v < k; ++v) {
          if ((nb >> v) & 1U) adj[v] |= 1U << k;
        }
        next.insert(canonical_code(adj));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (Code code : level) {
    const auto adj = decode(code, n);
    if (connected(adj)) out.push_back(to_graph(adj));
  }
  return out;
}

Graph gen_ear_graph(const EarGraphParams& params, std::uint64_t seed) {
  if (params.base_cycle < 3) throw GraphError("base cycle needs at least 3 vertices");
  if (params.min_length < 1 || params.max_length < params.min_length) {
    throw GraphError("invalid ear length range");
  }
  std::mt19937_64 rng(seed);
  int n = params.base_cycle;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> present;
  auto add = [&](Vertex u, Vertex v) {
    edges.push_back({u, v});
    present.insert({std::min(u, v), std::max(u, v)});
  };
  for (Vertex v = 0; v < n; ++v) add(v, (v + 1) % n);
  // Union-find over all vertices; only off-base vertices are ever merged.
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  for (int ear = 0; ear < params.ears; ++ear) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const auto u = static_cast<Vertex>(draw_below(rng, n));
      const auto v = static_cast<Vertex>(draw_below(rng, n));
      const int span = params.max_length - params.min_length + 1;
      const int len = params.min_length + static_cast<int>(draw_below(rng, span));
      if (u == v) continue;
      if (len == 1 && present.count({std::min(u, v), std::max(u, v)})) continue;
      if (n + len - 1 > Graph::kMaxOrder) break;
      const bool off_u = u >= params.base_cycle;
      const bool off_v = v >= params.base_cycle;
      if (params.forest_outside && off_u && off_v && root(u) == root(v)) continue;
      if (params.forest_outside) {
        // The new interior vertices join the tree of each off-base endpoint.
        for (int i = 0; i < len - 1; ++i) parent.push_back(n);
        if (len > 1) {
          const Vertex first = n;
          if (off_u) parent[root(first)] = root(u);
          if (off_v) parent[root(first)] = root(v);
        } else if (off_u && off_v) {
          parent[root(u)] = root(v);
        }
      }
      Vertex prev = u;
      for (int i = 1; i < len; ++i) {
        add(prev, n);
        prev = n++;
      }
      add(prev, v);
      break;
    }
  }
  return Graph(n, edges);
}

}  // namespace longcycles
