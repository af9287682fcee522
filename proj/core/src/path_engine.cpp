#include "longcycles/path_engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace longcycles {
namespace {

struct Roles {
  VertexSet source;
  VertexSet target;
  VertexSet interior;  // vertices allowed strictly inside a path
};

Roles roles_of(const Graph& g, const PathQuery& q) {
  if (q.source.intersects(q.target)) throw PathQueryError("path query source and target intersect");
  const VertexSet alive = q.mask.surviving(g);
  Roles r;
  r.source = q.source & alive;
  r.target = q.target & alive;
  r.interior = alive - q.forbidden_internal - q.source - q.target;
  return r;
}

// Unit-capacity flow on the vertex-split network, stopped at value `limit`.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, const Roles& roles) : n_(g.order()), head_(2 * g.order() + 2, -1) {
    const VertexSet passable = roles.source | roles.target | roles.interior;
    for (Vertex v : passable) add_arc(in(v), out(v));
    for (Vertex a : roles.source) add_arc(kSource, in(a));
    for (Vertex b : roles.target) add_arc(out(b), kSink);
    for (Vertex u : passable) {
      // Arcs leave sources and interior vertices, enter interior and targets.
      if (roles.target.contains(u)) continue;
      for (Vertex v : g.adjacency(u)) {
        if (roles.interior.contains(v) || roles.target.contains(v)) add_arc(out(u), in(v));
      }
    }
  }

  int run(int limit) {
    int value = 0;
    while (value < limit && augment()) ++value;
    return value;
  }

  // Vertex sequences of the flow paths, ordered by start vertex.
  std::vector<PathWitness> paths() const {
    std::vector<PathWitness> found;
    for (int e = head_[kSource]; e >= 0; e = arcs_[e].next) {
      if (arcs_[e].flow <= 0) continue;
      PathWitness p;
      int node = arcs_[e].to;
      while (node != kSink) {
        const Vertex v = (node - 2) / 2;
        p.vertices.push_back(v);
        const int o = out(v);
        int step = -1;
        for (int f = head_[o]; f >= 0; f = arcs_[f].next) {
          if (arcs_[f].cap > 0 && arcs_[f].flow > 0) {
            step = arcs_[f].to;
            break;
          }
        }
        node = step;
      }
      found.push_back(std::move(p));
    }
    std::sort(found.begin(), found.end(),
              [](const PathWitness& a, const PathWitness& b) { return a.vertices < b.vertices; });
    return found;
  }

 private:
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;
  static int in(Vertex v) { return 2 + 2 * v; }
  static int out(Vertex v) { return 3 + 2 * v; }

  struct Arc {
    int to;
    int cap;
    int flow;
    int next;
  };

  void add_arc(int from, int to) {
    arcs_.push_back({to, 1, 0, -1});
    arcs_.push_back({from, 0, 0, -1});
    link(from, static_cast<int>(arcs_.size()) - 2);
    link(to, static_cast<int>(arcs_.size()) - 1);
  }
  // Appends to the tail so BFS scans arcs in insertion (ascending id) order.
  void link(int node, int arc) {
    if (head_[node] < 0) {
      head_[node] = arc;
      return;
    }
    int e = head_[node];
    while (arcs_[e].next >= 0) e = arcs_[e].next;
    arcs_[e].next = arc;
  }

  bool augment() {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{kSource};
    seen[kSource] = 1;
    while (!queue.empty() && !seen[kSink]) {
      const int node = queue.front();
      queue.pop_front();
      for (int e = head_[node]; e >= 0; e = arcs_[e].next) {
        const int to = arcs_[e].to;
        if (seen[to] || arcs_[e].cap - arcs_[e].flow <= 0) continue;
        seen[to] = 1;
        via[to] = e;
        queue.push_back(to);
      }
    }
    if (!seen[kSink]) return false;
    for (int node = kSink; node != kSource;) {
      const int e = via[node];
      arcs_[e].flow += 1;
      arcs_[e ^ 1].flow -= 1;
      node = arcs_[e ^ 1].to;
    }
    return true;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

bool satisfies(const Graph& g, const PathQuery& q, const PathWitness& path) {
  const auto& vs = path.vertices;
  if (vs.size() < 2) return false;
  VertexSet seen;
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order() || seen.contains(v) || q.mask.removes(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  }
  if (!q.source.contains(vs.front()) || !q.target.contains(vs.back())) return false;
  const VertexSet banned = q.forbidden_internal | q.source | q.target;
  return !path.interior().intersects(banned);
}

std::optional<PathWitness> find_path(const Graph& g, const PathQuery& q) {
  const Roles r = roles_of(g, q);
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(g.order(), kInf);
  std::deque<Vertex> queue;
  for (Vertex b : r.target) {
    dist[b] = 0;
    queue.push_back(b);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.adjacency(v)) {
      if (!r.interior.contains(u) || dist[u] != kInf) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  auto step_dist = [&](Vertex u) {
    // Edges from u to the target when u is entered as the next path vertex.
    if (r.target.contains(u)) return 0;
    if (r.interior.contains(u)) return dist[u];
    return kInf;
  };

  Vertex start = -1;
  int best = kInf;
  for (Vertex a : r.source) {
    for (Vertex u : g.adjacency(a)) {
      const int d = step_dist(u);
      if (d != kInf && d + 1 < best) {
        best = d + 1;
        start = a;
      }
    }
  }
  if (start < 0) return std::nullopt;

  PathWitness path{{start}};
  for (int remaining = best; remaining > 0; --remaining) {
    for (Vertex u : g.adjacency(path.back())) {
      const bool ok = remaining == 1 ? r.target.contains(u)
                                     : (r.interior.contains(u) && dist[u] == remaining - 1);
      if (ok) {
        path.vertices.push_back(u);
        break;
      }
    }
  }
  return path;
}

MengerResult two_disjoint_paths_or_cut(const Graph& g, const PathQuery& q) {
  const Roles r = roles_of(g, q);
  SplitFlow flow(g, r);
  const int value = flow.run(2);
  if (value == 0) return NoPath{};
  if (value >= 2) {
    auto paths = flow.paths();
    return TwoPaths{std::move(paths[0]), std::move(paths[1])};
  }

  // Every member of the class passes through any cut vertex, so candidates
  // come from one member; interior vertices are tried before endpoints.
  const PathWitness witness = *find_path(g, q);
  std::vector<Vertex> order = witness.interior().to_vector();
  for (Vertex v : VertexSet{witness.front(), witness.back()}) order.push_back(v);
  for (Vertex z : order) {
    PathQuery without = q;
    without.mask = q.mask.with(z);
    without.source.erase(z);
    without.target.erase(z);
    if (!find_path(g, without)) return CutVertex{z};
  }
  throw std::logic_error("unit max-flow without a separating vertex");
}

PathWitness normalize_chord(const PathWitness& p, const OrientedCycle& c) {
  for (int i = static_cast<int>(p.vertices.size()) - 2; i >= 0; --i) {
    if (c.contains(p.vertices[i])) return {{p.vertices.begin() + i, p.vertices.end()}};
  }
  return p;
}

}  // namespace longcycles
