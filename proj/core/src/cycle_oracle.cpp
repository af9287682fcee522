#include "longcycles/cycle_oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace longcycles {
namespace {

// Exhaustive DFS over canonical cycles whose vertex count lies in
// [min_len, max_len], restricted to `allowed`. Cycles are produced in
// lexicographic order of their canonical sequences: start vertex ascending
// (the start is the cycle minimum), neighbors ascending, closure checked
// before extension. The visitor returns true to stop the search.
template <typename Visit>
class CycleSearch {
 public:
  CycleSearch(const Graph& g, const VertexSet& allowed, int min_len, int max_len, Visit& visit)
      : g_(g), allowed_(allowed), min_len_(std::max(min_len, 3)), max_len_(max_len), visit_(visit) {}

  bool run() {
    if (max_len_ < min_len_) return false;
    VertexSet remaining = allowed_;
    for (Vertex s : allowed_) {
      remaining.erase(s);
      if ((g_.neighbors(s) & remaining).size() < 2) continue;
      start_ = s;
      pool_ = remaining;
      path_.assign(1, s);
      on_path_ = VertexSet{s};
      if (extend()) return true;
    }
    return false;
  }

 private:
  bool extend() {
    const Vertex end = path_.back();
    const int k = static_cast<int>(path_.size());
    if (k >= min_len_ && g_.adjacent(end, start_) && path_[1] < end) {
      if (visit_(path_)) return true;
    }
    if (k == max_len_) return false;
    const VertexSet avail = pool_ - on_path_;
    if (!feasible(end, k, avail)) return false;
    for (Vertex next : g_.adjacency(end)) {
      if (!avail.contains(next)) continue;
      path_.push_back(next);
      on_path_.insert(next);
      const bool stop = extend();
      on_path_.erase(next);
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  // Can the current path still close into a cycle within the length window?
  bool feasible(Vertex end, int k, const VertexSet& avail) const {
    VertexSet targets;
    for (Vertex v : g_.neighbors(start_) & avail) {
      // Canonical orientation: the closing vertex must exceed path_[1].
      if (k < 2 || v > path_[1]) targets.insert(v);
    }
    if (targets.empty()) return false;
    VertexSet reached;
    VertexSet frontier{end};
    int layer = 0;
    int first_hit = -1;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g_.neighbors(v);
      next &= avail;
      next -= reached;
      if (next.empty()) break;
      ++layer;
      reached |= next;
      if (first_hit < 0 && next.intersects(targets)) {
        first_hit = layer;
        if (k + first_hit > max_len_) return false;
      }
      frontier = next;
    }
    if (first_hit < 0) return false;
    return k + reached.size() >= min_len_;
  }

  const Graph& g_;
  VertexSet allowed_;
  int min_len_;
  int max_len_;
  Visit& visit_;
  Vertex start_ = 0;
  VertexSet pool_;
  std::vector<Vertex> path_;
  VertexSet on_path_;
};

template <typename Visit>
bool search_cycles(const Graph& g, const VertexSet& allowed, int min_len, int max_len, Visit visit) {
  CycleSearch<Visit> search(g, allowed, min_len, max_len, visit);
  return search.run();
}

// Biconnected blocks of g restricted to `alive` (Hopcroft-Tarjan lowpoints).
class BlockFinder {
 public:
  BlockFinder(const Graph& g, const VertexSet& alive)
      : g_(g), alive_(alive), disc_(g.order(), -1), low_(g.order(), 0) {}

  std::vector<VertexSet> blocks() {
    for (Vertex v : alive_) {
      if (disc_[v] < 0) visit(v, -1);
    }
    return std::move(blocks_);
  }

 private:
  void visit(Vertex v, Vertex parent) {
    disc_[v] = low_[v] = timer_++;
    stack_.push_back(v);
    for (Vertex w : g_.adjacency(v)) {
      if (!alive_.contains(w)) continue;
      if (disc_[w] < 0) {
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          VertexSet block{v};
          while (true) {
            const Vertex u = stack_.back();
            stack_.pop_back();
            block.insert(u);
            if (u == w) break;
          }
          blocks_.push_back(block);
        }
      } else if (w != parent) {
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  const Graph& g_;
  VertexSet alive_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<Vertex> stack_;
  std::vector<VertexSet> blocks_;
  int timer_ = 0;
};

std::optional<CycleWitness> first_in_window(const Graph& g, const VertexSet& allowed, int min_len,
                                            int max_len, const CycleWitness* skip) {
  std::optional<CycleWitness> found;
  search_cycles(g, allowed, min_len, max_len, [&](const std::vector<Vertex>& path) {
    if (skip != nullptr && skip->vertices == path) return false;
    found = CycleWitness{path};
    return true;
  });
  return found;
}

}  // namespace

CycleWitness canonical_cycle(std::span<const Vertex> seq) {
  const int n = static_cast<int>(seq.size());
  if (n == 0) return {};
  const int lo = static_cast<int>(std::min_element(seq.begin(), seq.end()) - seq.begin());
  const bool forward = n < 3 || seq[(lo + 1) % n] < seq[(lo + n - 1) % n];
  CycleWitness out;
  out.vertices.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.vertices.push_back(forward ? seq[(lo + i) % n] : seq[(lo - i + n) % n]);
  }
  return out;
}

bool is_cycle_in(const Graph& g, std::span<const Vertex> seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 3) return false;
  VertexSet seen;
  for (Vertex v : seq) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < n; ++i) {
    if (!g.adjacent(seq[i], seq[(i + 1) % n])) return false;
  }
  return true;
}

VertexSet long_cycle_support(const Graph& g, const VertexMask& mask, int ell) {
  // Strip to the 2-core first; tree-like parts carry no cycles.
  VertexSet alive = mask.surviving(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : alive) {
      if ((g.neighbors(v) & alive).size() <= 1) {
        alive.erase(v);
        changed = true;
      }
    }
  }
  VertexSet support;
  for (const VertexSet& block : BlockFinder(g, alive).blocks()) {
    if (block.size() >= std::max(ell, 3)) support |= block;
  }
  return support;
}

bool has_long_cycle(const Graph& g, const VertexMask& mask, int ell) {
  const VertexSet support = long_cycle_support(g, mask, ell);
  if (support.empty()) return false;
  return search_cycles(g, support, ell, support.size(), [](const std::vector<Vertex>&) { return true; });
}

std::optional<CycleWitness> shortest_long_cycle(const Graph& g, const VertexMask& mask, int ell) {
  const VertexSet support = long_cycle_support(g, mask, ell);
  if (support.empty()) return std::nullopt;
  if (!search_cycles(g, support, ell, support.size(), [](const std::vector<Vertex>&) { return true; })) {
    return std::nullopt;
  }
  for (int len = std::max(ell, 3); len <= support.size(); ++len) {
    if (auto c = first_in_window(g, support, len, len, nullptr)) return c;
  }
  return std::nullopt;
}

std::optional<CycleWitness> first_long_cycle(const Graph& g, const VertexMask& mask, int ell,
                                             const CycleWitness* skip) {
  const VertexSet support = long_cycle_support(g, mask, ell);
  if (support.empty()) return std::nullopt;
  return first_in_window(g, support, ell, support.size(), skip);
}

std::vector<CycleWitness> enumerate_long_cycles(const Graph& g, const VertexMask& mask, int ell,
                                                int cap) {
  std::vector<CycleWitness> out;
  if (cap < 1) return out;
  const VertexSet support = long_cycle_support(g, mask, ell);
  if (support.empty()) return out;
  search_cycles(g, support, ell, support.size(), [&](const std::vector<Vertex>& path) {
    out.push_back(CycleWitness{path});
    return static_cast<int>(out.size()) >= cap;
  });
  return out;
}

bool is_transversal(const Graph& g, int ell, const VertexSet& x) {
  return !has_long_cycle(g, VertexMask(x), ell);
}

std::optional<VertexSet> min_transversal_bruteforce(const Graph& g, int ell, int budget) {
  if (budget < 0) return std::nullopt;
  // A minimum transversal never contains a vertex that lies on no long cycle,
  // so the search ranges over the support only.
  const std::vector<Vertex> candidates = long_cycle_support(g, VertexMask(), ell).to_vector();
  if (candidates.empty()) return VertexSet{};

  // Greedy upper bound: hit the current shortest long cycle at its
  // highest-degree vertex until none remains.
  VertexSet greedy;
  while (auto c = shortest_long_cycle(g, VertexMask(greedy), ell)) {
    Vertex pick = c->vertices.front();
    int best = -1;
    for (Vertex v : c->vertices) {
      const int d = (g.neighbors(v) - greedy).size();
      if (d > best || (d == best && v < pick)) {
        best = d;
        pick = v;
      }
    }
    greedy.insert(pick);
  }

  const int limit = std::min({budget, greedy.size(), static_cast<int>(candidates.size())});
  const int m = static_cast<int>(candidates.size());
  for (int size = 0; size <= limit; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet x;
      for (int i : idx) x.insert(candidates[i]);
      if (is_transversal(g, ell, x)) return x;
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<CycleWitness, CycleWitness>> find_disjoint_long_pair_bruteforce(
    const Graph& g, int ell) {
  const VertexSet support = long_cycle_support(g, VertexMask(), ell);
  std::optional<std::pair<CycleWitness, CycleWitness>> result;
  std::unordered_set<VertexSet, VertexSetHash> tried;
  // A disjoint pair has a member of length at most |support| / 2.
  for (int len = std::max(ell, 3); 2 * len <= support.size(); ++len) {
    search_cycles(g, support, len, len, [&](const std::vector<Vertex>& path) {
      const VertexSet used = VertexSet::of(path);
      if (!tried.insert(used).second) return false;
      if (auto other = shortest_long_cycle(g, VertexMask(used), ell)) {
        result.emplace(CycleWitness{path}, std::move(*other));
        return true;
      }
      return false;
    });
    if (result) break;
  }
  return result;
}

}  // namespace longcycles
