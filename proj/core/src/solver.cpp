#include "longcycles/solver.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>

namespace longcycles {
namespace {

constexpr std::array<std::pair<Branch, std::string_view>, 32> kBranchNames{{
    {Branch::kNoLongCycle, "no_long_cycle"},
    {Branch::kShortCycle, "short_cycle"},
    {Branch::kFewCycles, "few_cycles"},
    {Branch::kDisjointFromC, "disjoint_from_c"},
    {Branch::kATransversalBlocks, "a_transversal_blocks"},
    {Branch::kAOverlapTransversal, "a_overlap_transversal"},
    {Branch::kATransversalT, "a_transversal_t"},
    {Branch::kA2VInXDy, "a2_v_in_xdy"},
    {Branch::kA2VInYDt, "a2_v_in_ydt"},
    {Branch::kA3Left, "a3_left"},
    {Branch::kA3Right, "a3_right"},
    {Branch::kACutTransversal, "a_cut_transversal"},
    {Branch::kANoPathTransversal, "a_nopath_transversal"},
    {Branch::kBTransversalX, "b_transversal_x"},
    {Branch::kBTransversalBlocks, "b_transversal_blocks"},
    {Branch::kBOverlapTransversal, "b_overlap_transversal"},
    {Branch::kBTransversalW, "b_transversal_w"},
    {Branch::kB1TInXDwVInTDw, "b1_t_in_xdw_v_in_tdw"},
    {Branch::kB1TInXDwVInWDx, "b1_t_in_xdw_v_in_wdx"},
    {Branch::kB1TInWDxVInXDw, "b1_t_in_wdx_v_in_xdw"},
    {Branch::kB1TInWDxVInWDt, "b1_t_in_wdx_v_in_wdt"},
    {Branch::kB2ParallelQPrimeInXDw, "b2_parallel_qprime_in_xdw"},
    {Branch::kB2ParallelQPrimeInWDx, "b2_parallel_qprime_in_wdx"},
    {Branch::kB2CrossingQPrimeInWDx, "b2_crossing_qprime_in_wdx"},
    {Branch::kB2CrossingQPrimeInXDw, "b2_crossing_qprime_in_xdw"},
    {Branch::kB3Crossing, "b3_crossing"},
    {Branch::kB3Parallel, "b3_parallel"},
    {Branch::kBCutTransversal, "b_cut_transversal"},
    {Branch::kBNoPathTransversal, "b_nopath_transversal"},
    {Branch::kDisjointFromD, "disjoint_from_d"},
    {Branch::kAnomalyPair, "anomaly_pair"},
    {Branch::kAnomalyTransversal, "anomaly_transversal"},
}};

using Seq = std::vector<Vertex>;

Seq rev(Seq s) {
  std::reverse(s.begin(), s.end());
  return s;
}

Seq seg(const OrientedCycle& c, Vertex a, Vertex b) { return segment_vertices(c, a, b); }

VertexSet set_of(const Seq& s) { return VertexSet::of(s); }

// Vertices strictly between a and b following the orientation.
Seq open_arc(const OrientedCycle& c, Vertex a, Vertex b) {
  Seq out;
  for (Vertex v = c.next(a); v != b; v = c.next(v)) out.push_back(v);
  return out;
}

// B: the part of C strictly after `after_end` and strictly before `before_start`,
// trimmed by k vertices on each side.
Seq remainder_arc(const OrientedCycle& c, Vertex after_end, Vertex before_start, int k) {
  const Seq gap = open_arc(c, after_end, before_start);
  if (static_cast<int>(gap.size()) <= 2 * k) return {};
  return {gap.begin() + k, gap.end() - k};
}

bool valid_pair(const Graph& g, int ell, const OrientedCycle& a, const OrientedCycle& b) {
  return a.size() >= ell && b.size() >= ell && is_cycle_in(g, a.vertices()) &&
         is_cycle_in(g, b.vertices()) && !a.vertex_set().intersects(b.vertex_set());
}

std::optional<ClaimPair> try_pair(const Graph& g, int ell, const std::vector<Seq>& first,
                                  const std::vector<Seq>& second, Branch branch) {
  try {
    OrientedCycle c1 = assemble_cycle(g, first);
    OrientedCycle c2 = assemble_cycle(g, second);
    if (!valid_pair(g, ell, c1, c2)) return std::nullopt;
    return ClaimPair{std::move(c1), std::move(c2), branch};
  } catch (const AssemblyError&) {
    return std::nullopt;
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

// Largest p in [0, |arc|] such that G - (base u arc[0..p)) still has a long
// cycle. Existence is monotone in p; base itself must admit a long cycle.
int last_feasible_prefix(const Graph& g, int ell, const VertexSet& base, const Seq& arc) {
  auto feasible = [&](int p) {
    VertexSet removed = base;
    for (int i = 0; i < p; ++i) removed.insert(arc[i]);
    return has_long_cycle(g, VertexMask(removed), ell);
  };
  const int size = static_cast<int>(arc.size());
  if (feasible(size)) return size;
  int lo = 0;
  int hi = size;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

bool pairwise_disjoint(const Seq& a, const Seq& b, const Seq& c) {
  const VertexSet sa = set_of(a), sb = set_of(b), sc = set_of(c);
  return static_cast<int>(a.size()) == sa.size() && static_cast<int>(b.size()) == sb.size() &&
         static_cast<int>(c.size()) == sc.size() && !sa.intersects(sb) && !sa.intersects(sc) &&
         !sb.intersects(sc);
}

Certificate fallback_certificate(const Graph& g, int ell, SolveTrace trace) {
  const Budget b = Budget::for_ell(ell);
  Certificate cert{ell, g.order(), Transversal{}, {}};
  if (auto pair = find_disjoint_long_pair_bruteforce(g, ell)) {
    trace.branch = Branch::kAnomalyPair;
    cert.result = DisjointPair{OrientedCycle(pair->first), OrientedCycle(pair->second)};
  } else if (auto x = min_transversal_bruteforce(g, ell, b.value)) {
    trace.branch = Branch::kAnomalyTransversal;
    cert.result = Transversal{*x};
  } else {
    throw std::logic_error("no disjoint pair and no transversal within budget");
  }
  cert.trace = std::move(trace);
  return cert;
}

bool certificate_holds(const Graph& g, const Certificate& cert) {
  if (const auto* pair = std::get_if<DisjointPair>(&cert.result)) {
    return valid_pair(g, cert.ell, pair->first, pair->second);
  }
  const auto& x = std::get<Transversal>(cert.result).vertices;
  return x.size() <= cert.budget() && x.is_subset_of(g.vertices()) && is_transversal(g, cert.ell, x);
}

// State of one run through case A or case B.
class CaseRun {
 public:
  CaseRun(const Graph& g, const Budget& b, const OrientedCycle& c, const DChoice& choice)
      : g_(g), b_(b) {
    tr_.c = c;
    tr_.d = choice.d;
    tr_.cd = choice.cd;
    tr_.x = choice.x;
    tr_.y = choice.y;
  }

  Certificate run_a();
  Certificate run_b();

 private:
  int ell() const { return b_.ell; }

  Certificate transversal(const VertexSet& x, Branch branch) {
    tr_.branch = branch;
    Certificate cert{ell(), g_.order(), Transversal{x}, tr_};
    if (x.size() > b_.value || !is_transversal(g_, ell(), x)) {
      return unexpected("transversal check failed at " + std::string(branch_name(branch)));
    }
    return cert;
  }

  Certificate pair(const ClaimPair& p) {
    tr_.branch = p.branch;
    return {ell(), g_.order(), DisjointPair{p.first, p.second}, tr_};
  }

  // A step the construction rules out occurred. A long cycle avoiding D is
  // itself a certificate; anything else goes to the brute-force fallback.
  Certificate unexpected(const std::string& reason) {
    if (auto other = shortest_long_cycle(g_, VertexMask(tr_.d.vertex_set()), ell())) {
      return pair({tr_.d, OrientedCycle(*other), Branch::kDisjointFromD});
    }
    tr_.anomaly = reason;
    return fallback_certificate(g_, ell(), tr_);
  }

  int pos_d(Vertex v) const { return arc_length(tr_.d, tr_.x, v); }
  int pos_e2(Vertex v) const { return arc_length(tr_.c, tr_.e2.front(), v); }

  // Orders a Menger pair so that the first path's C-end does not precede
  // the second's: returns (Q, Q') with p' before p.
  std::pair<PathWitness, PathWitness> ordered(const PathWitness& a, const PathWitness& b) const {
    return pos_e2(a.front()) > pos_e2(b.front()) ? std::pair{a, b} : std::pair{b, a};
  }

  std::optional<Branch> b1_violation(Vertex v) const;

  const Graph& g_;
  Budget b_;
  SolveTrace tr_;
};

Certificate CaseRun::run_a() {
  tr_.case_kind = CaseKind::kA;
  const OrientedCycle& c = tr_.c;
  const Vertex x = tr_.x;
  const Vertex y = tr_.y;
  const int k = b_.block;

  tr_.x1 = block_preceding(c, x, k);
  tr_.x2 = block_following(c, y, k);
  const VertexSet base = set_of(tr_.x1) | set_of(tr_.x2) | VertexSet{x, y};
  if (!has_long_cycle(g_, VertexMask(base), ell())) return transversal(base, Branch::kATransversalBlocks);

  const Seq rest = remainder_arc(c, y, x, k);
  const int p = last_feasible_prefix(g_, ell(), base, rest);
  if (p == static_cast<int>(rest.size())) {
    return unexpected("a long cycle avoids X1, X2, x, y and B");
  }
  VertexSet prefix = base;
  for (int i = 0; i < p; ++i) prefix.insert(rest[i]);
  tr_.d_prime = first_long_cycle(g_, VertexMask(prefix), ell());
  tr_.x_d_prime = rest[p];
  tr_.x3 = block_preceding(c, tr_.x_d_prime, k);

  const VertexSet blocks = set_of(tr_.x1) | set_of(tr_.x2) | set_of(tr_.x3);
  if (!pairwise_disjoint(tr_.x1, tr_.x2, tr_.x3)) {
    return transversal(blocks | VertexSet{x, y, tr_.x_d_prime}, Branch::kAOverlapTransversal);
  }
  tr_.e2.assign(rest.begin(), rest.begin() + (p - k));
  tr_.e1.assign(rest.begin() + p, rest.end());
  tr_.e3 = seg(c, x, y);

  const VertexSet d_set = tr_.d.vertex_set();
  PathQuery q1_query{set_of(tr_.e1), d_set - VertexSet{x, y},
                     VertexMask(blocks | set_of(tr_.e2) | VertexSet{x, y}), set_of(tr_.e1) | d_set};
  tr_.q1 = find_path(g_, q1_query);
  if (!tr_.q1) return unexpected("no (E1, D - {x, y})-path");
  tr_.s = tr_.q1->front();
  tr_.t = tr_.q1->back();
  if (arc_length(tr_.d, x, y) > arc_length(tr_.d, x, tr_.t)) tr_.d = tr_.d.reversed();

  const VertexSet removed = blocks | VertexSet{x, y, tr_.x_d_prime, tr_.t};
  if (!has_long_cycle(g_, VertexMask(removed), ell())) return transversal(removed, Branch::kATransversalT);

  if (tr_.e2.empty()) return unexpected("E2 is empty but a long cycle survives");
  PathQuery q2_query{set_of(tr_.e2), d_set - VertexSet{x, y, tr_.t}, VertexMask(removed),
                     c.vertex_set() | d_set | tr_.q1->vertex_set()};
  tr_.q2 = find_path(g_, q2_query);
  if (!tr_.q2) return unexpected("no (E2, D - {x, y, t})-path avoiding C and Q1");

  const Vertex v = tr_.q2->back();
  const bool v_in_tdx = arc_length(tr_.d, tr_.t, v) < arc_length(tr_.d, tr_.t, x);
  if (!v_in_tdx) {
    if (auto cp = pair_from_claim_a2(g_, ell(), tr_)) return pair(*cp);
    return unexpected("claim A2 assembly failed");
  }

  Seq tdx = seg(tr_.d, tr_.t, x);
  const VertexSet target = set_of(tdx) - VertexSet{x, tr_.t};
  PathQuery menger{set_of(tr_.e2), target, VertexMask(removed),
                   d_set | set_of(tr_.e1) | tr_.q1->vertex_set()};
  const MengerResult result = two_disjoint_paths_or_cut(g_, menger);
  if (const auto* two = std::get_if<TwoPaths>(&result)) {
    auto [qa, qb] = ordered(two->first, two->second);
    tr_.q = qa;
    tr_.q_prime = qb;
    if (auto cp = pair_from_claim_a3(g_, ell(), tr_, qa, qb)) return pair(*cp);
    return unexpected("claim A3 assembly failed");
  }
  if (const auto* cut = std::get_if<CutVertex>(&result)) {
    tr_.z = cut->z;
    return transversal(removed | VertexSet{cut->z}, Branch::kACutTransversal);
  }
  return transversal(removed, Branch::kANoPathTransversal);
}

std::optional<Branch> CaseRun::b1_violation(Vertex v) const {
  const int pt = pos_d(tr_.t);
  const int pw = pos_d(tr_.w);
  const int pv = pos_d(v);
  if (pt < pw) {
    if (pv <= pt) return std::nullopt;
    return pv < pw ? Branch::kB1TInXDwVInTDw : Branch::kB1TInXDwVInWDx;
  }
  if (pv >= pt) return std::nullopt;
  return pv < pw ? Branch::kB1TInWDxVInXDw : Branch::kB1TInWDxVInWDt;
}

Certificate CaseRun::run_b() {
  tr_.case_kind = CaseKind::kB;
  const Vertex x = tr_.x;
  const int k = b_.block;
  if (!has_long_cycle(g_, VertexMask(VertexSet{x}), ell())) {
    return transversal(VertexSet{x}, Branch::kBTransversalX);
  }

  // (C, D)-path in G - x whose C-end is nearest to x.
  const VertexSet c_set = tr_.c.vertex_set();
  const VertexSet d_set = tr_.d.vertex_set();
  Seq by_distance = (c_set - VertexSet{x}).to_vector();
  std::stable_sort(by_distance.begin(), by_distance.end(), [&](Vertex a, Vertex b) {
    return dist_on_cycle(tr_.c, x, a) < dist_on_cycle(tr_.c, x, b);
  });
  for (Vertex candidate : by_distance) {
    PathQuery q{VertexSet{candidate}, d_set - VertexSet{x}, VertexMask(VertexSet{x}), c_set | d_set};
    if ((tr_.p0 = find_path(g_, q))) break;
  }
  if (!tr_.p0) return unexpected("no (C, D)-path avoiding x");
  const Vertex y = tr_.y = tr_.p0->front();
  const Vertex w = tr_.w = tr_.p0->back();
  tr_.c = reorient_shortest_first(tr_.c, x, y);
  const OrientedCycle& c = tr_.c;

  tr_.x1 = block_preceding(c, x, k);
  tr_.x2 = block_following(c, y, k);
  tr_.e3 = seg(c, x, y);
  const VertexSet base = set_of(tr_.x1) | set_of(tr_.x2) | VertexSet{x, y, w};
  if (!has_long_cycle(g_, VertexMask(base), ell())) return transversal(base, Branch::kBTransversalBlocks);

  const Seq rest = remainder_arc(c, y, x, k);
  const int p = last_feasible_prefix(g_, ell(), base, rest);
  if (p == static_cast<int>(rest.size())) {
    return unexpected("a long cycle meets C only inside xCy'");
  }
  VertexSet prefix = base;
  for (int i = 0; i < p; ++i) prefix.insert(rest[i]);
  tr_.d_prime = first_long_cycle(g_, VertexMask(prefix), ell());
  tr_.x_d_prime = rest[p];
  tr_.x3 = block_preceding(c, tr_.x_d_prime, k);

  const VertexSet blocks = set_of(tr_.x1) | set_of(tr_.x2) | set_of(tr_.x3);
  if (!pairwise_disjoint(tr_.x1, tr_.x2, tr_.x3)) {
    return transversal(blocks | VertexSet{x, y, w, tr_.x_d_prime}, Branch::kBOverlapTransversal);
  }
  tr_.e2.assign(rest.begin(), rest.begin() + (p - k));
  tr_.e1.assign(rest.begin() + p, rest.end());

  const VertexSet p0_set = tr_.p0->vertex_set();
  PathQuery q1_query{set_of(tr_.e1), d_set - VertexSet{x, w},
                     VertexMask(blocks | set_of(tr_.e2) | VertexSet{x, y, w}), c_set | d_set | p0_set};
  tr_.q1 = find_path(g_, q1_query);
  if (!tr_.q1) return unexpected("no (E1, D - {x, w})-path avoiding C, D and P0");
  tr_.s = tr_.q1->front();
  tr_.t = tr_.q1->back();

  const VertexSet removed = blocks | VertexSet{x, y, tr_.x_d_prime, w};
  if (!has_long_cycle(g_, VertexMask(removed), ell())) return transversal(removed, Branch::kBTransversalW);

  if (tr_.e2.empty()) return unexpected("E2 is empty but a long cycle survives");
  PathQuery paths{set_of(tr_.e2), d_set - VertexSet{x, w}, VertexMask(removed),
                  c_set | d_set | p0_set | tr_.q1->vertex_set()};
  tr_.q2 = find_path(g_, paths);
  if (!tr_.q2) return unexpected("no (E2, D - {x, w})-path avoiding C, D, P0 and Q1");
  if (b1_violation(tr_.q2->back())) {
    if (auto cp = pair_from_claim_b1(g_, ell(), tr_, *tr_.q2)) return pair(*cp);
    return unexpected("claim B1 assembly failed");
  }

  const MengerResult result = two_disjoint_paths_or_cut(g_, paths);
  if (const auto* two = std::get_if<TwoPaths>(&result)) {
    auto [qa, qb] = ordered(two->first, two->second);
    tr_.q = qa;
    tr_.q_prime = qb;
    if (auto cp = pair_from_claim_b2(g_, ell(), tr_, qa, qb)) return pair(*cp);
    if (auto cp = pair_from_claim_b3(g_, ell(), tr_, qa, qb)) return pair(*cp);
    // Either Menger path may itself break the endpoint rule checked on Q2.
    for (const PathWitness* path : {&qa, &qb}) {
      if (!b1_violation(path->back())) continue;
      if (auto cp = pair_from_claim_b1(g_, ell(), tr_, *path)) return pair(*cp);
    }
    return unexpected("claims B2/B3 assembly failed");
  }
  if (const auto* cut = std::get_if<CutVertex>(&result)) {
    tr_.z = cut->z;
    return transversal(removed | VertexSet{cut->z}, Branch::kBCutTransversal);
  }
  return transversal(removed, Branch::kBNoPathTransversal);
}

}  // namespace

Budget Budget::for_ell(int ell) {
  if (ell < 3) throw std::invalid_argument("ell must be at least 3");
  return {ell, (3 * ell + 7) / 2, (ell + 1) / 2 - 1};
}

std::string_view branch_name(Branch b) {
  for (const auto& [branch, name] : kBranchNames) {
    if (branch == b) return name;
  }
  return "unknown";
}

std::optional<Branch> branch_from_name(std::string_view name) {
  for (const auto& [branch, n] : kBranchNames) {
    if (n == name) return branch;
  }
  return std::nullopt;
}

OrientedCycle assemble_cycle(const Graph& g, std::span<const std::vector<Vertex>> parts) {
  if (parts.empty()) throw AssemblyError("no parts to assemble");
  Seq walk;
  for (const Seq& part : parts) {
    if (part.empty()) throw AssemblyError("empty part");
    if (walk.empty()) {
      walk = part;
      continue;
    }
    if (walk.back() != part.front()) throw AssemblyError("parts do not share a stitching endpoint");
    walk.insert(walk.end(), part.begin() + 1, part.end());
  }
  if (walk.size() < 2 || walk.back() != walk.front()) throw AssemblyError("walk is not closed");
  walk.pop_back();
  if (!is_cycle_in(g, walk)) throw AssemblyError("closed walk is not a simple cycle of the graph");
  return OrientedCycle(std::move(walk));
}

std::optional<Certificate> few_cycles_shortcut(const Graph& g, int ell, const Budget& b) {
  const auto cycles = enumerate_long_cycles(g, VertexMask(), ell, b.value + 1);
  if (static_cast<int>(cycles.size()) > b.value) return std::nullopt;
  VertexSet x;
  for (const CycleWitness& c : cycles) x.insert(c.vertices.front());
  Certificate cert{ell, g.order(), Transversal{x}, {}};
  cert.trace.branch = Branch::kFewCycles;
  return cert;
}

std::optional<DChoice> choose_d(const Graph& g, int ell, const OrientedCycle& c) {
  const int len = c.size();
  const CycleWitness c_canon = c.canonical();
  for (int size = 1; size <= len; ++size) {
    std::optional<CycleWitness> best;
    const int starts = size == len ? 1 : len;
    for (int i = 0; i < starts; ++i) {
      VertexSet outside = c.vertex_set();
      for (int j = 0; j < size; ++j) outside.erase(c.at(i + j));
      auto cand = first_long_cycle(g, VertexMask(outside), ell, &c_canon);
      if (cand && (!best || *cand < *best)) best = std::move(cand);
    }
    if (best) {
      DChoice choice;
      choice.d = OrientedCycle(*best);
      choice.cd = shortest_containing_segment(c, c.vertex_set() & best->vertex_set());
      choice.x = choice.cd.start;
      choice.y = choice.cd.end;
      return choice;
    }
  }
  return std::nullopt;
}

Certificate case_a(const Graph& g, const Budget& b, const OrientedCycle& c, const DChoice& choice) {
  return CaseRun(g, b, c, choice).run_a();
}

Certificate case_b(const Graph& g, const Budget& b, const OrientedCycle& c, const DChoice& choice) {
  return CaseRun(g, b, c, choice).run_b();
}

std::optional<ClaimPair> pair_from_claim_a2(const Graph& g, int ell, const SolveTrace& tr) {
  if (!tr.q1 || !tr.q2) return std::nullopt;
  const OrientedCycle& c = tr.c;
  const OrientedCycle& d = tr.d;
  const Vertex u = tr.q2->front();
  const Vertex v = tr.q2->back();
  const std::vector<Seq> c1 = {seg(c, tr.s, tr.x), rev(seg(d, tr.t, tr.x)), rev(tr.q1->vertices)};
  const int pv = arc_length(d, tr.x, v);
  if (pv > 0 && pv < arc_length(d, tr.x, tr.y)) {
    return try_pair(g, ell, c1, {seg(c, tr.y, u), tr.q2->vertices, seg(d, v, tr.y)}, Branch::kA2VInXDy);
  }
  if (pv > arc_length(d, tr.x, tr.y) && pv < arc_length(d, tr.x, tr.t)) {
    return try_pair(g, ell, c1, {seg(c, tr.y, u), tr.q2->vertices, rev(seg(d, tr.y, v))},
                    Branch::kA2VInYDt);
  }
  return std::nullopt;
}

std::optional<ClaimPair> pair_from_claim_a3(const Graph& g, int ell, const SolveTrace& tr,
                                            const PathWitness& q, const PathWitness& q_prime) {
  if (!tr.q1) return std::nullopt;
  const OrientedCycle& c = tr.c;
  const OrientedCycle& d = tr.d;
  const Vertex p = q.front(), qe = q.back();
  const Vertex pp = q_prime.front(), qpe = q_prime.back();
  auto left = [&] {
    return try_pair(g, ell, {seg(c, p, tr.x), rev(seg(d, qe, tr.x)), rev(q.vertices)},
                    {seg(c, tr.y, pp), q_prime.vertices, rev(seg(d, tr.y, qpe))}, Branch::kA3Left);
  };
  auto right = [&] {
    return try_pair(g, ell, {seg(c, p, tr.s), tr.q1->vertices, seg(d, tr.t, qe), rev(q.vertices)},
                    {seg(c, tr.y, pp), q_prime.vertices, seg(d, qpe, tr.y)}, Branch::kA3Right);
  };
  // Left when q' comes before q on tDx.
  const bool left_first = arc_length(d, tr.t, qpe) < arc_length(d, tr.t, qe);
  auto first = left_first ? left() : right();
  if (first) return first;
  return left_first ? right() : left();
}

std::optional<ClaimPair> pair_from_claim_b1(const Graph& g, int ell, const SolveTrace& tr,
                                            const PathWitness& q2) {
  if (!tr.q1 || !tr.p0) return std::nullopt;
  const OrientedCycle& c = tr.c;
  const OrientedCycle& d = tr.d;
  const Vertex u = q2.front();
  const Vertex v = q2.back();
  auto pos = [&](Vertex a) { return arc_length(d, tr.x, a); };
  const int pt = pos(tr.t), pw = pos(tr.w), pv = pos(v);
  const Seq back_p0 = rev(tr.p0->vertices);
  const Seq back_q1 = rev(tr.q1->vertices);
  if (pt < pw) {
    const std::vector<Seq> c1 = {seg(c, tr.s, tr.x), seg(d, tr.x, tr.t), back_q1};
    if (pv > pt && pv < pw) {
      return try_pair(g, ell, c1, {seg(c, tr.y, u), q2.vertices, seg(d, v, tr.w), back_p0},
                      Branch::kB1TInXDwVInTDw);
    }
    if (pv > pw) {
      return try_pair(g, ell, c1, {seg(c, tr.y, u), q2.vertices, rev(seg(d, tr.w, v)), back_p0},
                      Branch::kB1TInXDwVInWDx);
    }
    return std::nullopt;
  }
  const std::vector<Seq> c3 = {seg(c, tr.s, tr.x), rev(seg(d, tr.t, tr.x)), back_q1};
  if (pv > 0 && pv < pw) {
    return try_pair(g, ell, c3, {seg(c, tr.y, u), q2.vertices, seg(d, v, tr.w), back_p0},
                    Branch::kB1TInWDxVInXDw);
  }
  if (pv > pw && pv < pt) {
    return try_pair(g, ell, c3, {seg(c, tr.y, u), q2.vertices, rev(seg(d, tr.w, v)), back_p0},
                    Branch::kB1TInWDxVInWDt);
  }
  return std::nullopt;
}

std::optional<ClaimPair> pair_from_claim_b2(const Graph& g, int ell, const SolveTrace& tr,
                                            const PathWitness& q, const PathWitness& q_prime) {
  if (!tr.p0) return std::nullopt;
  const OrientedCycle& c = tr.c;
  const OrientedCycle& d = tr.d;
  auto pos = [&](Vertex a) { return arc_length(d, tr.x, a); };
  const Vertex p = q.front(), qe = q.back();
  const Vertex pp = q_prime.front(), qpe = q_prime.back();
  const int pw = pos(tr.w), pq = pos(qe), pqp = pos(qpe);
  const Seq back_p0 = rev(tr.p0->vertices);
  // Parallel: the order of p', p along C agrees with q', q along D from x.
  if (pqp < pq) {
    if (pq < pw) return std::nullopt;  // both in xDw: conforming
    const std::vector<Seq> c1 = {seg(c, p, tr.x), rev(seg(d, qe, tr.x)), rev(q.vertices)};
    if (pqp < pw) {
      return try_pair(g, ell, c1, {seg(c, tr.y, pp), q_prime.vertices, seg(d, qpe, tr.w), back_p0},
                      Branch::kB2ParallelQPrimeInXDw);
    }
    return try_pair(g, ell, c1, {seg(c, tr.y, pp), q_prime.vertices, rev(seg(d, tr.w, qpe)), back_p0},
                    Branch::kB2ParallelQPrimeInWDx);
  }
  if (pq > pw) return std::nullopt;  // both in wDx: conforming
  const std::vector<Seq> c3 = {seg(c, p, tr.x), seg(d, tr.x, qe), rev(q.vertices)};
  if (pqp > pw) {
    return try_pair(g, ell, c3, {seg(c, tr.y, pp), q_prime.vertices, rev(seg(d, tr.w, qpe)), back_p0},
                    Branch::kB2CrossingQPrimeInWDx);
  }
  return try_pair(g, ell, c3, {seg(c, tr.y, pp), q_prime.vertices, seg(d, qpe, tr.w), back_p0},
                  Branch::kB2CrossingQPrimeInXDw);
}

std::optional<ClaimPair> pair_from_claim_b3(const Graph& g, int ell, const SolveTrace& tr,
                                            const PathWitness& q, const PathWitness& q_prime) {
  if (!tr.q1) return std::nullopt;
  const OrientedCycle& c = tr.c;
  const OrientedCycle& d = tr.d;
  auto pos = [&](Vertex a) { return arc_length(d, tr.x, a); };
  const Vertex p = q.front(), qe = q.back();
  const Vertex pp = q_prime.front(), qpe = q_prime.back();
  auto crossing = [&] {
    return try_pair(g, ell, {seg(c, p, tr.s), tr.q1->vertices, seg(d, tr.t, qe), rev(q.vertices)},
                    {seg(c, tr.x, pp), q_prime.vertices, seg(d, qpe, tr.x)}, Branch::kB3Crossing);
  };
  auto parallel = [&] {
    return try_pair(g, ell, {seg(c, p, tr.s), tr.q1->vertices, rev(seg(d, qe, tr.t)), rev(q.vertices)},
                    {seg(c, tr.x, pp), q_prime.vertices, rev(seg(d, tr.x, qpe))}, Branch::kB3Parallel);
  };
  const bool is_parallel = pos(qpe) < pos(qe);
  auto first = is_parallel ? parallel() : crossing();
  if (first) return first;
  return is_parallel ? crossing() : parallel();
}

std::optional<int> shortest_special_path(const Graph& g, const SolveTrace& tr) {
  if (tr.case_kind != CaseKind::kA || tr.c.size() == 0) return std::nullopt;
  std::vector<int> label(g.order(), 0);
  for (Vertex v : tr.e1) label[v] = 1;
  for (Vertex v : tr.e2) label[v] = 2;
  for (Vertex v : tr.e3) label[v] = 3;
  const VertexSet on_c = tr.c.vertex_set();
  std::optional<int> best;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (label[start] == 0) continue;
    // BFS from start through vertices off C.
    std::vector<int> dist(g.order(), -1);
    std::deque<Vertex> queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : g.adjacency(v)) {
        if (on_c.contains(u)) {
          if (label[u] != 0 && label[u] != label[start] && u != start) {
            const int len = dist[v] + 1;
            if (!best || len < *best) best = len;
          }
          continue;
        }
        if (dist[u] >= 0) continue;
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return best;
}

Certificate solve(const Graph& g, int ell, const SolveOptions& options) {
  const Budget b = Budget::for_ell(ell);
  auto finish = [&](Certificate cert) {
    if (!cert.trace.anomaly.empty() && options.on_anomaly) options.on_anomaly(cert.trace);
    if (certificate_holds(g, cert)) return cert;
    cert.trace.anomaly = "final certificate check failed at " + std::string(branch_name(cert.trace.branch));
    if (options.on_anomaly) options.on_anomaly(cert.trace);
    return fallback_certificate(g, ell, cert.trace);
  };

  Certificate cert{ell, g.order(), Transversal{}, {}};
  const auto c = shortest_long_cycle(g, VertexMask(), ell);
  if (!c) {
    cert.trace.branch = Branch::kNoLongCycle;
    return finish(std::move(cert));
  }
  const OrientedCycle oriented(*c);
  cert.trace.c = oriented;
  if (auto other = shortest_long_cycle(g, VertexMask(c->vertex_set()), ell)) {
    cert.result = DisjointPair{oriented, OrientedCycle(*other)};
    cert.trace.branch = Branch::kDisjointFromC;
    return finish(std::move(cert));
  }
  if (c->length() <= b.value) {
    cert.result = Transversal{c->vertex_set()};
    cert.trace.branch = Branch::kShortCycle;
    return finish(std::move(cert));
  }
  if (auto shortcut = few_cycles_shortcut(g, ell, b)) {
    shortcut->trace.c = oriented;
    return finish(std::move(*shortcut));
  }
  const auto choice = choose_d(g, ell, oriented);
  if (!choice) {
    cert.trace.anomaly = "fewer than two long cycles after the shortcut";
    return finish(fallback_certificate(g, ell, cert.trace));
  }
  return finish(choice->x != choice->y ? case_a(g, b, oriented, *choice)
                                       : case_b(g, b, oriented, *choice));
}

}  // namespace longcycles
