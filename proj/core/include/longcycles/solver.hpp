#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "longcycles/cycle_geometry.hpp"
#include "longcycles/cycle_oracle.hpp"
#include "longcycles/graph.hpp"
#include "longcycles/path_engine.hpp"

namespace longcycles {

// Transversal size guaranteed by the construction, and the block size used
// to carve up the shortest long cycle.
struct Budget {
  int ell = 3;
  int value = 8;  // floor((3 ell + 7) / 2)
  int block = 1;  // ceil(ell / 2) - 1

  static Budget for_ell(int ell);
};

// Which step of the construction produced the certificate.
enum class Branch {
  kNoLongCycle,
  kShortCycle,        // |C| within budget: V(C) hits every long cycle
  kFewCycles,         // one vertex per long cycle
  kDisjointFromC,
  // x != y
  kATransversalBlocks,  // X1 u X2 u {x, y}
  kAOverlapTransversal,
  kATransversalT,  // X1 u X2 u X3 u {x, y, x_D', t}
  kA2VInXDy,
  kA2VInYDt,
  kA3Left,   // C1 = pCx u pQq u qDx
  kA3Right,  // C1 = pCs u sQ1t u pQq u tDq
  kACutTransversal,
  kANoPathTransversal,
  // x == y
  kBTransversalX,
  kBTransversalBlocks,  // X1 u X2 u {x, y', w}
  kBOverlapTransversal,
  kBTransversalW,  // X1 u X2 u X3 u {x, y', x_D', w}
  kB1TInXDwVInTDw,
  kB1TInXDwVInWDx,
  kB1TInWDxVInXDw,
  kB1TInWDxVInWDt,
  kB2ParallelQPrimeInXDw,
  kB2ParallelQPrimeInWDx,
  kB2CrossingQPrimeInWDx,
  kB2CrossingQPrimeInXDw,
  kB3Crossing,
  kB3Parallel,
  kBCutTransversal,
  kBNoPathTransversal,
  // A long cycle avoiding D turned up where the construction expected none.
  kDisjointFromD,
  kAnomalyPair,
  kAnomalyTransversal,
};

std::string_view branch_name(Branch b);
std::optional<Branch> branch_from_name(std::string_view name);

enum class CaseKind { kNone, kA, kB };

// Every choice made on the way to the certificate. Fields not reached stay empty.
struct SolveTrace {
  Branch branch = Branch::kNoLongCycle;
  CaseKind case_kind = CaseKind::kNone;
  OrientedCycle c;  // orientation in force at the end of the run
  OrientedCycle d;  // case A: oriented so x, y, t appear in this order
  Segment cd;
  Vertex x = -1;
  Vertex y = -1;  // case B: y'
  Vertex w = -1;
  std::vector<Vertex> x1, x2, x3;
  std::vector<Vertex> e1, e2, e3;  // case B: e3 holds A = xCy'
  std::optional<CycleWitness> d_prime;
  Vertex x_d_prime = -1;
  std::optional<PathWitness> p0, q1, q2, q, q_prime;
  Vertex s = -1;
  Vertex t = -1;
  Vertex z = -1;
  std::string anomaly;  // empty unless the brute-force fallback ran

  friend bool operator==(const SolveTrace&, const SolveTrace&) = default;
};

struct Transversal {
  VertexSet vertices;
  friend bool operator==(const Transversal&, const Transversal&) = default;
};
struct DisjointPair {
  OrientedCycle first;
  OrientedCycle second;
  friend bool operator==(const DisjointPair&, const DisjointPair&) = default;
};

struct Certificate {
  int ell = 3;
  int n = 0;
  std::variant<Transversal, DisjointPair> result;
  SolveTrace trace;

  [[nodiscard]] bool is_pair() const { return std::holds_alternative<DisjointPair>(result); }
  [[nodiscard]] int budget() const { return Budget::for_ell(ell).value; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct SolveOptions {
  // Called with the trace whenever the brute-force fallback is taken.
  std::function<void(const SolveTrace&)> on_anomaly;
};

// Always returns a valid certificate: two disjoint cycles of length >= ell,
// or a transversal of size <= Budget::for_ell(ell).value.
Certificate solve(const Graph& g, int ell, const SolveOptions& options = {});

// The individual stages, exposed for testing and trace replay.

std::optional<Certificate> few_cycles_shortcut(const Graph& g, int ell, const Budget& b);

struct DChoice {
  OrientedCycle d;  // canonical orientation
  Segment cd;
  Vertex x = -1;
  Vertex y = -1;
};
// Long cycle D != C minimizing the shortest segment of C containing V(C) n V(D);
// ties by canonical order. Requires every long cycle to meet C.
std::optional<DChoice> choose_d(const Graph& g, int ell, const OrientedCycle& c);

Certificate case_a(const Graph& g, const Budget& b, const OrientedCycle& c, const DChoice& choice);
Certificate case_b(const Graph& g, const Budget& b, const OrientedCycle& c, const DChoice& choice);

class AssemblyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Concatenates vertex sequences that meet at their stitching endpoints into
// a closed walk and checks that it is a simple cycle of g.
OrientedCycle assemble_cycle(const Graph& g, std::span<const std::vector<Vertex>> parts);

struct ClaimPair {
  OrientedCycle first;
  OrientedCycle second;
  Branch branch;
};

// Builders for the two disjoint long cycles that contradict each claim. They
// read the geometric state from the trace; nullopt when no applicable
// assembly yields two disjoint long cycles.
std::optional<ClaimPair> pair_from_claim_a2(const Graph& g, int ell, const SolveTrace& tr);
std::optional<ClaimPair> pair_from_claim_a3(const Graph& g, int ell, const SolveTrace& tr,
                                            const PathWitness& q, const PathWitness& q_prime);
std::optional<ClaimPair> pair_from_claim_b1(const Graph& g, int ell, const SolveTrace& tr,
                                            const PathWitness& q2);
std::optional<ClaimPair> pair_from_claim_b2(const Graph& g, int ell, const SolveTrace& tr,
                                            const PathWitness& q, const PathWitness& q_prime);
std::optional<ClaimPair> pair_from_claim_b3(const Graph& g, int ell, const SolveTrace& tr,
                                            const PathWitness& q, const PathWitness& q_prime);

// Shortest special path of a case-A trace: a path with both ends on C, in
// two different segments among E1, E2, E3, and no interior vertex on C.
// nullopt when no special path exists.
std::optional<int> shortest_special_path(const Graph& g, const SolveTrace& tr);

}  // namespace longcycles
