#include <gtest/gtest.h>

#include "branch_instances.hpp"
#include "longcycles/certificate.hpp"
#include "longcycles/generators.hpp"
#include "longcycles/solver.hpp"
#include "reference.hpp"

namespace longcycles {
namespace {

const Transversal& transversal_of(const Certificate& c) { return std::get<Transversal>(c.result); }

TEST(Budget, Values) {
  EXPECT_EQ(Budget::for_ell(3).value, 8);
  EXPECT_EQ(Budget::for_ell(4).value, 9);
  EXPECT_EQ(Budget::for_ell(5).value, 11);
  EXPECT_EQ(Budget::for_ell(6).value, 12);
  EXPECT_EQ(Budget::for_ell(3).block, 1);
  EXPECT_EQ(Budget::for_ell(4).block, 1);
  EXPECT_EQ(Budget::for_ell(5).block, 2);
  EXPECT_EQ(Budget::for_ell(6).block, 2);
  for (int ell = 3; ell <= 40; ++ell) {
    const Budget b = Budget::for_ell(ell);
    // Three blocks plus five extra vertices always fit the budget.
    EXPECT_LE(3 * (b.block + 1) + 2, b.value) << "ell=" << ell;
  }
}

TEST(BranchNames, RoundTrip) {
  for (int i = 0; i <= static_cast<int>(Branch::kAnomalyTransversal); ++i) {
    const auto b = static_cast<Branch>(i);
    const auto name = branch_name(b);
    EXPECT_FALSE(name.empty());
    EXPECT_EQ(branch_from_name(name), b);
  }
  EXPECT_FALSE(branch_from_name("nonsense").has_value());
}

TEST(Solve, SpecExamples) {
  const Certificate c6 = solve(gen_cycle(6), 3);
  EXPECT_EQ(c6.trace.branch, Branch::kShortCycle);
  EXPECT_EQ(transversal_of(c6).vertices, (VertexSet{0, 1, 2, 3, 4, 5}));

  const Certificate two = solve(gen_disjoint_union(gen_cycle(5), gen_cycle(5)), 5);
  ASSERT_TRUE(two.is_pair());
  const auto& pair = std::get<DisjointPair>(two.result);
  EXPECT_EQ(pair.first.vertex_set(), (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(pair.second.vertex_set(), (VertexSet{5, 6, 7, 8, 9}));
  EXPECT_EQ(two.trace.branch, Branch::kDisjointFromC);

  const Certificate k5 = solve(gen_complete(5), 3);
  EXPECT_EQ(k5.trace.branch, Branch::kShortCycle);
  EXPECT_EQ(transversal_of(k5).vertices.size(), 3);
}

TEST(Solve, NoLongCycle) {
  const Certificate c = solve(gen_cycle(6), 7);
  EXPECT_EQ(c.trace.branch, Branch::kNoLongCycle);
  EXPECT_TRUE(transversal_of(c).vertices.empty());
  EXPECT_EQ(solve(Graph(0, {}), 3).n, 0);
}

// In K6 a triangle leaves a second triangle behind, so V(C) alone is no answer.
TEST(Solve, DisjointCheckPrecedesShortCycle) {
  const Certificate c = solve(gen_complete(6), 3);
  ASSERT_TRUE(c.is_pair());
  EXPECT_EQ(c.trace.branch, Branch::kDisjointFromC);
  EXPECT_TRUE(c.trace.anomaly.empty());
}

TEST(FewCycles, SpecExamples) {
  const Budget b = Budget::for_ell(3);
  const auto c6 = few_cycles_shortcut(gen_cycle(6), 3, b);
  ASSERT_TRUE(c6.has_value());
  EXPECT_EQ(transversal_of(*c6).vertices, VertexSet{0});
  EXPECT_EQ(c6->trace.branch, Branch::kFewCycles);

  const Graph k4 = gen_complete(4);
  const auto k4_cert = few_cycles_shortcut(k4, 3, b);
  ASSERT_TRUE(k4_cert.has_value());
  EXPECT_LE(transversal_of(*k4_cert).vertices.size(), 4);
  EXPECT_TRUE(is_transversal(k4, 3, transversal_of(*k4_cert).vertices));

  EXPECT_FALSE(few_cycles_shortcut(gen_complete(5), 3, b).has_value());
}

// Brute-force minimizer of |V(C_D)| over all long cycles D != C.
std::pair<std::vector<Vertex>, int> best_d(const Graph& g, int ell, const OrientedCycle& c) {
  std::vector<Vertex> best;
  int best_size = c.size() + 1;
  for (const auto& d : reference::all_cycles(g)) {
    if (static_cast<int>(d.size()) < ell || d == c.canonical().vertices) continue;
    const VertexSet shared = VertexSet::of(d) & c.vertex_set();
    if (shared.empty()) continue;
    int size = c.size();
    for (Vertex a : c.vertices()) {
      for (Vertex z : c.vertices()) {
        const auto seg = segment_vertices(c, a, z);
        if (shared.is_subset_of(VertexSet::of(seg))) size = std::min(size, static_cast<int>(seg.size()));
      }
    }
    if (size < best_size || (size == best_size && d < best)) {
      best = d;
      best_size = size;
    }
  }
  return {best, best_size};
}

TEST(ChooseD, CycleWithChord) {
  const Graph g(12, [] {
    std::vector<Edge> e;
    for (Vertex v = 0; v < 12; ++v) e.push_back({v, (v + 1) % 12});
    e.push_back({0, 6});
    return e;
  }());
  const auto c = shortest_long_cycle(g, VertexMask(), 5);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->vertices, (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6}));
  const OrientedCycle oc(*c);
  const auto choice = choose_d(g, 5, oc);
  ASSERT_TRUE(choice.has_value());
  EXPECT_EQ(choice->d.canonical().vertices, (std::vector<Vertex>{0, 6, 7, 8, 9, 10, 11}));
  EXPECT_EQ(choice->cd, (Segment{6, 0}));
  EXPECT_EQ(choice->x, 6);
  EXPECT_EQ(choice->y, 0);
  const auto [expected, size] = best_d(g, 5, oc);
  EXPECT_EQ(choice->d.canonical().vertices, expected);
  EXPECT_EQ(size, 2);
}

// Any two of the three cycles of a theta graph share a whole branch path.
TEST(ChooseD, ThetaGraph) {
  for (int ell = 3; ell <= 6; ++ell) {
    const Graph g = gen_theta({ell, ell, ell});
    const auto c = shortest_long_cycle(g, VertexMask(), ell);
    ASSERT_TRUE(c.has_value());
    const OrientedCycle oc(*c);
    const auto choice = choose_d(g, ell, oc);
    ASSERT_TRUE(choice.has_value());
    const auto [expected, size] = best_d(g, ell, oc);
    EXPECT_EQ(choice->d.canonical().vertices, expected);
    const auto cd = segment_vertices(oc, choice->cd);
    EXPECT_EQ(static_cast<int>(cd.size()), size);
    EXPECT_EQ(static_cast<int>(cd.size()), ell + 1);
    EXPECT_EQ(VertexSet::of(cd), oc.vertex_set() & choice->d.vertex_set());
    EXPECT_TRUE(VertexSet::of(cd).contains(0));
    EXPECT_TRUE(VertexSet::of(cd).contains(1));
    EXPECT_NE(choice->x, choice->y);
  }
}

TEST(ChooseD, SingleSharedVertexGivesCaseB) {
  // Two 5-cycles glued at vertex 0.
  const Graph g(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
  const auto c = shortest_long_cycle(g, VertexMask(), 5);
  const auto choice = choose_d(g, 5, OrientedCycle(*c));
  ASSERT_TRUE(choice.has_value());
  EXPECT_EQ(choice->x, 0);
  EXPECT_EQ(choice->y, 0);
}

TEST(ChooseD, RandomAgainstBruteForce) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gen_gnp(9, 0.3, seed);
    for (int ell = 3; ell <= 5; ++ell) {
      const auto c = shortest_long_cycle(g, VertexMask(), ell);
      if (!c || has_long_cycle(g, VertexMask(c->vertex_set()), ell)) continue;
      const OrientedCycle oc(*c);
      const auto choice = choose_d(g, ell, oc);
      const auto [expected, size] = best_d(g, ell, oc);
      if (expected.empty()) {
        EXPECT_FALSE(choice.has_value());
        continue;
      }
      ASSERT_TRUE(choice.has_value());
      EXPECT_EQ(choice->d.canonical().vertices, expected);
      EXPECT_EQ(static_cast<int>(segment_vertices(oc, choice->cd).size()), size);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(AssembleCycle, SpecExamples) {
  const Graph c5 = gen_cycle(5);
  const std::vector<std::vector<Vertex>> good{{0, 1, 2}, {2, 3}, {3, 4, 0}};
  EXPECT_EQ(assemble_cycle(c5, good).vertices(), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  const std::vector<std::vector<Vertex>> two{{0, 1}, {1, 0}};
  EXPECT_THROW(assemble_cycle(c5, two), AssemblyError);
  const Graph k5 = gen_complete(5);
  const std::vector<std::vector<Vertex>> repeat{{0, 1, 2}, {2, 1, 3}, {3, 0}};
  EXPECT_THROW(assemble_cycle(k5, repeat), AssemblyError);
  const std::vector<std::vector<Vertex>> gap{{0, 1}, {2, 3, 0}};
  EXPECT_THROW(assemble_cycle(k5, gap), AssemblyError);
  const std::vector<std::vector<Vertex>> missing{{0, 2}, {2, 3}, {3, 4, 0}};
  EXPECT_THROW(assemble_cycle(c5, missing), AssemblyError);
}

TEST(Properties, CertificatesOnRandomGraphs) {
  int anomalies = 0;
  SolveOptions options;
  options.on_anomaly = [&anomalies](const SolveTrace&) { ++anomalies; };
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 7 + static_cast<int>(seed % 6);
    const Graph g = gen_gnp(n, 0.2 + 0.05 * static_cast<double>(seed % 4), seed);
    const reference::CycleTable table(g);
    for (int ell = 3; ell <= 5; ++ell) {
      const Certificate cert = solve(g, ell, options);
      const VerifyResult r = verify_certificate(g, ell, cert);
      EXPECT_TRUE(r.ok) << r.reason << " seed=" << seed << " ell=" << ell;
      if (cert.is_pair()) {
        EXPECT_TRUE(table.has_disjoint_pair(ell));
      } else {
        EXPECT_LE(transversal_of(cert).vertices.size(), Budget::for_ell(ell).value);
        EXPECT_GE(transversal_of(cert).vertices.size(), table.min_transversal(ell));
      }
      if (!table.has_disjoint_pair(ell)) {
        EXPECT_FALSE(cert.is_pair());
      }
    }
  }
  EXPECT_EQ(anomalies, 0);
}

TEST(Properties, Deterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_ear_graph({10, 5, 1, 7, true}, seed);
    EXPECT_EQ(solve(g, 3), solve(g, 3));
    EXPECT_EQ(certificate_to_json(solve(g, 4), true), certificate_to_json(solve(g, 4), true));
  }
}

class ClaimInstance : public ::testing::TestWithParam<branch_instances::Instance> {};

TEST_P(ClaimInstance, ReachesBranchWithValidPair) {
  const auto& inst = GetParam();
  const Graph g = inst.graph();
  const Certificate cert = solve(g, inst.ell);
  EXPECT_EQ(branch_name(cert.trace.branch), inst.branch);
  EXPECT_TRUE(cert.trace.anomaly.empty()) << cert.trace.anomaly;
  EXPECT_TRUE(cert.is_pair());
  EXPECT_TRUE(verify_certificate(g, inst.ell, cert).ok);
}

TEST_P(ClaimInstance, ReplayFromStages) {
  const auto& inst = GetParam();
  const Graph g = inst.graph();
  const Certificate cert = solve(g, inst.ell);
  const OrientedCycle c(*shortest_long_cycle(g, VertexMask(), inst.ell));
  const auto choice = choose_d(g, inst.ell, c);
  ASSERT_TRUE(choice.has_value());
  const Budget b = Budget::for_ell(inst.ell);
  const Certificate replay = choice->x != choice->y ? case_a(g, b, c, *choice) : case_b(g, b, c, *choice);
  EXPECT_EQ(replay, cert);
  EXPECT_EQ(cert.trace.case_kind, choice->x != choice->y ? CaseKind::kA : CaseKind::kB);
}

std::string instance_name(const ::testing::TestParamInfo<branch_instances::Instance>& info) {
  return std::string(info.param.branch);
}

INSTANTIATE_TEST_SUITE_P(Claims, ClaimInstance, ::testing::ValuesIn(branch_instances::claim_instances()),
                         instance_name);

class TransversalInstance : public ::testing::TestWithParam<branch_instances::Instance> {};

TEST_P(TransversalInstance, ReachesBranchWithValidCertificate) {
  const auto& inst = GetParam();
  const Graph g = inst.graph();
  const Certificate cert = solve(g, inst.ell);
  EXPECT_EQ(branch_name(cert.trace.branch), inst.branch);
  EXPECT_TRUE(cert.trace.anomaly.empty()) << cert.trace.anomaly;
  const VerifyResult r = verify_certificate(g, inst.ell, cert);
  EXPECT_TRUE(r.ok) << r.reason;
}

INSTANTIATE_TEST_SUITE_P(Stages, TransversalInstance,
                         ::testing::ValuesIn(branch_instances::transversal_instances()), instance_name);

TEST(ClaimBuilders, RejectEmptyTrace) {
  const Graph g = gen_cycle(12);
  SolveTrace tr;
  EXPECT_FALSE(pair_from_claim_a2(g, 3, tr).has_value());
  EXPECT_FALSE(shortest_special_path(g, tr).has_value());
}

}  // namespace
}  // namespace longcycles
