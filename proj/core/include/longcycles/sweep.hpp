#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "longcycles/graph.hpp"

namespace longcycles {

enum class SweepMode { kExhaustive, kRandom };

struct SweepConfig {
  std::vector<int> ells{3};
  SweepMode mode = SweepMode::kExhaustive;
  int max_n = 6;  // exhaustive: connected graphs on 1..max_n vertices
  // random: graph i is gen_gnp(n_min + i % (n_max - n_min + 1), p[...], seed + i)
  int count = 100;
  int n_min = 10;
  int n_max = 10;
  std::vector<double> p{0.3};
  std::uint64_t seed = 1;
  bool oracle = false;
  int oracle_max_n = 10;  // oracle cross-check only on graphs this small
  bool timing = false;    // wall time makes reports differ between runs
  int jobs = 1;
};

struct SweepRow {
  int index = 0;
  std::string source;  // "connected:<n>:<i>", "gnp:<n>:<p>:<seed>" or "complete:<n>"
  int n = 0;
  int m = 0;
  int ell = 0;
  std::string kind;  // "transversal" or "disjoint_pair"
  int size = 0;
  int budget = 0;
  bool valid = false;
  std::string oracle;  // "agree", "disagree" or "-" when not checked
  std::string branch;
  bool anomaly = false;
  std::string reason;  // verifier or oracle message on failure
  double wall_ms = -1;
};

struct SweepReport {
  std::vector<SweepRow> rows;

  [[nodiscard]] int instances() const { return static_cast<int>(rows.size()); }
  [[nodiscard]] int valid_count() const;
  [[nodiscard]] double validity_rate() const;
  [[nodiscard]] int anomaly_count() const;
  [[nodiscard]] int oracle_checked() const;
  [[nodiscard]] int oracle_disagreements() const;
  [[nodiscard]] std::map<int, int> max_transversal_by_ell() const;
  [[nodiscard]] std::map<std::string, int> branch_histogram() const;

  [[nodiscard]] std::string to_tsv() const;  // header line plus one row per instance
  [[nodiscard]] std::string aggregate_json() const;
};

struct SweepInstance {
  Graph graph;
  std::string source;
};

// The graphs a config covers, in report order, K_{2 ell - 1} for each ell last.
std::vector<SweepInstance> sweep_instances(const SweepConfig& config);

SweepReport run_sweep(const SweepConfig& config);

// One row; exposed so callers can check single instances the same way.
SweepRow evaluate_instance(const SweepInstance& inst, int ell, const SweepConfig& config);

}  // namespace longcycles
