#include "longcycles/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "longcycles/certificate.hpp"
#include "longcycles/cycle_oracle.hpp"
#include "longcycles/generators.hpp"
#include "longcycles/solver.hpp"

namespace longcycles {
namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string format_ms(double v) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << v;
  return out.str();
}

// Whether the certificate is consistent with the exact answers. A
// transversal may coexist with a disjoint pair, but never undercut the
// true minimum.
std::string oracle_check(const Graph& g, int ell, const Certificate& cert, std::string& reason) {
  const int budget = Budget::for_ell(ell).value;
  const bool pair_exists = find_disjoint_long_pair_bruteforce(g, ell).has_value();
  const auto minimum = min_transversal_bruteforce(g, ell, budget);
  if (cert.is_pair() && !pair_exists) {
    reason = "solver found a pair the oracle does not";
    return "disagree";
  }
  if (!pair_exists && !cert.is_pair() && !minimum) {
    reason = "no pair and no transversal within budget";
    return "disagree";
  }
  if (!cert.is_pair()) {
    const int size = std::get<Transversal>(cert.result).vertices.size();
    if (!minimum || minimum->size() > size) {
      reason = "transversal smaller than the oracle minimum";
      return "disagree";
    }
  }
  return "agree";
}

}  // namespace

int SweepReport::valid_count() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.valid; }));
}

double SweepReport::validity_rate() const {
  return rows.empty() ? 1.0 : static_cast<double>(valid_count()) / static_cast<double>(rows.size());
}

int SweepReport::anomaly_count() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.anomaly; }));
}

int SweepReport::oracle_checked() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.oracle != "-"; }));
}

int SweepReport::oracle_disagreements() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.oracle == "disagree"; }));
}

std::map<int, int> SweepReport::max_transversal_by_ell() const {
  std::map<int, int> out;
  for (const SweepRow& r : rows) {
    if (r.kind != "transversal" || !r.valid) continue;
    int& best = out[r.ell];
    best = std::max(best, r.size);
  }
  return out;
}

std::map<std::string, int> SweepReport::branch_histogram() const {
  std::map<std::string, int> out;
  for (const SweepRow& r : rows) ++out[r.branch];
  return out;
}

std::string SweepReport::to_tsv() const {
  std::ostringstream out;
  out << "index\tsource\tn\tm\tell\tkind\tsize\tbudget\tvalid\toracle\tbranch\tanomaly\twall_ms\treason\n";
  for (const SweepRow& r : rows) {
    out << r.index << '\t' << r.source << '\t' << r.n << '\t' << r.m << '\t' << r.ell << '\t' << r.kind
        << '\t' << r.size << '\t' << r.budget << '\t' << (r.valid ? "yes" : "no") << '\t' << r.oracle
        << '\t' << r.branch << '\t' << (r.anomaly ? "yes" : "no") << '\t'
        << (r.wall_ms < 0 ? std::string("-") : format_ms(r.wall_ms)) << '\t'
        << (r.reason.empty() ? "-" : r.reason) << '\n';
  }
  return out.str();
}

std::string SweepReport::aggregate_json() const {
  nlohmann::ordered_json j;
  j["instances"] = instances();
  j["valid"] = valid_count();
  j["validity_rate"] = validity_rate();
  j["anomalies"] = anomaly_count();
  j["oracle_checked"] = oracle_checked();
  j["oracle_disagreements"] = oracle_disagreements();
  nlohmann::ordered_json by_ell = nlohmann::ordered_json::object();
  for (const auto& [ell, size] : max_transversal_by_ell()) by_ell[std::to_string(ell)] = size;
  j["max_transversal_by_ell"] = by_ell;
  nlohmann::ordered_json branches = nlohmann::ordered_json::object();
  for (const auto& [name, count] : branch_histogram()) branches[name] = count;
  j["branches"] = branches;
  return j.dump(2) + "\n";
}

std::vector<SweepInstance> sweep_instances(const SweepConfig& config) {
  std::vector<SweepInstance> out;
  if (config.mode == SweepMode::kExhaustive) {
    for (int n = 1; n <= config.max_n; ++n) {
      const auto graphs = gen_connected_graphs(n);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        out.push_back({graphs[i], "connected:" + std::to_string(n) + ":" + std::to_string(i)});
      }
    }
  } else {
    const int span = std::max(1, config.n_max - config.n_min + 1);
    for (int i = 0; i < config.count; ++i) {
      const int n = config.n_min + i % span;
      const double p = config.p[(i / span) % config.p.size()];
      const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
      out.push_back({gen_gnp(n, p, seed),
                     "gnp:" + std::to_string(n) + ":" + format_double(p) + ":" + std::to_string(seed)});
    }
  }
  for (int ell : config.ells) {
    out.push_back({gen_complete(2 * ell - 1), "complete:" + std::to_string(2 * ell - 1)});
  }
  return out;
}

SweepRow evaluate_instance(const SweepInstance& inst, int ell, const SweepConfig& config) {
  SweepRow row;
  row.source = inst.source;
  row.n = inst.graph.order();
  row.m = inst.graph.edge_count();
  row.ell = ell;
  const auto start = std::chrono::steady_clock::now();
  const Certificate cert = solve(inst.graph, ell);
  const auto stop = std::chrono::steady_clock::now();
  if (config.timing) row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  const VerifyResult check = verify_certificate(inst.graph, ell, cert);
  row.kind = cert.is_pair() ? "disjoint_pair" : "transversal";
  row.size = check.size;
  row.budget = check.budget;
  row.valid = check.ok;
  row.reason = check.reason;
  row.branch = std::string(branch_name(cert.trace.branch));
  row.anomaly = !cert.trace.anomaly.empty();
  row.oracle = "-";
  if (config.oracle && row.n <= config.oracle_max_n) {
    std::string why;
    row.oracle = oracle_check(inst.graph, ell, cert, why);
    if (row.reason.empty()) row.reason = why;
  }
  return row;
}

SweepReport run_sweep(const SweepConfig& config) {
  const auto instances = sweep_instances(config);
  std::vector<std::pair<std::size_t, int>> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (int ell : config.ells) {
      // K_{2 ell - 1} rows only for their own ell.
      if (instances[i].source.starts_with("complete:") &&
          instances[i].graph.order() != 2 * ell - 1) {
        continue;
      }
      tasks.emplace_back(i, ell);
    }
  }

  SweepReport report;
  report.rows.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      report.rows[t] = evaluate_instance(instances[tasks[t].first], tasks[t].second, config);
      report.rows[t].index = static_cast<int>(t);
    }
  };
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

}  // namespace longcycles
