#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "longcycles/certificate.hpp"
#include "longcycles/cycle_oracle.hpp"
#include "longcycles/generators.hpp"
#include "longcycles/graph_io.hpp"
#include "longcycles/solver.hpp"
#include "longcycles/sweep.hpp"

namespace longcycles::cli {
namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

Graph load_graph(const std::string& path, const std::string& format) {
  return read_graph(path, parse_format_name(format));
}

std::string graph_text(const Graph& g, const std::string& format) {
  return parse_format_name(format) == GraphFormat::kDimacs ? to_dimacs(g) : to_edge_list(g);
}

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for two disjoint long cycles or a small transversal", "longcycles"};
  app.require_subcommand(1);

  int ell = 3;
  std::string input;
  std::string format = "edgelist";
  std::string output;

  auto* solve_cmd = app.add_subcommand("solve", "Compute a certificate for a graph");
  bool with_trace = false;
  solve_cmd->add_option("--ell", ell, "Minimum cycle length")->required()->check(CLI::Range(3, 1 << 20));
  solve_cmd->add_option("--input", input, "Graph file")->required();
  solve_cmd->add_option("--format", format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
  solve_cmd->add_option("--out", output, "Write the certificate here instead of stdout");
  solve_cmd->add_flag("--trace", with_trace, "Include the recorded choices");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  std::string cert_path;
  verify_cmd->add_option("--ell", ell, "Minimum cycle length")->required()->check(CLI::Range(3, 1 << 20));
  verify_cmd->add_option("--input", input, "Graph file")->required();
  verify_cmd->add_option("--format", format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
  verify_cmd->add_option("--cert", cert_path, "Certificate JSON")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum transversal and pair existence");
  oracle_cmd->add_option("--ell", ell, "Minimum cycle length")->required()->check(CLI::Range(3, 1 << 20));
  oracle_cmd->add_option("--input", input, "Graph file")->required();
  oracle_cmd->add_option("--format", format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "Solve and verify a family of graphs");
  SweepConfig config;
  std::vector<int> ell_list;
  bool exhaustive = false;
  bool random = false;
  int n_max = -1;
  std::vector<double> p_list;
  std::string summary_path;
  sweep_cmd->add_option("--ell-list", ell_list, "Comma-separated cycle lengths")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(3, 64));
  auto* ex_flag = sweep_cmd->add_flag("--exhaustive", exhaustive, "All connected graphs up to --max-n");
  auto* rnd_flag = sweep_cmd->add_flag("--random", random, "G(n, p) samples");
  ex_flag->excludes(rnd_flag);
  sweep_cmd->add_option("--max-n", config.max_n, "Largest order in exhaustive mode")->check(CLI::Range(1, 8));
  sweep_cmd->add_option("--count", config.count, "Number of random graphs")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--n", config.n_min, "Order of random graphs")->check(CLI::Range(1, 128));
  sweep_cmd->add_option("--n-max", n_max, "Orders from --n up to this value")->check(CLI::Range(1, 128));
  sweep_cmd->add_option("--p", p_list, "Edge probabilities, cycled through")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--seed", config.seed, "Seed of the first random graph");
  sweep_cmd->add_flag("--oracle", config.oracle, "Cross-check against brute force");
  sweep_cmd->add_option("--oracle-max-n", config.oracle_max_n, "Largest order checked by the oracle");
  sweep_cmd->add_flag("--timing", config.timing, "Record wall time per instance");
  sweep_cmd->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1, 256));
  sweep_cmd->add_option("--out", output, "Write the table here instead of stdout");
  sweep_cmd->add_option("--summary", summary_path, "Write the JSON aggregate here (default: after the table)");

  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
  gen_cmd->require_subcommand(1);
  int gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 1;
  std::string first_path;
  std::string second_path;
  std::string gen_format = "edgelist";
  gen_cmd->add_option("--format", gen_format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
  gen_cmd->add_option("--out", output, "Write the graph here instead of stdout");
  auto* gen_complete_cmd = gen_cmd->add_subcommand("complete", "Complete graph K_n");
  gen_complete_cmd->add_option("--n", gen_n, "Order")->required()->check(CLI::Range(0, 128));
  auto* gen_cycle_cmd = gen_cmd->add_subcommand("cycle", "Cycle C_n");
  gen_cycle_cmd->add_option("--n", gen_n, "Order")->required()->check(CLI::Range(3, 128));
  auto* gen_gnp_cmd = gen_cmd->add_subcommand("gnp", "Random graph G(n, p)");
  gen_gnp_cmd->add_option("--n", gen_n, "Order")->required()->check(CLI::Range(0, 128));
  gen_gnp_cmd->add_option("--p", gen_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen_gnp_cmd->add_option("--seed", gen_seed, "Seed");
  auto* gen_union_cmd = gen_cmd->add_subcommand("union", "Disjoint union of two graph files");
  gen_union_cmd->add_option("--first", first_path, "First graph")->required();
  gen_union_cmd->add_option("--second", second_path, "Second graph, ids shifted")->required();
  for (auto* sub : {gen_complete_cmd, gen_cycle_cmd, gen_gnp_cmd, gen_union_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return kUsage;
  }

  try {
    if (*solve_cmd) {
      SolveOptions options;
      options.on_anomaly = [&err](const SolveTrace& t) {
        err << "anomaly at " << branch_name(t.branch) << ": " << t.anomaly << "\n";
      };
      const Graph g = load_graph(input, format);
      const Certificate cert = solve(g, ell, options);
      write_output(output, certificate_to_json(cert, with_trace), out);
      return kOk;
    }
    if (*verify_cmd) {
      const Graph g = load_graph(input, format);
      const VerifyResult r = verify_certificate_json(g, ell, read_file(cert_path));
      const char* kind = r.kind == CertificateKind::kDisjointPair ? "disjoint_pair" : "transversal";
      if (r.ok) {
        out << "ok " << kind << " size " << r.size << " budget " << r.budget << "\n";
        return kOk;
      }
      out << "invalid " << kind << ": " << r.reason << "\n";
      return kInvalid;
    }
    if (*oracle_cmd) {
      const Graph g = load_graph(input, format);
      const auto x = min_transversal_bruteforce(g, ell, g.order());
      out << "min_transversal " << x->size() << " {" << join(*x) << "}\n";
      const auto pair = find_disjoint_long_pair_bruteforce(g, ell);
      out << "disjoint_pair " << (pair ? "yes" : "no") << "\n";
      return kOk;
    }
    if (*sweep_cmd) {
      if (exhaustive == random) throw UsageError("choose one of --exhaustive or --random");
      config.ells = ell_list;
      config.mode = exhaustive ? SweepMode::kExhaustive : SweepMode::kRandom;
      config.n_max = n_max < 0 ? config.n_min : n_max;
      if (config.n_max < config.n_min) throw UsageError("--n-max is smaller than --n");
      if (!p_list.empty()) config.p = p_list;
      const SweepReport report = run_sweep(config);
      if (summary_path.empty() && output.empty()) {
        out << report.to_tsv() << report.aggregate_json();
      } else {
        write_output(output, report.to_tsv(), out);
        write_output(summary_path, report.aggregate_json(), out);
      }
      return report.valid_count() == report.instances() ? kOk : kInvalid;
    }
    if (*gen_cmd) {
      Graph g;
      if (*gen_complete_cmd) {
        g = gen_complete(gen_n);
      } else if (*gen_cycle_cmd) {
        g = gen_cycle(gen_n);
      } else if (*gen_gnp_cmd) {
        g = gen_gnp(gen_n, gen_p, gen_seed);
      } else {
        g = gen_disjoint_union(load_graph(first_path, gen_format), load_graph(second_path, gen_format));
      }
      write_output(output, graph_text(g, gen_format), out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CertificateFormatError& e) {
    err << "error: certificate: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace longcycles::cli
