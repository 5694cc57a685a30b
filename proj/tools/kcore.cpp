// kcore: core decomposition and core maintenance from the command line.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "kcore/commands.hpp"
#include "kcore/error.hpp"

using namespace kcore;

namespace {

struct Input {
  std::string graph;
  std::string gen;
  std::uint64_t seed = 1;
};

struct WorkloadSource {
  std::string path;
  std::size_t latest = 0;
  std::size_t sample = 0;
  std::size_t mixed = 0;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* g = cmd->add_option("--graph", in.graph, "Edge-list file");
  auto* s = cmd->add_option("--gen", in.gen, "Generator: lollipop:N | er:N,M | cliquechain:C,K");
  g->excludes(s);
  cmd->add_option("--seed", in.seed, "Seed for generators, sampling and random orders");
}

void add_workload(CLI::App* cmd, WorkloadSource& w) {
  auto* a = cmd->add_option("--workload", w.path, "Workload file ('I u v' / 'R u v' / 'Q u')");
  auto* b = cmd->add_option("--latest", w.latest, "Reinsert the N latest timed edges");
  auto* c = cmd->add_option("--sample", w.sample, "Reinsert N uniformly sampled edges");
  auto* d = cmd->add_option("--mixed", w.mixed, "N alternating random insertions and removals");
  a->excludes(b)->excludes(c)->excludes(d);
  b->excludes(c)->excludes(d);
  c->excludes(d);
}

LoadedGraph load(const Input& in) {
  if (!in.gen.empty()) return generate(parse_gen_spec(in.gen), in.seed);
  if (in.graph.empty()) throw Error(Errc::InvalidArgument, "one of --graph or --gen is required");
  return load_edge_list_file(in.graph);
}

// May remove edges from the graph when the workload reinserts them.
std::vector<WorkloadOp> load_workload(LoadedGraph& lg, const WorkloadSource& w, std::uint64_t seed) {
  if (!w.path.empty()) return parse_workload_file(w.path, lg.names);
  if (w.latest > 0) return derive_latest(lg, w.latest);
  if (w.sample > 0) return derive_sample(lg.graph, w.sample, seed);
  if (w.mixed > 0) return random_mixed_ops(lg.graph, w.mixed, seed);
  throw Error(Errc::InvalidArgument, "one of --workload, --latest, --sample or --mixed is required");
}

Heuristic heuristic_arg(const std::string& text) {
  if (auto h = parse_heuristic(text)) return *h;
  throw Error(Errc::InvalidArgument, "unknown heuristic '" + text + "'");
}

Algo algo_arg(const std::string& text) {
  if (auto a = parse_algo(text)) return *a;
  throw Error(Errc::InvalidArgument, "unknown algorithm '" + text + "'");
}

// Opens `path` for writing, or returns stdout for "" and "-".
std::ostream& open_out(const std::string& path, std::unique_ptr<std::ofstream>& holder) {
  if (path.empty() || path == "-") return std::cout;
  holder = std::make_unique<std::ofstream>(path);
  if (!*holder) throw Error(Errc::Io, "cannot write " + path);
  return *holder;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-core decomposition and maintenance"};
  app.require_subcommand(1);

  Input in;
  WorkloadSource ws;
  std::string heuristic = "small";
  std::string algo = "order";
  std::string out_path;
  std::size_t check_every = 0;
  std::size_t groups = 10, group_size = 100;
  double p = 0.0;

  auto* decompose = app.add_subcommand("decompose", "Print core, rem and rank per vertex");
  add_input(decompose, in);
  decompose->add_option("--heuristic", heuristic, "small | large | random");

  auto* apply = app.add_subcommand("apply", "Replay a workload and report per-op statistics");
  add_input(apply, in);
  add_workload(apply, ws);
  apply->add_option("--algo", algo, "order | traversal | oracle");
  apply->add_option("--heuristic", heuristic, "small | large | random");
  apply->add_option("--check-every", check_every, "Oracle check after every N ops (0 = never)");
  apply->add_option("--stats-out", out_path, "Per-op CSV destination (default stdout)");

  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("--gen", in.gen, "lollipop:N | er:N,M | cliquechain:C,K")->required();
  gen->add_option("--seed", in.seed, "Generator seed");
  gen->add_option("-o,--out", out_path, "Destination (default stdout)");

  auto* workload = app.add_subcommand("workload", "Write a random mixed workload for a graph");
  add_input(workload, in);
  workload->add_option("--mixed", ws.mixed, "Number of ops")->required();
  workload->add_option("-o,--out", out_path, "Destination (default stdout)");

  auto* stability = app.add_subcommand("stability", "Grouped reinsertion with random removals");
  add_input(stability, in);
  stability->add_option("--groups", groups, "Number of groups");
  stability->add_option("--group-size", group_size, "Insertions per group");
  stability->add_option("--p", p, "Removal probability after each insertion");
  stability->add_option("--algo", algo, "order | traversal | oracle");
  stability->add_option("--heuristic", heuristic, "small | large | random");
  stability->add_option("--check-every", check_every, "Nonzero: oracle check after every group");
  stability->add_option("--stats-out", out_path, "Per-group CSV destination (default stdout)");

  auto* heuristics = app.add_subcommand("heuristics", "Compare initial-order heuristics on one workload");
  add_input(heuristics, in);
  add_workload(heuristics, ws);

  CLI11_PARSE(app, argc, argv);

  try {
    std::unique_ptr<std::ofstream> file;
    if (decompose->parsed()) {
      const auto lg = load(in);
      cmd_decompose(lg, heuristic_arg(heuristic), in.seed, std::cout);
    } else if (apply->parsed()) {
      auto lg = load(in);
      const auto ops = load_workload(lg, ws, in.seed);
      ApplyOptions o;
      o.algo = algo_arg(algo);
      o.heuristic = heuristic_arg(heuristic);
      o.seed = in.seed;
      o.check_every = check_every;
      std::ostream& csv = open_out(out_path, file);
      o.stats = &csv;
      const auto summary = cmd_apply(lg, ops, o);
      print_apply_summary(&csv == &std::cout ? std::cerr : std::cout, summary);
    } else if (gen->parsed()) {
      cmd_gen(parse_gen_spec(in.gen), in.seed, open_out(out_path, file));
    } else if (workload->parsed()) {
      auto lg = load(in);
      write_workload(open_out(out_path, file), random_mixed_ops(lg.graph, ws.mixed, in.seed), lg.names);
    } else if (stability->parsed()) {
      const auto lg = load(in);
      StabilityOptions o;
      o.groups = groups;
      o.group_size = group_size;
      o.p = p;
      o.seed = in.seed;
      o.algo = algo_arg(algo);
      o.heuristic = heuristic_arg(heuristic);
      o.check = check_every > 0;
      cmd_stability(lg, o, open_out(out_path, file));
    } else if (heuristics->parsed()) {
      auto lg = load(in);
      const auto ops = load_workload(lg, ws, in.seed);
      cmd_heuristics(lg, ops, in.seed, std::cout);
    }
  } catch (const Error& e) {
    std::cerr << "kcore: " << e.what() << '\n';
    return e.code() == Errc::CheckFailed ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "kcore: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
