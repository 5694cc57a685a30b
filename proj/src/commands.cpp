#include "kcore/commands.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>

#include "kcore/error.hpp"
#include "kcore/oracle.hpp"
#include "kcore/order_engine.hpp"
#include "kcore/traversal_engine.hpp"

namespace kcore {

namespace {

double micros_of(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1000.0; }

UpdateResult run_op(CoreMaintainer& e, const WorkloadOp& op) {
  return op.kind == OpKind::Insert ? e.insert_edge(op.u, op.v) : e.remove_edge(op.u, op.v);
}

std::string label(const VertexNames& names, VertexId v) {
  return v < names.size() ? names.name(v) : "#" + std::to_string(v);
}

// Throws Error{CheckFailed} when the engine disagrees with a fresh
// decomposition or fails its own consistency check.
void check_against_oracle(const CoreMaintainer& e, const VertexNames& names, const std::string& where) {
  const auto expect = oracle::naive_cores(e.graph());
  const auto got = e.cores();
  for (VertexId v = 0; v < expect.size(); ++v) {
    if (expect[v] != got[v]) {
      throw Error(Errc::CheckFailed, where + ": vertex " + label(names, v) + " has core " + std::to_string(got[v]) +
                                         ", expected " + std::to_string(expect[v]) + " (n=" +
                                         std::to_string(expect.size()) + ", m=" +
                                         std::to_string(e.graph().num_edges()) + ")");
    }
  }
  if (auto bad = e.self_check()) throw Error(Errc::CheckFailed, where + ": " + *bad);
}

void write_ratio(std::ostream& out, std::optional<double> r) {
  if (r) {
    out << std::fixed << std::setprecision(4) << *r << std::defaultfloat;
  } else {
    out << "n/a";
  }
}

std::optional<double> ratio_of(std::uint64_t visited, std::uint64_t vstar) {
  if (vstar == 0) return std::nullopt;
  return static_cast<double>(visited) / static_cast<double>(vstar);
}

}  // namespace

std::optional<Algo> parse_algo(std::string_view text) noexcept {
  if (text == "order") return Algo::Order;
  if (text == "traversal") return Algo::Traversal;
  if (text == "oracle") return Algo::Oracle;
  return std::nullopt;
}

std::string_view algo_name(Algo algo) noexcept {
  switch (algo) {
    case Algo::Order: return "order";
    case Algo::Traversal: return "traversal";
    case Algo::Oracle: return "oracle";
  }
  return "?";
}

std::unique_ptr<CoreMaintainer> make_engine(Algo algo, DynamicGraph g, Heuristic heuristic, std::uint64_t seed,
                                            EngineOptions options) {
  switch (algo) {
    case Algo::Order:
      return std::make_unique<OrderEngine>(std::move(g), heuristic, seed, options);
    case Algo::Traversal:
      return std::make_unique<TraversalEngine>(std::move(g), options);
    case Algo::Oracle:
      return std::make_unique<OracleEngine>(std::move(g));
  }
  throw Error(Errc::InvalidArgument, "unknown algorithm");
}

DecomposeSummary cmd_decompose(const LoadedGraph& loaded, Heuristic heuristic, std::uint64_t seed,
                               std::ostream& out) {
  const auto& g = loaded.graph;
  const auto d = core_decompose(g, heuristic, seed);
  DecomposeSummary s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  for (VertexId v = 0; v < s.n; ++v) {
    out << label(loaded.names, v) << ' ' << d.state.core[v] << ' ' << d.state.rem[v] << ' '
        << d.order.rank_within(v) << '\n';
    s.max_core = std::max(s.max_core, d.state.core[v]);
  }
  if (s.n > 0) {
    for (CoreValue k = 0; k <= s.max_core; ++k) s.bucket_sizes.push_back(d.order.bucket_size(k));
  }
  out << "# n=" << s.n << " m=" << s.m << " max_core=" << s.max_core << '\n';
  for (std::size_t k = 0; k < s.bucket_sizes.size(); ++k) {
    if (s.bucket_sizes[k] > 0) out << "# |O_" << k << "|=" << s.bucket_sizes[k] << '\n';
  }
  return s;
}

std::size_t histogram_bin(std::size_t visited) noexcept {
  if (visited <= 3) return 0;
  if (visited <= 10) return 1;
  if (visited <= 100) return 2;
  if (visited <= 1000) return 3;
  return 4;
}

std::optional<double> ApplySummary::ratio() const { return ratio_of(insert_visited, insert_vstar); }
std::optional<double> HeuristicRow::ratio() const { return ratio_of(insert_visited, insert_vstar); }

ApplySummary cmd_apply(const LoadedGraph& loaded, const std::vector<WorkloadOp>& ops, const ApplyOptions& options) {
  EngineOptions eo;
  eo.checked = false;
  auto engine = make_engine(options.algo, loaded.graph, options.heuristic, options.seed, eo);
  ApplySummary s;
  std::ostream* csv = options.stats;
  if (csv) *csv << kStatsHeader << '\n' << std::flush;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& op = ops[i];
    ++s.ops;
    CoreValue k = 0;
    std::size_t vstar = 0, visited = 0;
    double micros = 0;
    if (op.kind == OpKind::QueryCore) {
      ++s.queries;
      if (!engine->graph().contains(op.u)) {
        throw Error(Errc::UnknownVertex, "op " + std::to_string(i) + ": vertex " + label(loaded.names, op.u));
      }
      k = engine->core(op.u);
    } else {
      UpdateResult r;
      try {
        r = run_op(*engine, op);
      } catch (const Error& e) {
        throw Error(e.code(), "op " + std::to_string(i) + ": " + e.what());
      }
      k = r.k;
      vstar = r.vstar.size();
      visited = r.visited;
      micros = micros_of(r.elapsed);
      s.micros += micros;
      if (op.kind == OpKind::Insert) {
        ++s.inserts;
        s.insert_visited += visited;
        s.insert_vstar += vstar;
        ++s.histogram[histogram_bin(visited)];
      } else {
        ++s.removes;
      }
    }
    if (csv) {
      *csv << i << ',' << op_letter(op.kind) << ',' << k << ',' << vstar << ',' << visited << ','
           << std::fixed << std::setprecision(3) << micros << std::defaultfloat << '\n'
           << std::flush;
    }
    if (options.check_every > 0 && (i + 1) % options.check_every == 0) {
      check_against_oracle(*engine, loaded.names, "op " + std::to_string(i));
      ++s.checks;
    }
  }
  return s;
}

void print_apply_summary(std::ostream& out, const ApplySummary& s) {
  out << "ops=" << s.ops << " inserts=" << s.inserts << " removes=" << s.removes << " queries=" << s.queries
      << " checks=" << s.checks << " update_micros=" << std::fixed << std::setprecision(1) << s.micros
      << std::defaultfloat << '\n';
  out << "insert visited/vstar ratio=";
  write_ratio(out, s.ratio());
  out << " (" << s.insert_visited << " / " << s.insert_vstar << ")\n";
  static constexpr const char* kBins[] = {"<=3", "<=10", "<=100", "<=1000", ">1000"};
  out << "visited histogram:";
  for (std::size_t b = 0; b < s.histogram.size(); ++b) out << ' ' << kBins[b] << ':' << s.histogram[b];
  out << '\n';
}

void cmd_gen(const GenSpec& spec, std::uint64_t seed, std::ostream& out) {
  const auto lg = generate(spec, seed);
  write_edge_list(out, lg.graph, lg.names);
}

std::vector<StabilityRow> cmd_stability(const LoadedGraph& loaded, const StabilityOptions& o, std::ostream& out) {
  if (o.groups == 0 || o.group_size == 0) throw Error(Errc::InvalidArgument, "groups and group size must be positive");
  if (!(o.p >= 0.0 && o.p <= 1.0)) throw Error(Errc::InvalidArgument, "p must lie in [0, 1]");
  const std::size_t total = o.groups * o.group_size;
  if (total > loaded.graph.num_edges()) {
    throw Error(Errc::InvalidArgument, "insufficient edges: " + std::to_string(total) + " needed, graph has " +
                                           std::to_string(loaded.graph.num_edges()));
  }
  DynamicGraph g = loaded.graph;
  const auto inserts = derive_sample(g, total, o.seed);
  EngineOptions eo;
  eo.checked = false;
  auto engine = make_engine(o.algo, std::move(g), o.heuristic, o.seed, eo);
  EdgePool present(engine->graph());
  std::mt19937_64 rng(o.seed ^ 0xa5a5a5a5a5a5a5a5ULL);
  std::bernoulli_distribution coin(o.p);

  std::vector<StabilityRow> rows;
  out << "group_index,micros,vstar_total\n" << std::flush;
  for (std::size_t grp = 0; grp < o.groups; ++grp) {
    StabilityRow row;
    row.group = grp;
    std::chrono::nanoseconds spent{0};
    for (std::size_t j = 0; j < o.group_size; ++j) {
      const auto& op = inserts[grp * o.group_size + j];
      const auto r = engine->insert_edge(op.u, op.v);
      present.add(op.u, op.v);
      spent += r.elapsed;
      row.vstar_total += r.vstar.size();
      if (o.p > 0 && coin(rng) && !present.empty()) {
        const auto [a, b] = present.sample(rng);
        present.erase(a, b);
        const auto rr = engine->remove_edge(a, b);
        spent += rr.elapsed;
        row.vstar_total += rr.vstar.size();
        ++row.removals;
      }
    }
    row.micros = micros_of(spent);
    out << grp << ',' << std::fixed << std::setprecision(3) << row.micros << std::defaultfloat << ','
        << row.vstar_total << '\n'
        << std::flush;
    if (o.check) check_against_oracle(*engine, loaded.names, "group " + std::to_string(grp));
    rows.push_back(row);
  }
  return rows;
}

std::vector<HeuristicRow> cmd_heuristics(const LoadedGraph& loaded, const std::vector<WorkloadOp>& ops,
                                         std::uint64_t seed, std::ostream& out) {
  constexpr Heuristic kAll[] = {Heuristic::SmallRemFirst, Heuristic::LargeRemFirst, Heuristic::RandomRemFirst};
  EngineOptions eo;
  eo.checked = false;
  std::vector<std::unique_ptr<OrderEngine>> engines;
  for (Heuristic h : kAll) engines.push_back(std::make_unique<OrderEngine>(loaded.graph, h, seed, eo));
  std::vector<HeuristicRow> rows(std::size(kAll));
  for (std::size_t h = 0; h < rows.size(); ++h) rows[h].heuristic = kAll[h];

  auto same_cores = [&](std::size_t i) {
    const auto ref = engines[0]->cores();
    for (std::size_t h = 1; h < engines.size(); ++h) {
      const auto c = engines[h]->cores();
      if (!std::equal(ref.begin(), ref.end(), c.begin(), c.end())) {
        throw Error(Errc::CheckFailed, "heuristics disagree on core numbers after op " + std::to_string(i));
      }
    }
  };
  same_cores(0);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& op = ops[i];
    if (op.kind == OpKind::QueryCore) continue;
    for (std::size_t h = 0; h < engines.size(); ++h) {
      const auto r = run_op(*engines[h], op);
      rows[h].micros += micros_of(r.elapsed);
      if (op.kind == OpKind::Insert) {
        rows[h].insert_visited += r.visited;
        rows[h].insert_vstar += r.vstar.size();
      }
    }
    same_cores(i);
  }
  out << "heuristic,visited,vstar,ratio,micros\n";
  for (const auto& row : rows) {
    out << heuristic_name(row.heuristic) << ',' << row.insert_visited << ',' << row.insert_vstar << ',';
    write_ratio(out, row.ratio());
    out << ',' << std::fixed << std::setprecision(1) << row.micros << std::defaultfloat << '\n';
  }
  out << "cores identical across heuristics: yes\n";
  return rows;
}

}  // namespace kcore
