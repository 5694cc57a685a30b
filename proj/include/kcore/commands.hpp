#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kcore/decomp.hpp"
#include "kcore/engine.hpp"
#include "kcore/gen.hpp"
#include "kcore/graph.hpp"
#include "kcore/workload.hpp"

namespace kcore {

enum class Algo { Order, Traversal, Oracle };

std::optional<Algo> parse_algo(std::string_view text) noexcept;
std::string_view algo_name(Algo algo) noexcept;

std::unique_ptr<CoreMaintainer> make_engine(Algo algo, DynamicGraph g, Heuristic heuristic = Heuristic::SmallRemFirst,
                                            std::uint64_t seed = 1, EngineOptions options = {});

struct DecomposeSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  CoreValue max_core = 0;
  std::vector<std::size_t> bucket_sizes;
};

// Writes "label core rem rank" per vertex, then the summary lines.
DecomposeSummary cmd_decompose(const LoadedGraph& loaded, Heuristic heuristic, std::uint64_t seed,
                               std::ostream& out);

inline constexpr const char* kStatsHeader = "op_index,kind,K,vstar_size,visited_size,elapsed_micros";

// Insertions bucketed by visited count: <=3, <=10, <=100, <=1000, >1000.
using VisitedHistogram = std::array<std::size_t, 5>;
std::size_t histogram_bin(std::size_t visited) noexcept;

struct ApplyOptions {
  Algo algo = Algo::Order;
  Heuristic heuristic = Heuristic::SmallRemFirst;
  std::uint64_t seed = 1;
  // Oracle comparison after every N-th op; 0 disables it.
  std::size_t check_every = 0;
  // Receives the per-op CSV, flushed after each row.
  std::ostream* stats = nullptr;
};

struct ApplySummary {
  std::size_t ops = 0;
  std::size_t inserts = 0;
  std::size_t removes = 0;
  std::size_t queries = 0;
  std::size_t checks = 0;
  std::uint64_t insert_visited = 0;
  std::uint64_t insert_vstar = 0;
  VisitedHistogram histogram{};
  double micros = 0;

  // Sum of visited over sum of |V*| across insertions; nullopt when no
  // insertion changed a core.
  std::optional<double> ratio() const;
};

// Replays the workload sequentially. Per-op timing covers the engine update
// only. Throws Error{CheckFailed} naming the op index and the first
// disagreeing vertex when a periodic check fails.
ApplySummary cmd_apply(const LoadedGraph& loaded, const std::vector<WorkloadOp>& ops, const ApplyOptions& options);
void print_apply_summary(std::ostream& out, const ApplySummary& s);

void cmd_gen(const GenSpec& spec, std::uint64_t seed, std::ostream& out);

struct StabilityOptions {
  std::size_t groups = 10;
  std::size_t group_size = 100;
  double p = 0.0;
  std::uint64_t seed = 1;
  Algo algo = Algo::Order;
  Heuristic heuristic = Heuristic::SmallRemFirst;
  // Compare against the oracle after every group.
  bool check = false;
};

struct StabilityRow {
  std::size_t group = 0;
  double micros = 0;
  std::uint64_t vstar_total = 0;
  std::size_t removals = 0;
};

// Removes groups * group_size sampled edges, then reinserts them group by
// group. After each insertion, with probability p, a uniformly chosen
// present edge is removed; those removals are timed with the group. Writes
// "group_index,micros,vstar_total" rows to `out`.
std::vector<StabilityRow> cmd_stability(const LoadedGraph& loaded, const StabilityOptions& options, std::ostream& out);

struct HeuristicRow {
  Heuristic heuristic = Heuristic::SmallRemFirst;
  std::uint64_t insert_visited = 0;
  std::uint64_t insert_vstar = 0;
  double micros = 0;

  std::optional<double> ratio() const;
};

// Replays the workload with the order engine once per initial-order
// heuristic and prints one line per heuristic. Throws Error{CheckFailed} if
// the heuristics ever disagree on a core number.
std::vector<HeuristicRow> cmd_heuristics(const LoadedGraph& loaded, const std::vector<WorkloadOp>& ops,
                                         std::uint64_t seed, std::ostream& out);

}  // namespace kcore
