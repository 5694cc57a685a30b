#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kcore/graph.hpp"
#include "kcore/order_index.hpp"

namespace kcore {

// Per-vertex core number plus the auxiliaries the order-based engine keeps
// between updates: rem (neighbors later in the k-order) and mcd (neighbors
// of core at least the vertex's own).
struct CoreState {
  std::vector<CoreValue> core;
  std::vector<std::uint32_t> rem;
  std::vector<std::uint32_t> mcd;
};

// How peeling picks among removable vertices when it generates the
// initial k-order.
enum class Heuristic { SmallRemFirst, LargeRemFirst, RandomRemFirst };

std::string_view heuristic_name(Heuristic h) noexcept;
// Accepts "small", "large", "random" and the long forms.
std::optional<Heuristic> parse_heuristic(std::string_view text) noexcept;

struct Decomposition {
  CoreState state;
  KOrder order;
};

// Core decomposition by peeling with per-degree buckets. Records the
// removal order into KOrder buckets and each vertex's residual degree at
// removal time as rem. Ties among equally good candidates go to the
// smallest vertex id; RandomRemFirst draws uniformly from all vertices of
// residual degree below the current threshold using `seed`.
Decomposition core_decompose(const DynamicGraph& g, Heuristic heuristic = Heuristic::SmallRemFirst,
                             std::uint64_t seed = 1);

// mcd(u) = |{w in nbr(u) : core(w) >= core(u)}|.
std::vector<std::uint32_t> compute_mcd(const DynamicGraph& g, std::span<const CoreValue> core);

// pcd(u) = |{w in nbr(u) : core(w) > core(u) or (core(w) = core(u) and mcd(w) > core(w))}|.
std::vector<std::uint32_t> compute_pcd(const DynamicGraph& g, std::span<const CoreValue> core,
                                       std::span<const std::uint32_t> mcd);

struct KOrderCheck {
  bool ok = true;
  VertexId vertex = kNoVertex;  // first violating vertex
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

// Every vertex sits in the bucket of its core number, and for each v in O_k
// the number of neighbors after v equals the stored rem(v) and is <= k.
KOrderCheck validate_korder(const DynamicGraph& g, const CoreState& state, const KOrder& order);

// Single-threaded references for the scans above, kept for cross-checking
// and benchmarking.
namespace serial {
std::vector<std::uint32_t> compute_mcd(const DynamicGraph& g, std::span<const CoreValue> core);
std::vector<std::uint32_t> compute_pcd(const DynamicGraph& g, std::span<const CoreValue> core,
                                       std::span<const std::uint32_t> mcd);
KOrderCheck validate_korder(const DynamicGraph& g, const CoreState& state, const KOrder& order);
}  // namespace serial

}  // namespace kcore
