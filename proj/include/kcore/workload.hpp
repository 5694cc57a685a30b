#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kcore/graph.hpp"

namespace kcore {

enum class OpKind { Insert, Remove, QueryCore };

struct WorkloadOp {
  OpKind kind = OpKind::Insert;
  VertexId u = 0;
  VertexId v = 0;  // unused for QueryCore

  friend bool operator==(const WorkloadOp&, const WorkloadOp&) = default;
};

char op_letter(OpKind kind) noexcept;

// One op per line: "I u v", "R u v" or "Q u"; '#' starts a comment line.
// Labels are resolved through `names`; labels not seen before are interned
// and so name new vertices. Throws Error{ParseError} with the line number.
std::vector<WorkloadOp> parse_workload(std::istream& in, VertexNames& names);
std::vector<WorkloadOp> parse_workload_file(const std::string& path, VertexNames& names);
void write_workload(std::ostream& out, const std::vector<WorkloadOp>& ops, const VertexNames& names);

// Present edges of an evolving graph with O(1) uniform sampling and removal.
class EdgePool {
 public:
  EdgePool() = default;
  explicit EdgePool(const DynamicGraph& g);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(VertexId u, VertexId v) const { return slot_.count(key(u, v)) != 0; }
  void add(VertexId u, VertexId v);
  void erase(VertexId u, VertexId v);
  template <class Rng>
  std::pair<VertexId, VertexId> sample(Rng& rng) const {
    std::uniform_int_distribution<std::size_t> pick(0, edges_.size() - 1);
    return edges_[pick(rng)];
  }

 private:
  static std::uint64_t key(VertexId u, VertexId v) noexcept {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::unordered_map<std::uint64_t, std::size_t> slot_;
};

enum class MixPolicy {
  Alternate,  // insert, remove, insert, ... (insert when nothing is left to remove)
  Random,     // each op is an insert or a remove with equal probability
};

// `count` insert/remove ops valid against g as it evolves, over g's vertex
// set. Inserted pairs are uniform over absent pairs, removals uniform over
// present edges. Deterministic for a fixed seed.
std::vector<WorkloadOp> random_mixed_ops(const DynamicGraph& g, std::size_t count, std::uint64_t seed,
                                         MixPolicy policy = MixPolicy::Alternate);

// Removes the `count` latest timed edges (by timestamp, file order breaking
// ties) from the graph and returns their insertions in time order.
std::vector<WorkloadOp> derive_latest(LoadedGraph& loaded, std::size_t count);

// Removes `count` edges sampled uniformly from the graph and returns their
// insertions in random order.
std::vector<WorkloadOp> derive_sample(DynamicGraph& g, std::size_t count, std::uint64_t seed);

}  // namespace kcore
