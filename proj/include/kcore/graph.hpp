#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kcore {

using VertexId = std::uint32_t;
using CoreValue = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Undirected simple graph over dense ids 0..n-1.
//
// Each adjacency list is a plain vector; a hash table maps the ordered pair
// (u, v) to the slot of v inside adj(u), which gives O(1) expected
// membership tests and swap-with-last removal. Neighbor order is therefore
// unspecified and changes under removal.
class DynamicGraph {
 public:
  DynamicGraph() = default;
  explicit DynamicGraph(std::size_t n) : adj_(n) {}

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return m_; }

  VertexId add_vertex();
  // Grows the vertex set so that v is a valid id.
  void ensure_vertex(VertexId v);

  // Throws Error{SelfLoop|DuplicateEdge}. Missing endpoints are created.
  void insert_edge(VertexId u, VertexId v);
  // Throws Error{MissingEdge}. Isolated vertices are kept.
  void remove_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  bool contains(VertexId v) const noexcept { return v < adj_.size(); }

  std::span<const VertexId> neighbors(VertexId u) const { return adj_[u]; }
  std::size_t degree(VertexId u) const { return adj_[u].size(); }

  // Every undirected edge once, as (min, max), sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  // Symmetry, simplicity and the m / degree-sum identity. Returns a
  // description of the first violation, if any.
  std::optional<std::string> invariant_violation() const;

 private:
  static std::uint64_t key(VertexId u, VertexId v) noexcept {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  void unlink(VertexId u, VertexId v);

  std::vector<std::vector<VertexId>> adj_;
  std::unordered_map<std::uint64_t, std::uint32_t> slot_;
  std::size_t m_ = 0;
};

// Bidirectional map between external vertex labels and dense ids.
class VertexNames {
 public:
  VertexId intern(const std::string& name);
  std::optional<VertexId> find(const std::string& name) const;
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
};

struct TimedEdge {
  VertexId u;
  VertexId v;
  std::int64_t time;
};

struct LoadedGraph {
  DynamicGraph graph;
  VertexNames names;
  // Kept edges that carried a third column, in file order.
  std::vector<TimedEdge> timed_edges;
  std::size_t skipped_duplicates = 0;
  std::size_t skipped_self_loops = 0;
};

// Edge-list text: "u v" or "u v t" per line, '#' starts a comment line, a
// single-token line declares an isolated vertex. Labels are arbitrary
// non-whitespace tokens, remapped to dense ids in order of first appearance.
// Duplicate edges (either orientation) and self-loops are skipped and
// counted. Throws Error{ParseError} with the line number.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

// Writes edges sorted by (min id, max id) followed by declarations for
// isolated vertices. Output is a pure function of the graph and names.
void write_edge_list(std::ostream& out, const DynamicGraph& g, const VertexNames& names);

}  // namespace kcore
