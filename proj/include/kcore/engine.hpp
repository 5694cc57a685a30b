#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kcore/graph.hpp"

namespace kcore {

enum class Direction { Insert, Remove };

// Outcome of one edge update.
struct UpdateResult {
  Direction direction = Direction::Insert;
  // min(core(u), core(v)) before the update.
  CoreValue k = 0;
  // Vertices whose core changed, in discovery order.
  std::vector<VertexId> vstar;
  // Insertions: vertices expanded to decide V* (V+ for the order engine,
  // V' for the traversal engine). Removals: vertices touched by peeling.
  std::size_t visited = 0;
  // The expanded vertices themselves, filled only when tracking is enabled.
  std::vector<VertexId> expanded;
  // Adjacency entries scanned plus tree and heap node steps.
  std::uint64_t work = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct EngineOptions {
#ifdef NDEBUG
  bool checked = false;
#else
  bool checked = true;
#endif
  bool track_expanded = false;
};

// Common face of the maintenance engines. Endpoints beyond the current vertex
// range are created as isolated vertices (core 0) before an insertion.
class CoreMaintainer {
 public:
  virtual ~CoreMaintainer() = default;

  virtual std::string_view name() const noexcept = 0;
  virtual UpdateResult insert_edge(VertexId u, VertexId v) = 0;
  virtual UpdateResult remove_edge(VertexId u, VertexId v) = 0;
  virtual const DynamicGraph& graph() const noexcept = 0;
  virtual std::span<const CoreValue> cores() const noexcept = 0;
  // Verifies the engine's auxiliary state against its definitions.
  virtual std::optional<std::string> self_check() const = 0;

  CoreValue core(VertexId v) const { return cores()[v]; }
};

// Reusable per-vertex buffers for peel_find_vstar.
struct PeelScratch {
  std::vector<std::uint32_t> cd;
  std::vector<std::uint8_t> seen;
  std::vector<VertexId> touched;

  void resize(std::size_t n) {
    cd.resize(n, 0);
    seen.resize(n, 0);
  }
};

// Finds the vertices that drop from core K after an edge removal by peeling
// from the roots: cd starts at mcd and every vertex whose cd falls below K
// leaves, lowering cd of its core-K neighbors. Cores of the returned
// vertices are decremented in place; the list is in peeling order.
std::vector<VertexId> peel_find_vstar(const DynamicGraph& g, std::span<CoreValue> core,
                                      std::span<const std::uint32_t> mcd, std::span<const VertexId> roots,
                                      CoreValue k, PeelScratch& scratch, std::size_t* visited = nullptr,
                                      std::uint64_t* work = nullptr);

// Restores the mcd definition after the cores of vstar moved by one in
// `direction` (cores already updated). Recomputes mcd on vstar and adjusts
// the affected neighbors. `mark` must be all zero and is left so. Vertices
// whose mcd changed are appended to `changed` when given.
void refresh_mcd(const DynamicGraph& g, std::span<const CoreValue> core, std::span<std::uint32_t> mcd,
                 std::span<const VertexId> vstar, Direction direction, std::vector<std::uint8_t>& mark,
                 std::vector<VertexId>* changed = nullptr, std::uint64_t* work = nullptr);

// Recomputes every core array from scratch after each update. Serves as the
// slow third opinion in agreement runs.
class OracleEngine final : public CoreMaintainer {
 public:
  explicit OracleEngine(DynamicGraph g);

  std::string_view name() const noexcept override { return "oracle"; }
  UpdateResult insert_edge(VertexId u, VertexId v) override;
  UpdateResult remove_edge(VertexId u, VertexId v) override;
  const DynamicGraph& graph() const noexcept override { return g_; }
  std::span<const CoreValue> cores() const noexcept override { return core_; }
  std::optional<std::string> self_check() const override { return std::nullopt; }

 private:
  UpdateResult recompute(Direction d, CoreValue k);

  DynamicGraph g_;
  std::vector<CoreValue> core_;
};

}  // namespace kcore
