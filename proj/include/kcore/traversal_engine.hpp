#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcore/engine.hpp"

namespace kcore {

// Recomputes pcd over dirty vertices and their neighbors. `mark` must be all
// zero and is left so.
void refresh_pcd(const DynamicGraph& g, std::span<const CoreValue> core, std::span<const std::uint32_t> mcd,
                 std::span<std::uint32_t> pcd, std::span<const VertexId> dirty, std::vector<std::uint8_t>& mark,
                 std::uint64_t* work = nullptr);

// Traversal-based maintenance keeping mcd and pcd.
//
// Insertion runs a depth-first search from the lower endpoint over core-K
// vertices with mcd > K; each visited vertex starts from its pcd, and
// vertices whose count cannot exceed K are evicted, cascading to their
// visited neighbors. Removal peels exactly like the order engine.
class TraversalEngine final : public CoreMaintainer {
 public:
  explicit TraversalEngine(DynamicGraph g, EngineOptions options = {});

  std::string_view name() const noexcept override { return "traversal"; }
  UpdateResult insert_edge(VertexId u, VertexId v) override;
  UpdateResult remove_edge(VertexId u, VertexId v) override;
  const DynamicGraph& graph() const noexcept override { return g_; }
  std::span<const CoreValue> cores() const noexcept override { return core_; }
  std::optional<std::string> self_check() const override;

  std::span<const std::uint32_t> mcd() const noexcept { return mcd_; }
  std::span<const std::uint32_t> pcd() const noexcept { return pcd_; }

 private:
  enum Flag : std::uint8_t { kVisited = 1, kEvicted = 2 };

  void grow_to(VertexId v);
  void evict(VertexId x, CoreValue k, std::uint64_t& work);
  void verify(const char* op) const;

  DynamicGraph g_;
  std::vector<CoreValue> core_;
  std::vector<std::uint32_t> mcd_;
  std::vector<std::uint32_t> pcd_;
  EngineOptions opts_;

  std::vector<std::int64_t> cd_;
  std::vector<std::uint8_t> flags_;
  std::vector<VertexId> touched_;
  std::vector<VertexId> stack_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> children_;
  std::vector<std::uint8_t> mark_;
  PeelScratch peel_;
};

}  // namespace kcore
