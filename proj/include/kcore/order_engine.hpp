#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcore/decomp.hpp"
#include "kcore/engine.hpp"
#include "kcore/order_index.hpp"

namespace kcore {

// Core maintenance driven by the k-order.
//
// Insertion walks O_K forward from the lower endpoint and only expands
// vertices whose rem plus ext (earlier candidate neighbors) exceeds K,
// jumping over runs of untouched vertices with a heap of pending
// candidates. Rejected candidates are peeled off into the new O_K prefix by
// remove_candidates. Removal peels from the endpoints and moves every vertex
// that drops to the tail of O_{K-1}.
//
// With checked mode on, every update is followed by a full validation of
// the order, rem and mcd; a mismatch throws Error{InternalInvariant}.
class OrderEngine final : public CoreMaintainer {
 public:
  explicit OrderEngine(DynamicGraph g, Heuristic heuristic = Heuristic::SmallRemFirst, std::uint64_t seed = 1,
                       EngineOptions options = {});

  std::string_view name() const noexcept override { return "order"; }
  UpdateResult insert_edge(VertexId u, VertexId v) override;
  UpdateResult remove_edge(VertexId u, VertexId v) override;
  const DynamicGraph& graph() const noexcept override { return g_; }
  std::span<const CoreValue> cores() const noexcept override { return st_.core; }
  std::optional<std::string> self_check() const override;

  const CoreState& state() const noexcept { return st_; }
  const KOrder& order() const noexcept { return order_; }
  void set_checked(bool on) noexcept { opts_.checked = on; }

 private:
  enum Flag : std::uint8_t {
    kInVC = 1,      // expanded with enough support, still a candidate
    kInQueue = 2,   // queued for removal from the candidates
    kSettled = 4,   // placed in the new O_K prefix
    kPending = 8,   // demoted but not yet processed in the removal peel
  };

  void grow_to(VertexId v);
  void remove_candidates(VertexId w, CoreValue k, VertexId& tail, std::uint64_t& work);
  void place_after(VertexId x, VertexId tail);
  void touch(VertexId v);
  void reset_scratch();
  void verify(const char* op) const;

  DynamicGraph g_;
  CoreState st_;
  KOrder order_;
  EngineOptions opts_;

  std::vector<std::uint32_t> ext_;
  std::vector<std::uint8_t> flags_;
  std::vector<std::uint32_t> vc_seq_;
  std::vector<VertexId> vc_list_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> touched_;
  std::vector<std::uint8_t> mark_;
  CandidateHeap heap_;
  PeelScratch peel_;
};

}  // namespace kcore
