#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kcore/graph.hpp"

namespace kcore {

// The k-order as a sequence of buckets O_0 O_1 O_2 ..., bucket k holding the
// vertices of core number k in order.
//
// Every bucket is a doubly linked list for O(1) traversal, mirrored by a
// treap whose in-order traversal equals the list. Tree nodes carry subtree
// sizes, so the rank of a vertex is found by walking from its node to the
// root; node storage is indexed by vertex id, which provides the
// vertex -> node map a rank query needs to find its starting point.
//
// Two simpler encodings were considered and rejected. Real-valued labels
// (midpoint insertion) run out of floating point precision after enough
// updates. Plain integer ranks give O(1) comparisons but every insertion
// or removal shifts O(|O_k|) ranks.
//
// Insertions only ever happen at the head of a bucket, at its tail, or
// directly after a known vertex, so no insertion needs a key comparison.
// Empty buckets are retained.
class KOrder {
 public:
  static constexpr CoreValue kNoBucket = static_cast<CoreValue>(-1);

  explicit KOrder(std::size_t n = 0, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

  std::size_t num_vertices() const noexcept { return bucket_.size(); }
  VertexId add_vertex();

  bool indexed(VertexId v) const noexcept { return v < bucket_.size() && bucket_[v] != kNoBucket; }
  CoreValue bucket_of(VertexId v) const;

  std::size_t num_buckets() const noexcept { return buckets_.size(); }
  std::size_t bucket_size(CoreValue k) const noexcept { return k < buckets_.size() ? buckets_[k].count : 0; }
  VertexId front(CoreValue k) const noexcept { return k < buckets_.size() ? buckets_[k].head : kNoVertex; }
  VertexId back(CoreValue k) const noexcept { return k < buckets_.size() ? buckets_[k].tail : kNoVertex; }
  VertexId next(VertexId v) const noexcept { return next_[v]; }
  VertexId prev(VertexId v) const noexcept { return prev_[v]; }

  // u strictly before v. Throws Error{UnknownVertex}.
  bool precedes(VertexId u, VertexId v) const;
  // 1-based position inside the vertex's bucket. Throws Error{UnknownVertex}.
  std::size_t rank_within(VertexId v) const;

  // Throws Error{UnknownVertex}.
  void remove(VertexId v);
  // vs must be unindexed and listed in their mutual order; the bucket becomes
  // vs followed by its old contents.
  void insert_head_block(std::span<const VertexId> vs, CoreValue k);
  void append_tail(VertexId v, CoreValue k);
  // Moves v to immediately after pred. Throws Error{UnknownVertex} and
  // Error{DifferentBuckets}; v == pred is an InvalidArgument.
  void reposition_after(VertexId v, VertexId pred);
  // Moves v to the head of its bucket. Throws Error{UnknownVertex}.
  void move_to_front(VertexId v);

  // Vertices of bucket k in list order.
  std::vector<VertexId> bucket_contents(CoreValue k) const;
  // Vertices of bucket k by in-order tree traversal.
  std::vector<VertexId> tree_inorder(CoreValue k) const;
  std::size_t tree_height(CoreValue k) const;
  // Total number of tree nodes across all buckets.
  std::size_t total_nodes() const noexcept;

  // Tree shape, sizes, parent links, heap priorities and agreement between
  // list and tree. Returns the first problem found.
  std::optional<std::string> structure_violation() const;

  // Node visits performed by tree operations; instrumentation only.
  std::uint64_t steps() const noexcept { return steps_; }

 private:
  struct Bucket {
    VertexId root = kNoVertex;
    VertexId head = kNoVertex;
    VertexId tail = kNoVertex;
    std::size_t count = 0;
  };

  void require_indexed(VertexId v) const;
  Bucket& ensure_bucket(CoreValue k);
  void init_node(VertexId v, CoreValue k);
  std::uint32_t size_of(VertexId v) const noexcept { return v == kNoVertex ? 0 : size_[v]; }
  void pull(VertexId v) noexcept;
  void rotate_up(VertexId v);
  void sift_up(VertexId v);
  void grow_ancestors(VertexId v);
  void tree_attach_leftmost(Bucket& b, VertexId v);
  void tree_attach_rightmost(Bucket& b, VertexId v);
  void tree_attach_after(Bucket& b, VertexId pred, VertexId v);
  void tree_detach(Bucket& b, VertexId v);
  void list_link_after(Bucket& b, VertexId pred, VertexId v);
  void list_unlink(Bucket& b, VertexId v);
  std::uint64_t next_priority() noexcept;

  std::vector<Bucket> buckets_;
  std::vector<CoreValue> bucket_;
  std::vector<VertexId> left_, right_, parent_;
  std::vector<VertexId> prev_, next_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint64_t> priority_;
  std::uint64_t rng_state_;
  mutable std::uint64_t steps_ = 0;
};

// Indexed binary min-heap of (key, vertex) pairs with O(log) arbitrary
// removal through a vertex -> slot table.
class CandidateHeap {
 public:
  explicit CandidateHeap(std::size_t n = 0) : slot_(n, kAbsent) {}

  void resize(std::size_t n) { slot_.resize(n, kAbsent); }
  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  bool contains(VertexId v) const noexcept { return v < slot_.size() && slot_[v] != kAbsent; }

  void push(VertexId v, std::uint64_t key);
  VertexId top() const noexcept { return heap_.front().vertex; }
  std::uint64_t top_key() const noexcept { return heap_.front().key; }
  VertexId pop();
  // No-op when v is absent.
  void erase(VertexId v);
  void clear();

  std::uint64_t steps() const noexcept { return steps_; }

 private:
  static constexpr std::uint32_t kAbsent = static_cast<std::uint32_t>(-1);
  struct Entry {
    std::uint64_t key;
    VertexId vertex;
  };
  bool less(std::size_t a, std::size_t b) const noexcept {
    return heap_[a].key < heap_[b].key || (heap_[a].key == heap_[b].key && heap_[a].vertex < heap_[b].vertex);
  }
  void place(std::size_t i, Entry e) noexcept;
  void sift_up(std::size_t i) noexcept;
  void sift_down(std::size_t i) noexcept;

  std::vector<Entry> heap_;
  std::vector<std::uint32_t> slot_;
  std::uint64_t steps_ = 0;
};

}  // namespace kcore
