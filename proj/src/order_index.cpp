#include "kcore/order_index.hpp"

#include <algorithm>
#include <utility>

#include "kcore/error.hpp"

namespace kcore {

KOrder::KOrder(std::size_t n, std::uint64_t seed)
    : bucket_(n, kNoBucket),
      left_(n, kNoVertex),
      right_(n, kNoVertex),
      parent_(n, kNoVertex),
      prev_(n, kNoVertex),
      next_(n, kNoVertex),
      size_(n, 0),
      priority_(n, 0),
      rng_state_(seed) {}

VertexId KOrder::add_vertex() {
  bucket_.push_back(kNoBucket);
  left_.push_back(kNoVertex);
  right_.push_back(kNoVertex);
  parent_.push_back(kNoVertex);
  prev_.push_back(kNoVertex);
  next_.push_back(kNoVertex);
  size_.push_back(0);
  priority_.push_back(0);
  return static_cast<VertexId>(bucket_.size() - 1);
}

std::uint64_t KOrder::next_priority() noexcept {
  // splitmix64
  std::uint64_t z = (rng_state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void KOrder::require_indexed(VertexId v) const {
  if (!indexed(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " is not in the k-order");
}

CoreValue KOrder::bucket_of(VertexId v) const {
  require_indexed(v);
  return bucket_[v];
}

KOrder::Bucket& KOrder::ensure_bucket(CoreValue k) {
  if (k >= buckets_.size()) buckets_.resize(static_cast<std::size_t>(k) + 1);
  return buckets_[k];
}

void KOrder::init_node(VertexId v, CoreValue k) {
  if (v >= bucket_.size()) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " out of range");
  if (bucket_[v] != kNoBucket) throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v) + " is already indexed");
  bucket_[v] = k;
  left_[v] = right_[v] = parent_[v] = kNoVertex;
  prev_[v] = next_[v] = kNoVertex;
  size_[v] = 1;
  priority_[v] = next_priority();
}

void KOrder::pull(VertexId v) noexcept { size_[v] = 1 + size_of(left_[v]) + size_of(right_[v]); }

// Rotates v above its parent, keeping in-order sequence and sizes.
void KOrder::rotate_up(VertexId v) {
  const VertexId p = parent_[v];
  const VertexId g = parent_[p];
  if (left_[p] == v) {
    left_[p] = right_[v];
    if (right_[v] != kNoVertex) parent_[right_[v]] = p;
    right_[v] = p;
  } else {
    right_[p] = left_[v];
    if (left_[v] != kNoVertex) parent_[left_[v]] = p;
    left_[v] = p;
  }
  parent_[p] = v;
  parent_[v] = g;
  if (g == kNoVertex) {
    buckets_[bucket_[v]].root = v;
  } else if (left_[g] == p) {
    left_[g] = v;
  } else {
    right_[g] = v;
  }
  pull(p);
  pull(v);
  ++steps_;
}

void KOrder::sift_up(VertexId v) {
  while (parent_[v] != kNoVertex && priority_[v] > priority_[parent_[v]]) rotate_up(v);
}

void KOrder::grow_ancestors(VertexId v) {
  for (VertexId x = parent_[v]; x != kNoVertex; x = parent_[x]) {
    ++size_[x];
    ++steps_;
  }
}

void KOrder::tree_attach_leftmost(Bucket& b, VertexId v) {
  if (b.root == kNoVertex) {
    b.root = v;
    return;
  }
  VertexId x = b.root;
  while (left_[x] != kNoVertex) {
    x = left_[x];
    ++steps_;
  }
  left_[x] = v;
  parent_[v] = x;
  grow_ancestors(v);
  sift_up(v);
}

void KOrder::tree_attach_rightmost(Bucket& b, VertexId v) {
  if (b.root == kNoVertex) {
    b.root = v;
    return;
  }
  VertexId x = b.root;
  while (right_[x] != kNoVertex) {
    x = right_[x];
    ++steps_;
  }
  right_[x] = v;
  parent_[v] = x;
  grow_ancestors(v);
  sift_up(v);
}

// v becomes the in-order successor of pred: the leftmost slot of pred's
// right subtree.
void KOrder::tree_attach_after(Bucket& b, VertexId pred, VertexId v) {
  (void)b;
  if (right_[pred] == kNoVertex) {
    right_[pred] = v;
    parent_[v] = pred;
  } else {
    VertexId x = right_[pred];
    while (left_[x] != kNoVertex) {
      x = left_[x];
      ++steps_;
    }
    left_[x] = v;
    parent_[v] = x;
  }
  grow_ancestors(v);
  sift_up(v);
}

void KOrder::tree_detach(Bucket& b, VertexId v) {
  // Rotate v down to a leaf, promoting the higher-priority child.
  while (left_[v] != kNoVertex || right_[v] != kNoVertex) {
    VertexId c;
    if (left_[v] == kNoVertex) {
      c = right_[v];
    } else if (right_[v] == kNoVertex) {
      c = left_[v];
    } else {
      c = priority_[left_[v]] > priority_[right_[v]] ? left_[v] : right_[v];
    }
    rotate_up(c);
  }
  const VertexId p = parent_[v];
  if (p == kNoVertex) {
    b.root = kNoVertex;
  } else {
    if (left_[p] == v) {
      left_[p] = kNoVertex;
    } else {
      right_[p] = kNoVertex;
    }
    for (VertexId x = p; x != kNoVertex; x = parent_[x]) {
      --size_[x];
      ++steps_;
    }
  }
  parent_[v] = kNoVertex;
  size_[v] = 1;
}

void KOrder::list_link_after(Bucket& b, VertexId pred, VertexId v) {
  if (pred == kNoVertex) {
    prev_[v] = kNoVertex;
    next_[v] = b.head;
    if (b.head != kNoVertex) prev_[b.head] = v;
    b.head = v;
    if (b.tail == kNoVertex) b.tail = v;
  } else {
    prev_[v] = pred;
    next_[v] = next_[pred];
    if (next_[pred] != kNoVertex) {
      prev_[next_[pred]] = v;
    } else {
      b.tail = v;
    }
    next_[pred] = v;
  }
  ++b.count;
}

void KOrder::list_unlink(Bucket& b, VertexId v) {
  if (prev_[v] != kNoVertex) {
    next_[prev_[v]] = next_[v];
  } else {
    b.head = next_[v];
  }
  if (next_[v] != kNoVertex) {
    prev_[next_[v]] = prev_[v];
  } else {
    b.tail = prev_[v];
  }
  prev_[v] = next_[v] = kNoVertex;
  --b.count;
}

std::size_t KOrder::rank_within(VertexId v) const {
  require_indexed(v);
  std::size_t r = size_of(left_[v]) + 1;
  for (VertexId x = v; parent_[x] != kNoVertex; x = parent_[x]) {
    const VertexId p = parent_[x];
    if (right_[p] == x) r += size_of(left_[p]) + 1;
    ++steps_;
  }
  return r;
}

bool KOrder::precedes(VertexId u, VertexId v) const {
  require_indexed(u);
  require_indexed(v);
  if (u == v) return false;
  if (bucket_[u] != bucket_[v]) return bucket_[u] < bucket_[v];
  return rank_within(u) < rank_within(v);
}

void KOrder::remove(VertexId v) {
  require_indexed(v);
  Bucket& b = buckets_[bucket_[v]];
  tree_detach(b, v);
  list_unlink(b, v);
  bucket_[v] = kNoBucket;
  size_[v] = 0;
}

void KOrder::insert_head_block(std::span<const VertexId> vs, CoreValue k) {
  Bucket& b = ensure_bucket(k);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
    init_node(*it, k);
    list_link_after(b, kNoVertex, *it);
    tree_attach_leftmost(b, *it);
  }
}

void KOrder::append_tail(VertexId v, CoreValue k) {
  Bucket& b = ensure_bucket(k);
  init_node(v, k);
  list_link_after(b, b.tail, v);
  tree_attach_rightmost(b, v);
}

void KOrder::reposition_after(VertexId v, VertexId pred) {
  require_indexed(v);
  require_indexed(pred);
  if (v == pred) throw Error(Errc::InvalidArgument, "cannot reposition a vertex after itself");
  if (bucket_[v] != bucket_[pred]) {
    throw Error(Errc::DifferentBuckets, "vertices " + std::to_string(v) + " and " + std::to_string(pred));
  }
  if (prev_[v] == pred) return;
  Bucket& b = buckets_[bucket_[v]];
  tree_detach(b, v);
  list_unlink(b, v);
  list_link_after(b, pred, v);
  tree_attach_after(b, pred, v);
}

void KOrder::move_to_front(VertexId v) {
  require_indexed(v);
  if (prev_[v] == kNoVertex) return;
  Bucket& b = buckets_[bucket_[v]];
  tree_detach(b, v);
  list_unlink(b, v);
  list_link_after(b, kNoVertex, v);
  tree_attach_leftmost(b, v);
}

std::vector<VertexId> KOrder::bucket_contents(CoreValue k) const {
  std::vector<VertexId> out;
  if (k >= buckets_.size()) return out;
  out.reserve(buckets_[k].count);
  for (VertexId v = buckets_[k].head; v != kNoVertex; v = next_[v]) out.push_back(v);
  return out;
}

std::vector<VertexId> KOrder::tree_inorder(CoreValue k) const {
  std::vector<VertexId> out;
  if (k >= buckets_.size()) return out;
  std::vector<VertexId> stack;
  VertexId x = buckets_[k].root;
  while (x != kNoVertex || !stack.empty()) {
    while (x != kNoVertex) {
      stack.push_back(x);
      x = left_[x];
    }
    x = stack.back();
    stack.pop_back();
    out.push_back(x);
    x = right_[x];
  }
  return out;
}

std::size_t KOrder::tree_height(CoreValue k) const {
  if (k >= buckets_.size() || buckets_[k].root == kNoVertex) return 0;
  std::size_t height = 0;
  std::vector<std::pair<VertexId, std::size_t>> stack{{buckets_[k].root, 1}};
  while (!stack.empty()) {
    auto [x, d] = stack.back();
    stack.pop_back();
    height = std::max(height, d);
    if (left_[x] != kNoVertex) stack.emplace_back(left_[x], d + 1);
    if (right_[x] != kNoVertex) stack.emplace_back(right_[x], d + 1);
  }
  return height;
}

std::size_t KOrder::total_nodes() const noexcept {
  std::size_t total = 0;
  for (const auto& b : buckets_) total += b.root == kNoVertex ? 0 : size_[b.root];
  return total;
}

std::optional<std::string> KOrder::structure_violation() const {
  std::size_t indexed_count = 0;
  for (CoreValue c : bucket_) indexed_count += c != kNoBucket;
  std::size_t listed = 0;
  for (CoreValue k = 0; k < buckets_.size(); ++k) {
    const Bucket& b = buckets_[k];
    const auto list = bucket_contents(k);
    const auto tree = tree_inorder(k);
    listed += list.size();
    const std::string where = "bucket " + std::to_string(k);
    if (list.size() != b.count) return where + ": count does not match list length";
    if (list != tree) return where + ": list and tree in-order differ";
    if (b.root != kNoVertex && parent_[b.root] != kNoVertex) return where + ": root has a parent";
    if (b.root != kNoVertex && size_[b.root] != b.count) return where + ": root size does not match count";
    VertexId before = kNoVertex;
    for (VertexId v : list) {
      if (bucket_[v] != k) return where + ": vertex " + std::to_string(v) + " carries the wrong bucket";
      if (prev_[v] != before) return where + ": broken prev link at " + std::to_string(v);
      before = v;
      if (size_[v] != 1 + size_of(left_[v]) + size_of(right_[v])) return where + ": stale size at " + std::to_string(v);
      for (VertexId c : {left_[v], right_[v]}) {
        if (c == kNoVertex) continue;
        if (parent_[c] != v) return where + ": broken parent link at " + std::to_string(c);
        if (priority_[c] > priority_[v]) return where + ": heap order violated at " + std::to_string(c);
      }
    }
    if (b.tail != before) return where + ": tail mismatch";
  }
  if (listed != indexed_count) return "indexed vertices missing from buckets";
  return std::nullopt;
}

void CandidateHeap::place(std::size_t i, Entry e) noexcept {
  heap_[i] = e;
  slot_[e.vertex] = static_cast<std::uint32_t>(i);
}

void CandidateHeap::sift_up(std::size_t i) noexcept {
  while (i > 0) {
    const std::size_t p = (i - 1) / 2;
    if (!less(i, p)) break;
    Entry a = heap_[i];
    place(i, heap_[p]);
    place(p, a);
    i = p;
    ++steps_;
  }
}

void CandidateHeap::sift_down(std::size_t i) noexcept {
  const std::size_t n = heap_.size();
  for (;;) {
    std::size_t best = i;
    const std::size_t l = 2 * i + 1;
    const std::size_t r = l + 1;
    if (l < n && less(l, best)) best = l;
    if (r < n && less(r, best)) best = r;
    if (best == i) break;
    Entry a = heap_[i];
    place(i, heap_[best]);
    place(best, a);
    i = best;
    ++steps_;
  }
}

void CandidateHeap::push(VertexId v, std::uint64_t key) {
  if (v >= slot_.size()) slot_.resize(static_cast<std::size_t>(v) + 1, kAbsent);
  if (slot_[v] != kAbsent) throw Error(Errc::InvalidArgument, "vertex already in heap");
  heap_.push_back({key, v});
  slot_[v] = static_cast<std::uint32_t>(heap_.size() - 1);
  sift_up(heap_.size() - 1);
}

VertexId CandidateHeap::pop() {
  const VertexId v = heap_.front().vertex;
  erase(v);
  return v;
}

void CandidateHeap::erase(VertexId v) {
  if (!contains(v)) return;
  const std::size_t i = slot_[v];
  slot_[v] = kAbsent;
  const Entry last = heap_.back();
  heap_.pop_back();
  if (i == heap_.size()) return;
  place(i, last);
  sift_up(i);
  sift_down(slot_[last.vertex]);
}

void CandidateHeap::clear() {
  for (const auto& e : heap_) slot_[e.vertex] = kAbsent;
  heap_.clear();
}

}  // namespace kcore
