#include "kcore/order_engine.hpp"

#include <algorithm>

#include "kcore/error.hpp"

namespace kcore {

namespace {

using Clock = std::chrono::steady_clock;

void check_insertable(const DynamicGraph& g, VertexId u, VertexId v) {
  if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
  if (g.contains(u) && g.contains(v) && g.has_edge(u, v)) {
    throw Error(Errc::DuplicateEdge, std::to_string(u) + " " + std::to_string(v));
  }
}

}  // namespace

OrderEngine::OrderEngine(DynamicGraph g, Heuristic heuristic, std::uint64_t seed, EngineOptions options)
    : g_(std::move(g)), opts_(options) {
  auto d = core_decompose(g_, heuristic, seed);
  st_ = std::move(d.state);
  order_ = std::move(d.order);
  const std::size_t n = g_.num_vertices();
  ext_.assign(n, 0);
  flags_.assign(n, 0);
  vc_seq_.assign(n, 0);
  mark_.assign(n, 0);
  heap_.resize(n);
  peel_.resize(n);
}

void OrderEngine::grow_to(VertexId v) {
  while (g_.num_vertices() <= v) {
    const VertexId id = g_.add_vertex();
    order_.add_vertex();
    order_.append_tail(id, 0);
    st_.core.push_back(0);
    st_.rem.push_back(0);
    st_.mcd.push_back(0);
    ext_.push_back(0);
    flags_.push_back(0);
    vc_seq_.push_back(0);
    mark_.push_back(0);
  }
  heap_.resize(g_.num_vertices());
  peel_.resize(g_.num_vertices());
}

void OrderEngine::touch(VertexId v) {
  if (ext_[v] == 0 && flags_[v] == 0) touched_.push_back(v);
}

void OrderEngine::reset_scratch() {
  for (VertexId v : touched_) {
    ext_[v] = 0;
    flags_[v] = 0;
  }
  touched_.clear();
  vc_list_.clear();
  queue_.clear();
  heap_.clear();
}

void OrderEngine::place_after(VertexId x, VertexId tail) {
  if (tail == kNoVertex) {
    order_.move_to_front(x);
  } else if (tail != x) {
    order_.reposition_after(x, tail);
  }
}

// Removes w's rejection from the remaining candidates and peels off every
// candidate that can no longer reach K+1 neighbors. Peeled vertices are
// appended to the new O_K prefix right after `tail`, which advances.
void OrderEngine::remove_candidates(VertexId w, CoreValue k, VertexId& tail, std::uint64_t& work) {
  auto& rem = st_.rem;
  auto& core = st_.core;
  auto enqueue_if_short = [&](VertexId x) {
    if (!(flags_[x] & kInQueue) && rem[x] + ext_[x] <= k) {
      flags_[x] |= kInQueue;
      queue_.push_back(x);
    }
  };
  for (VertexId x : g_.neighbors(w)) {
    ++work;
    if (!(flags_[x] & kInVC)) continue;
    --rem[x];
    enqueue_if_short(x);
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const VertexId x = queue_[head];
    rem[x] += ext_[x];
    ext_[x] = 0;
    flags_[x] = static_cast<std::uint8_t>((flags_[x] & ~(kInVC | kInQueue)) | kSettled);
    for (VertexId y : g_.neighbors(x)) {
      ++work;
      if (core[y] != k) continue;
      if (!(flags_[y] & (kInVC | kSettled)) && order_.precedes(w, y)) {
        // Not yet visited: x no longer counts toward y's ext.
        if (--ext_[y] == 0) heap_.erase(y);
      } else if (flags_[y] & kInVC) {
        if (vc_seq_[x] < vc_seq_[y]) {
          --ext_[y];
        } else {
          --rem[y];
        }
        enqueue_if_short(y);
      }
    }
    place_after(x, tail);
    tail = x;
  }
  queue_.clear();
}

UpdateResult OrderEngine::insert_edge(VertexId a, VertexId b) {
  const auto start = Clock::now();
  check_insertable(g_, a, b);
  grow_to(std::max(a, b));
  g_.insert_edge(a, b);

  auto& core = st_.core;
  auto& rem = st_.rem;
  auto& mcd = st_.mcd;
  const std::uint64_t steps_before = order_.steps() + heap_.steps();
  std::uint64_t work = 0;

  const CoreValue k = std::min(core[a], core[b]);
  if (core[a] <= core[b]) ++mcd[a];
  if (core[b] <= core[a]) ++mcd[b];
  const VertexId u = core[a] != core[b] ? (core[a] < core[b] ? a : b) : (order_.precedes(a, b) ? a : b);
  ++rem[u];

  UpdateResult result;
  result.direction = Direction::Insert;
  result.k = k;

  if (rem[u] > k) {
    VertexId tail = order_.prev(u);
    std::uint32_t seq = 0;
    std::size_t expanded = 0;
    VertexId cur = u;
    touch(u);
    heap_.push(u, order_.rank_within(u));
    while (cur != kNoVertex) {
      heap_.erase(cur);
      if (ext_[cur] + rem[cur] > k) {
        // cur may reach core K+1; keep it as a candidate.
        touch(cur);
        flags_[cur] |= kInVC;
        vc_seq_[cur] = seq++;
        vc_list_.push_back(cur);
        ++expanded;
        if (opts_.track_expanded) result.expanded.push_back(cur);
        for (VertexId w : g_.neighbors(cur)) {
          ++work;
          if (core[w] != k || (flags_[w] & (kInVC | kSettled)) || !order_.precedes(cur, w)) continue;
          touch(w);
          if (ext_[w]++ == 0) heap_.push(w, order_.rank_within(w));
        }
        cur = order_.next(cur);
      } else if (ext_[cur] == 0) {
        // Nothing supports cur or its successors up to the next
        // candidate, so they keep their places.
        if (heap_.empty()) {
          tail = order_.back(k);
          cur = kNoVertex;
        } else {
          cur = heap_.top();
          tail = order_.prev(cur);
        }
      } else {
        // cur has candidate support but not enough of it.
        ++expanded;
        if (opts_.track_expanded) result.expanded.push_back(cur);
        const VertexId nxt = order_.next(cur);
        rem[cur] += ext_[cur];
        ext_[cur] = 0;
        flags_[cur] |= kSettled;
        tail = cur;
        remove_candidates(cur, k, tail, work);
        cur = nxt;
      }
    }
    (void)tail;

    for (VertexId w : vc_list_) {
      if (flags_[w] & kInVC) result.vstar.push_back(w);
    }
    for (VertexId w : result.vstar) {
      core[w] = k + 1;
      order_.remove(w);
    }
    order_.insert_head_block(result.vstar, k + 1);
    refresh_mcd(g_, core, mcd, result.vstar, Direction::Insert, mark_, nullptr, &work);
    result.visited = expanded;
    reset_scratch();
  }

  result.work = work + (order_.steps() + heap_.steps() - steps_before);
  result.elapsed = Clock::now() - start;
  if (opts_.checked) verify("insert");
  return result;
}

UpdateResult OrderEngine::remove_edge(VertexId a, VertexId b) {
  const auto start = Clock::now();
  if (!g_.contains(a) || !g_.contains(b) || !g_.has_edge(a, b)) {
    throw Error(Errc::MissingEdge, std::to_string(a) + " " + std::to_string(b));
  }
  auto& core = st_.core;
  auto& rem = st_.rem;
  auto& mcd = st_.mcd;
  const std::uint64_t steps_before = order_.steps();
  std::uint64_t work = 0;

  const CoreValue k = std::min(core[a], core[b]);
  --rem[order_.precedes(a, b) ? a : b];
  g_.remove_edge(a, b);
  if (core[a] <= core[b]) --mcd[a];
  if (core[b] <= core[a]) --mcd[b];

  UpdateResult result;
  result.direction = Direction::Remove;
  result.k = k;
  const VertexId roots[] = {a, b};
  result.vstar = peel_find_vstar(g_, core, mcd, roots, k, peel_, &result.visited, &work);

  for (VertexId w : result.vstar) flags_[w] = kPending;
  for (VertexId w : result.vstar) {
    // w moves to the tail of O_{K-1}, ahead of everything left in O_K.
    std::uint32_t later = 0;
    for (VertexId z : g_.neighbors(w)) {
      ++work;
      if (core[z] == k && order_.precedes(z, w)) --rem[z];
      if (core[z] >= k || (flags_[z] & kPending)) ++later;
    }
    rem[w] = later;
    flags_[w] = 0;
    order_.remove(w);
    order_.append_tail(w, k - 1);
  }
  refresh_mcd(g_, core, mcd, result.vstar, Direction::Remove, mark_, nullptr, &work);
  if (opts_.track_expanded) result.expanded = result.vstar;

  result.work = work + (order_.steps() - steps_before);
  result.elapsed = Clock::now() - start;
  if (opts_.checked) verify("remove");
  return result;
}

std::optional<std::string> OrderEngine::self_check() const {
  if (auto bad = g_.invariant_violation()) return "graph: " + *bad;
  if (auto bad = order_.structure_violation()) return "order index: " + *bad;
  if (auto check = validate_korder(g_, st_, order_); !check) return "k-order: " + check.diagnostic;
  const auto mcd = compute_mcd(g_, st_.core);
  for (VertexId v = 0; v < mcd.size(); ++v) {
    if (mcd[v] != st_.mcd[v]) {
      return "mcd of vertex " + std::to_string(v) + " is " + std::to_string(st_.mcd[v]) + ", expected " +
             std::to_string(mcd[v]);
    }
  }
  for (VertexId v = 0; v < ext_.size(); ++v) {
    if (ext_[v] != 0 || flags_[v] != 0) return "scratch not cleared at vertex " + std::to_string(v);
  }
  return std::nullopt;
}

void OrderEngine::verify(const char* op) const {
  if (auto bad = self_check()) throw Error(Errc::InternalInvariant, std::string(op) + ": " + *bad);
}

}  // namespace kcore
