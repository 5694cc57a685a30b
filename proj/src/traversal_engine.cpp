#include "kcore/traversal_engine.hpp"

#include <algorithm>

#include "kcore/decomp.hpp"
#include "kcore/error.hpp"

namespace kcore {

namespace {

using Clock = std::chrono::steady_clock;

std::uint32_t pcd_of(const DynamicGraph& g, std::span<const CoreValue> core, std::span<const std::uint32_t> mcd,
                     VertexId u) {
  std::uint32_t n = 0;
  for (VertexId w : g.neighbors(u)) {
    n += core[w] > core[u] || (core[w] == core[u] && mcd[w] > core[w]);
  }
  return n;
}

}  // namespace

void refresh_pcd(const DynamicGraph& g, std::span<const CoreValue> core, std::span<const std::uint32_t> mcd,
                 std::span<std::uint32_t> pcd, std::span<const VertexId> dirty, std::vector<std::uint8_t>& mark,
                 std::uint64_t* work) {
  if (mark.size() < g.num_vertices()) mark.resize(g.num_vertices(), 0);
  std::vector<VertexId> region;
  auto add = [&](VertexId v) {
    if (!mark[v]) {
      mark[v] = 1;
      region.push_back(v);
    }
  };
  std::uint64_t scanned = 0;
  for (VertexId d : dirty) {
    add(d);
    for (VertexId w : g.neighbors(d)) add(w);
    scanned += g.degree(d);
  }
  for (VertexId v : region) {
    pcd[v] = pcd_of(g, core, mcd, v);
    scanned += g.degree(v);
    mark[v] = 0;
  }
  if (work) *work += scanned;
}

TraversalEngine::TraversalEngine(DynamicGraph g, EngineOptions options)
    : g_(std::move(g)), opts_(options) {
  core_ = core_decompose(g_).state.core;
  mcd_ = compute_mcd(g_, core_);
  pcd_ = compute_pcd(g_, core_, mcd_);
  const std::size_t n = g_.num_vertices();
  cd_.assign(n, 0);
  flags_.assign(n, 0);
  mark_.assign(n, 0);
  peel_.resize(n);
}

void TraversalEngine::grow_to(VertexId v) {
  while (g_.num_vertices() <= v) {
    g_.add_vertex();
    core_.push_back(0);
    mcd_.push_back(0);
    pcd_.push_back(0);
    cd_.push_back(0);
    flags_.push_back(0);
    mark_.push_back(0);
  }
  peel_.resize(g_.num_vertices());
}

// Evicts x and cascades to visited neighbors whose count drops to K.
void TraversalEngine::evict(VertexId x, CoreValue k, std::uint64_t& work) {
  flags_[x] |= kEvicted;
  queue_.assign(1, x);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    // Only vertices with mcd > K were counted in their neighbors' pcd.
    if (mcd_[queue_[head]] <= k) continue;
    for (VertexId z : g_.neighbors(queue_[head])) {
      ++work;
      if (core_[z] != k) continue;
      if (cd_[z] == 0 && flags_[z] == 0) touched_.push_back(z);
      --cd_[z];
      if ((flags_[z] & kVisited) && !(flags_[z] & kEvicted) && cd_[z] <= k) {
        flags_[z] |= kEvicted;
        queue_.push_back(z);
      }
    }
  }
  queue_.clear();
}

UpdateResult TraversalEngine::insert_edge(VertexId a, VertexId b) {
  const auto start = Clock::now();
  if (a == b) throw Error(Errc::SelfLoop, "vertex " + std::to_string(a));
  if (g_.contains(a) && g_.contains(b) && g_.has_edge(a, b)) {
    throw Error(Errc::DuplicateEdge, std::to_string(a) + " " + std::to_string(b));
  }
  grow_to(std::max(a, b));
  g_.insert_edge(a, b);
  std::uint64_t work = 0;

  const CoreValue k = std::min(core_[a], core_[b]);
  if (core_[a] <= core_[b]) ++mcd_[a];
  if (core_[b] <= core_[a]) ++mcd_[b];
  const VertexId ends[] = {a, b};
  refresh_pcd(g_, core_, mcd_, pcd_, ends, mark_, &work);
  const VertexId root = core_[a] <= core_[b] ? a : b;

  UpdateResult result;
  result.direction = Direction::Insert;
  result.k = k;

  auto visit = [&](VertexId x) {
    if (cd_[x] == 0 && flags_[x] == 0) touched_.push_back(x);
    flags_[x] |= kVisited;
    cd_[x] += pcd_[x];
    ++result.visited;
    if (opts_.track_expanded) result.expanded.push_back(x);
  };
  visit(root);
  stack_.assign(1, root);
  while (!stack_.empty()) {
    const VertexId x = stack_.back();
    stack_.pop_back();
    if (flags_[x] & kEvicted) continue;
    if (cd_[x] > static_cast<std::int64_t>(k)) {
      children_.clear();
      for (VertexId w : g_.neighbors(x)) {
        ++work;
        if (core_[w] == k && mcd_[w] > k && !(flags_[w] & kVisited)) children_.push_back(w);
      }
      // Smallest id is explored first.
      std::sort(children_.begin(), children_.end(), std::greater<>());
      for (VertexId w : children_) {
        visit(w);
        stack_.push_back(w);
      }
    } else {
      evict(x, k, work);
    }
  }

  for (VertexId x : touched_) {
    if ((flags_[x] & kVisited) && !(flags_[x] & kEvicted)) result.vstar.push_back(x);
    cd_[x] = 0;
    flags_[x] = 0;
  }
  touched_.clear();
  for (VertexId x : result.vstar) core_[x] = k + 1;

  std::vector<VertexId> dirty(result.vstar);
  refresh_mcd(g_, core_, mcd_, result.vstar, Direction::Insert, mark_, &dirty, &work);
  refresh_pcd(g_, core_, mcd_, pcd_, dirty, mark_, &work);

  result.work = work;
  result.elapsed = Clock::now() - start;
  if (opts_.checked) verify("insert");
  return result;
}

UpdateResult TraversalEngine::remove_edge(VertexId a, VertexId b) {
  const auto start = Clock::now();
  if (!g_.contains(a) || !g_.contains(b) || !g_.has_edge(a, b)) {
    throw Error(Errc::MissingEdge, std::to_string(a) + " " + std::to_string(b));
  }
  g_.remove_edge(a, b);
  std::uint64_t work = 0;

  const CoreValue k = std::min(core_[a], core_[b]);
  if (core_[a] <= core_[b]) --mcd_[a];
  if (core_[b] <= core_[a]) --mcd_[b];

  UpdateResult result;
  result.direction = Direction::Remove;
  result.k = k;
  const VertexId roots[] = {a, b};
  result.vstar = peel_find_vstar(g_, core_, mcd_, roots, k, peel_, &result.visited, &work);
  if (opts_.track_expanded) result.expanded = result.vstar;

  std::vector<VertexId> dirty{a, b};
  dirty.insert(dirty.end(), result.vstar.begin(), result.vstar.end());
  refresh_mcd(g_, core_, mcd_, result.vstar, Direction::Remove, mark_, &dirty, &work);
  refresh_pcd(g_, core_, mcd_, pcd_, dirty, mark_, &work);

  result.work = work;
  result.elapsed = Clock::now() - start;
  if (opts_.checked) verify("remove");
  return result;
}

std::optional<std::string> TraversalEngine::self_check() const {
  if (auto bad = g_.invariant_violation()) return "graph: " + *bad;
  const auto mcd = compute_mcd(g_, core_);
  const auto pcd = compute_pcd(g_, core_, mcd);
  for (VertexId v = 0; v < mcd.size(); ++v) {
    if (mcd[v] != mcd_[v]) return "mcd of vertex " + std::to_string(v) + " is stale";
    if (pcd[v] != pcd_[v]) return "pcd of vertex " + std::to_string(v) + " is stale";
  }
  return std::nullopt;
}

void TraversalEngine::verify(const char* op) const {
  if (auto bad = self_check()) throw Error(Errc::InternalInvariant, std::string(op) + ": " + *bad);
}

}  // namespace kcore
