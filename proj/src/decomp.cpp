#include "kcore/decomp.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "kcore/error.hpp"

namespace kcore {

std::string_view heuristic_name(Heuristic h) noexcept {
  switch (h) {
    case Heuristic::SmallRemFirst: return "small";
    case Heuristic::LargeRemFirst: return "large";
    case Heuristic::RandomRemFirst: return "random";
  }
  return "?";
}

std::optional<Heuristic> parse_heuristic(std::string_view text) noexcept {
  if (text == "small" || text == "small-rem-first") return Heuristic::SmallRemFirst;
  if (text == "large" || text == "large-rem-first") return Heuristic::LargeRemFirst;
  if (text == "random" || text == "random-rem-first") return Heuristic::RandomRemFirst;
  return std::nullopt;
}

namespace {

// Residual degrees plus per-degree min-heaps of vertex ids. An entry in
// bin d is live while the vertex is unremoved and still has degree d;
// stale entries are discarded lazily.
class DegreeBins {
 public:
  explicit DegreeBins(const DynamicGraph& g) : deg_(g.num_vertices()), removed_(g.num_vertices(), 0) {
    std::size_t max_deg = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      deg_[v] = static_cast<std::uint32_t>(g.degree(v));
      max_deg = std::max<std::size_t>(max_deg, deg_[v]);
    }
    bins_.resize(max_deg + 1);
    // Ascending ids already satisfy the min-heap property.
    for (VertexId v = 0; v < g.num_vertices(); ++v) bins_[deg_[v]].push_back(v);
  }

  std::size_t num_bins() const noexcept { return bins_.size(); }
  std::uint32_t degree(VertexId v) const noexcept { return deg_[v]; }
  bool removed(VertexId v) const noexcept { return removed_[v] != 0; }

  // Smallest live id in bin d, or kNoVertex.
  VertexId top(std::uint32_t d) {
    auto& bin = bins_[d];
    while (!bin.empty()) {
      const VertexId v = bin.front();
      if (!removed_[v] && deg_[v] == d) return v;
      std::pop_heap(bin.begin(), bin.end(), std::greater<>{});
      bin.pop_back();
    }
    return kNoVertex;
  }

  // Removes v and returns the degree it had; neighbors lose one degree.
  template <typename OnDecrement>
  std::uint32_t take(const DynamicGraph& g, VertexId v, OnDecrement&& on_decrement) {
    removed_[v] = 1;
    for (VertexId w : g.neighbors(v)) {
      if (removed_[w]) continue;
      const std::uint32_t d = --deg_[w];
      bins_[d].push_back(w);
      std::push_heap(bins_[d].begin(), bins_[d].end(), std::greater<>{});
      on_decrement(w, d);
    }
    return deg_[v];
  }

 private:
  std::vector<std::uint32_t> deg_;
  std::vector<std::uint8_t> removed_;
  std::vector<std::vector<VertexId>> bins_;
};

void record(Decomposition& out, VertexId v, CoreValue k, std::uint32_t residual) {
  out.state.core[v] = k;
  out.state.rem[v] = residual;
  out.order.append_tail(v, k);
}

void peel_small_first(const DynamicGraph& g, Decomposition& out) {
  DegreeBins bins(g);
  const std::size_t n = g.num_vertices();
  std::uint32_t low = 0;
  CoreValue k = 0;
  for (std::size_t done = 0; done < n; ++done) {
    VertexId v = kNoVertex;
    while ((v = bins.top(low)) == kNoVertex) ++low;
    k = std::max<CoreValue>(k, low);
    const std::uint32_t residual = bins.take(g, v, [&](VertexId, std::uint32_t d) { low = std::min(low, d); });
    record(out, v, k, residual);
  }
}

void peel_large_first(const DynamicGraph& g, Decomposition& out) {
  DegreeBins bins(g);
  const std::size_t n = g.num_vertices();
  std::uint32_t threshold = 1;  // candidates have residual degree < threshold
  std::uint32_t high = 0;
  std::size_t done = 0;
  while (done < n) {
    VertexId v = kNoVertex;
    for (;;) {
      v = bins.top(high);
      if (v != kNoVertex || high == 0) break;
      --high;
    }
    if (v == kNoVertex) {
      ++threshold;
      high = std::min<std::uint32_t>(threshold - 1, static_cast<std::uint32_t>(bins.num_bins() - 1));
      continue;
    }
    const std::uint32_t residual = bins.take(g, v, [&](VertexId, std::uint32_t d) {
      if (d < threshold) high = std::max(high, d);
    });
    record(out, v, threshold - 1, residual);
    ++done;
  }
}

void peel_random(const DynamicGraph& g, Decomposition& out, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> deg(n);
  std::size_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    max_deg = std::max<std::size_t>(max_deg, deg[v]);
  }
  constexpr std::uint32_t kGone = static_cast<std::uint32_t>(-2);
  std::vector<std::vector<VertexId>> lists(max_deg + 1);
  std::vector<std::uint32_t> where(n);  // slot in lists[deg] or pool, tagged by state
  std::vector<std::uint8_t> pooled(n, 0);
  std::vector<VertexId> pool;

  auto add_pool = [&](VertexId v) {
    pooled[v] = 1;
    where[v] = static_cast<std::uint32_t>(pool.size());
    pool.push_back(v);
  };
  auto add_list = [&](VertexId v) {
    where[v] = static_cast<std::uint32_t>(lists[deg[v]].size());
    lists[deg[v]].push_back(v);
  };
  auto drop_list = [&](VertexId v) {
    auto& list = lists[deg[v]];
    const VertexId last = list.back();
    list[where[v]] = last;
    where[last] = where[v];
    list.pop_back();
  };

  std::uint32_t threshold = 1;
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] < threshold) {
      add_pool(v);
    } else {
      add_list(v);
    }
  }
  std::mt19937_64 rng(seed);
  std::size_t done = 0;
  while (done < n) {
    if (pool.empty()) {
      ++threshold;
      if (threshold - 1 < lists.size()) {
        for (VertexId v : lists[threshold - 1]) add_pool(v);
        lists[threshold - 1].clear();
      }
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t i = pick(rng);
    const VertexId v = pool[i];
    pool[i] = pool.back();
    where[pool[i]] = static_cast<std::uint32_t>(i);
    pool.pop_back();
    pooled[v] = 0;
    where[v] = kGone;

    for (VertexId w : g.neighbors(v)) {
      if (where[w] == kGone) continue;
      if (pooled[w]) {
        --deg[w];
        continue;
      }
      drop_list(w);
      --deg[w];
      if (deg[w] < threshold) {
        add_pool(w);
      } else {
        add_list(w);
      }
    }
    record(out, v, threshold - 1, deg[v]);
    ++done;
  }
}

}  // namespace

Decomposition core_decompose(const DynamicGraph& g, Heuristic heuristic, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  Decomposition out{CoreState{std::vector<CoreValue>(n, 0), std::vector<std::uint32_t>(n, 0), {}},
                    KOrder(n, seed ^ 0x5bd1e995ULL)};
  switch (heuristic) {
    case Heuristic::SmallRemFirst: peel_small_first(g, out); break;
    case Heuristic::LargeRemFirst: peel_large_first(g, out); break;
    case Heuristic::RandomRemFirst: peel_random(g, out, seed); break;
  }
  out.state.mcd = compute_mcd(g, out.state.core);
  return out;
}

namespace {

std::uint32_t mcd_of(const DynamicGraph& g, std::span<const CoreValue> core, VertexId u) {
  std::uint32_t count = 0;
  for (VertexId w : g.neighbors(u)) count += core[w] >= core[u];
  return count;
}

std::uint32_t pcd_of(const DynamicGraph& g, std::span<const CoreValue> core, std::span<const std::uint32_t> mcd,
                     VertexId u) {
  std::uint32_t count = 0;
  for (VertexId w : g.neighbors(u)) {
    count += core[w] > core[u] || (core[w] == core[u] && mcd[w] > core[w]);
  }
  return count;
}

void require_sizes(const DynamicGraph& g, std::size_t a, std::size_t b = static_cast<std::size_t>(-1)) {
  if (a != g.num_vertices() || (b != static_cast<std::size_t>(-1) && b != g.num_vertices())) {
    throw Error(Errc::InvalidArgument, "per-vertex array does not match the vertex count");
  }
}

// Positions of every indexed vertex inside its bucket, from a list walk.
std::vector<std::uint32_t> bucket_positions(const KOrder& order) {
  std::vector<std::uint32_t> pos(order.num_vertices(), 0);
  for (CoreValue k = 0; k < order.num_buckets(); ++k) {
    std::uint32_t i = 0;
    for (VertexId v = order.front(k); v != kNoVertex; v = order.next(v)) pos[v] = i++;
  }
  return pos;
}

// Empty string when v is fine.
std::string korder_problem(const DynamicGraph& g, const CoreState& state, const KOrder& order,
                           std::span<const std::uint32_t> pos, VertexId v) {
  if (!order.indexed(v)) return "vertex " + std::to_string(v) + " is not in the k-order";
  const CoreValue k = order.bucket_of(v);
  if (k != state.core[v]) {
    return "vertex " + std::to_string(v) + " has core " + std::to_string(state.core[v]) + " but sits in O_" +
           std::to_string(k);
  }
  std::uint32_t later = 0;
  for (VertexId w : g.neighbors(v)) {
    if (!order.indexed(w)) continue;
    const CoreValue kw = order.bucket_of(w);
    later += kw > k || (kw == k && pos[w] > pos[v]);
  }
  if (later != state.rem[v]) {
    return "vertex " + std::to_string(v) + " in O_" + std::to_string(k) + " has " + std::to_string(later) +
           " later neighbors but stored rem " + std::to_string(state.rem[v]);
  }
  if (later > k) {
    return "vertex " + std::to_string(v) + " in O_" + std::to_string(k) + " has rem " + std::to_string(later) +
           " > " + std::to_string(k);
  }
  return {};
}

KOrderCheck make_check(const DynamicGraph& g, const CoreState& state, const KOrder& order,
                       std::span<const std::uint32_t> pos, VertexId bad) {
  KOrderCheck check;
  if (bad == kNoVertex) return check;
  check.ok = false;
  check.vertex = bad;
  check.diagnostic = korder_problem(g, state, order, pos, bad);
  return check;
}

std::optional<KOrderCheck> shape_problem(const DynamicGraph& g, const CoreState& state, const KOrder& order) {
  const std::size_t n = g.num_vertices();
  if (state.core.size() != n || state.rem.size() != n || order.num_vertices() < n) {
    KOrderCheck check;
    check.ok = false;
    check.diagnostic = "state arrays do not cover every vertex";
    return check;
  }
  return std::nullopt;
}

}  // namespace

namespace serial {

std::vector<std::uint32_t> compute_mcd(const DynamicGraph& g, std::span<const CoreValue> core) {
  require_sizes(g, core.size());
  std::vector<std::uint32_t> mcd(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u) mcd[u] = mcd_of(g, core, u);
  return mcd;
}

std::vector<std::uint32_t> compute_pcd(const DynamicGraph& g, std::span<const CoreValue> core,
                                       std::span<const std::uint32_t> mcd) {
  require_sizes(g, core.size(), mcd.size());
  std::vector<std::uint32_t> pcd(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u) pcd[u] = pcd_of(g, core, mcd, u);
  return pcd;
}

KOrderCheck validate_korder(const DynamicGraph& g, const CoreState& state, const KOrder& order) {
  if (auto bad = shape_problem(g, state, order)) return *bad;
  const auto pos = bucket_positions(order);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!korder_problem(g, state, order, pos, v).empty()) return make_check(g, state, order, pos, v);
  }
  return {};
}

}  // namespace serial

std::vector<std::uint32_t> compute_mcd(const DynamicGraph& g, std::span<const CoreValue> core) {
  require_sizes(g, core.size());
  const std::int64_t n = static_cast<std::int64_t>(g.num_vertices());
  std::vector<std::uint32_t> mcd(g.num_vertices());
#pragma omp parallel for schedule(dynamic, 512)
  for (std::int64_t u = 0; u < n; ++u) mcd[u] = mcd_of(g, core, static_cast<VertexId>(u));
  return mcd;
}

std::vector<std::uint32_t> compute_pcd(const DynamicGraph& g, std::span<const CoreValue> core,
                                       std::span<const std::uint32_t> mcd) {
  require_sizes(g, core.size(), mcd.size());
  const std::int64_t n = static_cast<std::int64_t>(g.num_vertices());
  std::vector<std::uint32_t> pcd(g.num_vertices());
#pragma omp parallel for schedule(dynamic, 512)
  for (std::int64_t u = 0; u < n; ++u) pcd[u] = pcd_of(g, core, mcd, static_cast<VertexId>(u));
  return pcd;
}

KOrderCheck validate_korder(const DynamicGraph& g, const CoreState& state, const KOrder& order) {
  if (auto bad = shape_problem(g, state, order)) return *bad;
  const auto pos = bucket_positions(order);
  const std::int64_t n = static_cast<std::int64_t>(g.num_vertices());
  std::int64_t first_bad = n;
#pragma omp parallel for schedule(dynamic, 512) reduction(min : first_bad)
  for (std::int64_t v = 0; v < n; ++v) {
    if (v < first_bad && !korder_problem(g, state, order, pos, static_cast<VertexId>(v)).empty()) first_bad = v;
  }
  return make_check(g, state, order, pos, first_bad == n ? kNoVertex : static_cast<VertexId>(first_bad));
}

}  // namespace kcore
