#include "kcore/oracle.hpp"

#include <algorithm>
#include <functional>

#include "kcore/error.hpp"

namespace kcore::oracle {

std::vector<CoreValue> naive_cores(const DynamicGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<bool> alive(n, true);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<CoreValue> core(n, 0);
  CoreValue level = 0;
  for (std::size_t round = 0; round < n; ++round) {
    VertexId best = kNoVertex;
    for (VertexId v = 0; v < n; ++v) {
      if (alive[v] && (best == kNoVertex || deg[v] < deg[best])) best = v;
    }
    level = std::max<CoreValue>(level, static_cast<CoreValue>(deg[best]));
    core[best] = level;
    alive[best] = false;
    for (VertexId w : g.neighbors(best)) {
      if (alive[w]) --deg[w];
    }
  }
  return core;
}

namespace {

// Flood fill from v over neighbors accepted by `admit`, using a stamp
// array so that repeated fills need no clearing.
class Flood {
 public:
  explicit Flood(std::size_t n) : stamp_(n, 0) {}

  template <typename Admit>
  std::size_t run(const DynamicGraph& g, VertexId v, Admit&& admit, std::vector<VertexId>* out = nullptr) {
    ++epoch_;
    stack_.clear();
    stack_.push_back(v);
    stamp_[v] = epoch_;
    std::size_t count = 0;
    while (!stack_.empty()) {
      const VertexId x = stack_.back();
      stack_.pop_back();
      ++count;
      if (out) out->push_back(x);
      for (VertexId w : g.neighbors(x)) {
        if (stamp_[w] == epoch_ || !admit(x, w)) continue;
        stamp_[w] = epoch_;
        stack_.push_back(w);
      }
    }
    return count;
  }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<VertexId> stack_;
  std::uint32_t epoch_ = 0;
};

void check_vertex(const DynamicGraph& g, VertexId v) {
  if (!g.contains(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
}

std::vector<std::uint32_t> bucket_positions(const KOrder& order) {
  std::vector<std::uint32_t> pos(order.num_vertices(), 0);
  for (CoreValue k = 0; k < order.num_buckets(); ++k) {
    std::uint32_t i = 0;
    for (VertexId v = order.front(k); v != kNoVertex; v = order.next(v)) pos[v] = i++;
  }
  return pos;
}

std::vector<VertexId> sorted(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

}  // namespace

std::vector<VertexId> subcore(const DynamicGraph& g, std::span<const CoreValue> core, VertexId v) {
  check_vertex(g, v);
  std::vector<VertexId> out;
  Flood(g.num_vertices()).run(g, v, [&](VertexId, VertexId w) { return core[w] == core[v]; }, &out);
  return sorted(std::move(out));
}

std::vector<VertexId> purecore(const DynamicGraph& g, std::span<const CoreValue> core,
                               std::span<const std::uint32_t> mcd, VertexId v) {
  check_vertex(g, v);
  std::vector<VertexId> out;
  Flood(g.num_vertices())
      .run(g, v, [&](VertexId, VertexId w) { return core[w] == core[v] && mcd[w] > core[w]; }, &out);
  return sorted(std::move(out));
}

std::vector<VertexId> ordercore(const DynamicGraph& g, std::span<const CoreValue> core, const KOrder& order,
                                VertexId v) {
  check_vertex(g, v);
  std::vector<VertexId> out;
  Flood(g.num_vertices())
      .run(g, v, [&](VertexId x, VertexId w) { return core[w] == core[x] && order.precedes(x, w); }, &out);
  return sorted(std::move(out));
}

namespace {

template <typename Loop>
RegionSizes region_sizes_impl(const DynamicGraph& g, std::span<const CoreValue> core,
                              std::span<const std::uint32_t> mcd, const KOrder& order, Loop&& loop) {
  const std::size_t n = g.num_vertices();
  RegionSizes out{std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
  const auto pos = bucket_positions(order);
  auto forward = [&](VertexId x, VertexId w) { return core[w] == core[x] && pos[w] > pos[x]; };
  loop(n, [&](Flood& flood, VertexId v) {
    out.subcore[v] = static_cast<std::uint32_t>(
        flood.run(g, v, [&](VertexId, VertexId w) { return core[w] == core[v]; }));
    out.purecore[v] = static_cast<std::uint32_t>(
        flood.run(g, v, [&](VertexId, VertexId w) { return core[w] == core[v] && mcd[w] > core[w]; }));
    out.ordercore[v] = static_cast<std::uint32_t>(flood.run(g, v, forward));
  });
  return out;
}

}  // namespace

RegionSizes region_sizes(const DynamicGraph& g, std::span<const CoreValue> core,
                         std::span<const std::uint32_t> mcd, const KOrder& order) {
  return region_sizes_impl(g, core, mcd, order, [](std::size_t n, auto&& body) {
    const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel
    {
      Flood flood(n);
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t v = 0; v < count; ++v) body(flood, static_cast<VertexId>(v));
    }
  });
}

namespace serial {

RegionSizes region_sizes(const DynamicGraph& g, std::span<const CoreValue> core,
                         std::span<const std::uint32_t> mcd, const KOrder& order) {
  return region_sizes_impl(g, core, mcd, order, [](std::size_t n, auto&& body) {
    Flood flood(n);
    for (VertexId v = 0; v < n; ++v) body(flood, v);
  });
}

}  // namespace serial

}  // namespace kcore::oracle
