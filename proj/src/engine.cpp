#include "kcore/engine.hpp"

#include <algorithm>

#include "kcore/error.hpp"
#include "kcore/oracle.hpp"

namespace kcore {

std::vector<VertexId> peel_find_vstar(const DynamicGraph& g, std::span<CoreValue> core,
                                      std::span<const std::uint32_t> mcd, std::span<const VertexId> roots,
                                      CoreValue k, PeelScratch& s, std::size_t* visited, std::uint64_t* work) {
  s.resize(g.num_vertices());
  std::vector<VertexId> vstar;
  std::uint64_t scanned = 0;
  auto touch = [&](VertexId w) {
    if (s.seen[w]) return;
    s.seen[w] = 1;
    s.cd[w] = mcd[w];
    s.touched.push_back(w);
  };
  for (VertexId r : roots) {
    if (core[r] != k) continue;
    touch(r);
    if (s.cd[r] < k) {
      core[r] = k - 1;
      vstar.push_back(r);
    }
  }
  for (std::size_t i = 0; i < vstar.size(); ++i) {
    for (VertexId z : g.neighbors(vstar[i])) {
      ++scanned;
      if (core[z] != k) continue;
      touch(z);
      if (--s.cd[z] < k) {
        core[z] = k - 1;
        vstar.push_back(z);
      }
    }
  }
  if (visited) *visited = s.touched.size();
  if (work) *work += scanned + roots.size();
  for (VertexId w : s.touched) s.seen[w] = 0;
  s.touched.clear();
  return vstar;
}

void refresh_mcd(const DynamicGraph& g, std::span<const CoreValue> core, std::span<std::uint32_t> mcd,
                 std::span<const VertexId> vstar, Direction direction, std::vector<std::uint8_t>& mark,
                 std::vector<VertexId>* changed, std::uint64_t* work) {
  if (vstar.empty()) return;
  if (mark.size() < g.num_vertices()) mark.resize(g.num_vertices(), 0);
  const CoreValue moved = core[vstar.front()];
  // Neighbors outside V* whose mcd counts V* differently now.
  const CoreValue affected = direction == Direction::Insert ? moved : moved + 1;
  for (VertexId w : vstar) mark[w] = 1;
  std::uint64_t scanned = 0;
  for (VertexId w : vstar) {
    std::uint32_t fresh = 0;
    for (VertexId z : g.neighbors(w)) {
      ++scanned;
      fresh += core[z] >= core[w];
      if (mark[z] || core[z] != affected) continue;
      if (direction == Direction::Insert) {
        ++mcd[z];
      } else {
        --mcd[z];
      }
      if (changed) changed->push_back(z);
    }
    if (fresh != mcd[w]) {
      mcd[w] = fresh;
      if (changed) changed->push_back(w);
    }
  }
  for (VertexId w : vstar) mark[w] = 0;
  if (work) *work += scanned;
}

OracleEngine::OracleEngine(DynamicGraph g) : g_(std::move(g)), core_(oracle::naive_cores(g_)) {}

UpdateResult OracleEngine::recompute(Direction d, CoreValue k) {
  auto fresh = oracle::naive_cores(g_);
  UpdateResult r;
  r.direction = d;
  r.k = k;
  for (VertexId v = 0; v < fresh.size(); ++v) {
    if (fresh[v] != core_[v]) r.vstar.push_back(v);
  }
  r.visited = r.vstar.size();
  core_ = std::move(fresh);
  return r;
}

UpdateResult OracleEngine::insert_edge(VertexId u, VertexId v) {
  const auto start = std::chrono::steady_clock::now();
  g_.insert_edge(u, v);
  core_.resize(g_.num_vertices(), 0);
  auto r = recompute(Direction::Insert, std::min(core_[u], core_[v]));
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

UpdateResult OracleEngine::remove_edge(VertexId u, VertexId v) {
  const auto start = std::chrono::steady_clock::now();
  g_.remove_edge(u, v);
  auto r = recompute(Direction::Remove, std::min(core_[u], core_[v]));
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace kcore
