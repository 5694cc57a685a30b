#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kcore/graph.hpp"
#include "kcore/order_index.hpp"

// Brute-force ground truth. Nothing here shares code with the maintenance
// engines or with core_decompose; the region routines are plain flood fills.
namespace kcore::oracle {

// Repeatedly deletes a globally minimum-degree vertex found by linear scan.
// O(n^2 + m); meant for desk-scale instances.
std::vector<CoreValue> naive_cores(const DynamicGraph& g);

// Maximal connected set of vertices sharing core(v), containing v.
std::vector<VertexId> subcore(const DynamicGraph& g, std::span<const CoreValue> core, VertexId v);

// {v} plus every vertex reachable from v through equal-core vertices whose
// mcd exceeds their core.
std::vector<VertexId> purecore(const DynamicGraph& g, std::span<const CoreValue> core,
                               std::span<const std::uint32_t> mcd, VertexId v);

// Every vertex reachable from v by equal-core edges that go strictly
// forward in the k-order.
std::vector<VertexId> ordercore(const DynamicGraph& g, std::span<const CoreValue> core, const KOrder& order,
                                VertexId v);

struct RegionSizes {
  std::vector<std::uint32_t> subcore;
  std::vector<std::uint32_t> purecore;
  std::vector<std::uint32_t> ordercore;
};

// |sc(v)|, |pc(v)| and |oc(v)| for every vertex, computed independently per
// vertex across OpenMP threads.
RegionSizes region_sizes(const DynamicGraph& g, std::span<const CoreValue> core,
                         std::span<const std::uint32_t> mcd, const KOrder& order);

namespace serial {
RegionSizes region_sizes(const DynamicGraph& g, std::span<const CoreValue> core,
                         std::span<const std::uint32_t> mcd, const KOrder& order);
}  // namespace serial

}  // namespace kcore::oracle
