#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "kcore/gen.hpp"
#include "kcore/graph.hpp"
#include "kcore/order_index.hpp"

namespace kcore::testing {

inline VertexId id(const VertexNames& names, const std::string& label) { return *names.find(label); }

inline LoadedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

// Number of neighbors of v placed after v in the k-order, from scratch.
inline std::uint32_t later_neighbors(const DynamicGraph& g, const KOrder& order, VertexId v) {
  std::uint32_t n = 0;
  for (VertexId w : g.neighbors(v)) n += order.precedes(v, w);
  return n;
}

inline DynamicGraph complete_graph(VertexId n) {
  DynamicGraph g(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) g.insert_edge(i, j);
  }
  return g;
}

}  // namespace kcore::testing
