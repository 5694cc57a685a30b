#include "kcore/workload.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "kcore/error.hpp"

namespace kcore {

char op_letter(OpKind kind) noexcept {
  switch (kind) {
    case OpKind::Insert:
      return 'I';
    case OpKind::Remove:
      return 'R';
    case OpKind::QueryCore:
      return 'Q';
  }
  return '?';
}

std::vector<WorkloadOp> parse_workload(std::istream& in, VertexNames& names) {
  std::vector<WorkloadOp> ops;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string kind, a, b, extra;
    if (!(fields >> kind) || kind.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + why);
    };
    WorkloadOp op;
    if (kind == "I" || kind == "R") {
      op.kind = kind == "I" ? OpKind::Insert : OpKind::Remove;
      if (!(fields >> a >> b)) fail("'" + kind + "' needs two vertices");
    } else if (kind == "Q") {
      op.kind = OpKind::QueryCore;
      if (!(fields >> a)) fail("'Q' needs a vertex");
    } else {
      fail("unknown op '" + kind + "'");
    }
    if (fields >> extra) fail("trailing token '" + extra + "'");
    op.u = names.intern(a);
    op.v = op.kind == OpKind::QueryCore ? op.u : names.intern(b);
    ops.push_back(op);
  }
  return ops;
}

std::vector<WorkloadOp> parse_workload_file(const std::string& path, VertexNames& names) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  try {
    return parse_workload(in, names);
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw Error(Errc::ParseError, path + ": " + e.what());
    throw;
  }
}

void write_workload(std::ostream& out, const std::vector<WorkloadOp>& ops, const VertexNames& names) {
  for (const auto& op : ops) {
    out << op_letter(op.kind) << ' ' << names.name(op.u);
    if (op.kind != OpKind::QueryCore) out << ' ' << names.name(op.v);
    out << '\n';
  }
}

EdgePool::EdgePool(const DynamicGraph& g) {
  for (auto [u, v] : g.edges()) add(u, v);
}

void EdgePool::add(VertexId u, VertexId v) {
  slot_.emplace(key(u, v), edges_.size());
  edges_.emplace_back(u, v);
}

void EdgePool::erase(VertexId u, VertexId v) {
  auto it = slot_.find(key(u, v));
  if (it == slot_.end()) return;
  const std::size_t pos = it->second;
  slot_.erase(it);
  if (pos + 1 != edges_.size()) {
    edges_[pos] = edges_.back();
    slot_[key(edges_[pos].first, edges_[pos].second)] = pos;
  }
  edges_.pop_back();
}

std::vector<WorkloadOp> random_mixed_ops(const DynamicGraph& g, std::size_t count, std::uint64_t seed,
                                         MixPolicy policy) {
  const std::size_t n = g.num_vertices();
  const std::uint64_t capacity = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> vertex(0, n == 0 ? 0 : static_cast<VertexId>(n - 1));
  std::bernoulli_distribution coin(0.5);
  EdgePool pool(g);
  std::vector<WorkloadOp> ops;
  ops.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    bool insert = policy == MixPolicy::Alternate ? i % 2 == 0 : coin(rng);
    if (pool.empty()) insert = true;
    if (pool.size() >= capacity) insert = false;
    if (insert && capacity == 0) {
      throw Error(Errc::InvalidArgument, "no edge can be inserted or removed");
    }
    if (insert) {
      VertexId a, b;
      do {
        a = vertex(rng);
        b = vertex(rng);
      } while (a == b || pool.contains(a, b));
      pool.add(a, b);
      ops.push_back({OpKind::Insert, a, b});
    } else {
      auto [a, b] = pool.sample(rng);
      pool.erase(a, b);
      ops.push_back({OpKind::Remove, a, b});
    }
  }
  return ops;
}

std::vector<WorkloadOp> derive_latest(LoadedGraph& loaded, std::size_t count) {
  auto timed = loaded.timed_edges;
  if (count > timed.size()) {
    throw Error(Errc::InvalidArgument, "graph has " + std::to_string(timed.size()) + " timed edges, " +
                                           std::to_string(count) + " requested");
  }
  std::stable_sort(timed.begin(), timed.end(), [](const TimedEdge& x, const TimedEdge& y) { return x.time < y.time; });
  std::vector<WorkloadOp> ops;
  ops.reserve(count);
  for (std::size_t i = timed.size() - count; i < timed.size(); ++i) {
    loaded.graph.remove_edge(timed[i].u, timed[i].v);
    ops.push_back({OpKind::Insert, timed[i].u, timed[i].v});
  }
  return ops;
}

std::vector<WorkloadOp> derive_sample(DynamicGraph& g, std::size_t count, std::uint64_t seed) {
  auto edges = g.edges();
  if (count > edges.size()) {
    throw Error(Errc::InvalidArgument, "graph has " + std::to_string(edges.size()) + " edges, " +
                                           std::to_string(count) + " requested");
  }
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first `count` entries become a uniform sample
  // in uniform random order.
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, edges.size() - 1);
    std::swap(edges[i], edges[pick(rng)]);
  }
  std::vector<WorkloadOp> ops;
  ops.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    g.remove_edge(edges[i].first, edges[i].second);
    ops.push_back({OpKind::Insert, edges[i].first, edges[i].second});
  }
  return ops;
}

}  // namespace kcore
