#include "kcore/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kcore/error.hpp"

namespace kcore {

VertexId DynamicGraph::add_vertex() {
  adj_.emplace_back();
  return static_cast<VertexId>(adj_.size() - 1);
}

void DynamicGraph::ensure_vertex(VertexId v) {
  if (v >= adj_.size()) adj_.resize(static_cast<std::size_t>(v) + 1);
}

void DynamicGraph::insert_edge(VertexId u, VertexId v) {
  if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw Error(Errc::DuplicateEdge, std::to_string(u) + " " + std::to_string(v));
  }
  ensure_vertex(std::max(u, v));
  slot_.emplace(key(u, v), static_cast<std::uint32_t>(adj_[u].size()));
  adj_[u].push_back(v);
  slot_.emplace(key(v, u), static_cast<std::uint32_t>(adj_[v].size()));
  adj_[v].push_back(u);
  ++m_;
}

void DynamicGraph::unlink(VertexId u, VertexId v) {
  auto it = slot_.find(key(u, v));
  const std::uint32_t pos = it->second;
  slot_.erase(it);
  auto& list = adj_[u];
  const VertexId last = list.back();
  list[pos] = last;
  list.pop_back();
  if (last != v) slot_[key(u, last)] = pos;
}

void DynamicGraph::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v)) {
    throw Error(Errc::MissingEdge, std::to_string(u) + " " + std::to_string(v));
  }
  unlink(u, v);
  unlink(v, u);
  --m_;
}

bool DynamicGraph::has_edge(VertexId u, VertexId v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  return slot_.count(key(u, v)) != 0;
}

std::vector<std::pair<VertexId, VertexId>> DynamicGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(m_);
  for (VertexId u = 0; u < adj_.size(); ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> DynamicGraph::invariant_violation() const {
  std::size_t degree_sum = 0;
  for (VertexId u = 0; u < adj_.size(); ++u) {
    degree_sum += adj_[u].size();
    for (std::size_t i = 0; i < adj_[u].size(); ++i) {
      const VertexId v = adj_[u][i];
      if (v == u) return "self-loop at " + std::to_string(u);
      if (v >= adj_.size()) return "dangling neighbor of " + std::to_string(u);
      auto it = slot_.find(key(u, v));
      if (it == slot_.end() || it->second != i) {
        return "slot index out of sync at " + std::to_string(u);
      }
      if (!slot_.count(key(v, u))) {
        return "asymmetric edge " + std::to_string(u) + " " + std::to_string(v);
      }
    }
  }
  if (degree_sum != 2 * m_) return "degree sum does not equal 2m";
  if (slot_.size() != 2 * m_) return "slot table size does not equal 2m";
  return std::nullopt;
}

VertexId VertexNames::intern(const std::string& name) {
  auto [it, inserted] = ids_.try_emplace(name, static_cast<VertexId>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

std::optional<VertexId> VertexNames::find(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  LoadedGraph out;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#' || line[first] == '%') continue;

    tokens.clear();
    std::istringstream ss(line);
    for (std::string tok; ss >> tok;) tokens.push_back(std::move(tok));

    if (tokens.size() == 1) {
      const VertexId a = out.names.intern(tokens[0]);
      out.graph.ensure_vertex(a);
      continue;
    }
    if (tokens.size() > 3) parse_fail(line_no, "expected 'u v [t]', got " + std::to_string(tokens.size()) + " fields");

    std::int64_t time = 0;
    const bool timed = tokens.size() == 3;
    if (timed) {
      const auto& t = tokens[2];
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), time);
      if (ec != std::errc() || ptr != t.data() + t.size()) parse_fail(line_no, "bad timestamp '" + t + "'");
    }

    const VertexId a = out.names.intern(tokens[0]);
    const VertexId b = out.names.intern(tokens[1]);
    out.graph.ensure_vertex(std::max(a, b));
    if (a == b) {
      ++out.skipped_self_loops;
      continue;
    }
    if (out.graph.has_edge(a, b)) {
      ++out.skipped_duplicates;
      continue;
    }
    out.graph.insert_edge(a, b);
    if (timed) out.timed_edges.push_back({a, b, time});
  }
  return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  try {
    return load_edge_list(in);
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw Error(Errc::ParseError, path + ": " + e.what());
    throw;
  }
}

void write_edge_list(std::ostream& out, const DynamicGraph& g, const VertexNames& names) {
  for (const auto& [u, v] : g.edges()) out << names.name(u) << ' ' << names.name(v) << '\n';
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (g.degree(u) == 0) out << names.name(u) << '\n';
  }
}

}  // namespace kcore
