#include "kcore/gen.hpp"

#include <charconv>
#include <limits>
#include <random>
#include <unordered_set>
#include <vector>

#include "kcore/error.hpp"

namespace kcore {

namespace {

std::uint64_t parse_size(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw Error(Errc::InvalidArgument, "bad size '" + std::string(text) + "' in generator spec '" +
                                           std::string(whole) + "'");
  }
  return value;
}

void link(LoadedGraph& out, const std::string& a, const std::string& b) {
  out.graph.insert_edge(out.names.intern(a), out.names.intern(b));
}

VertexId declare(LoadedGraph& out, const std::string& name) {
  const VertexId id = out.names.intern(name);
  out.graph.ensure_vertex(id);
  return id;
}

}  // namespace

GenSpec parse_gen_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(Errc::InvalidArgument, "generator spec '" + std::string(text) + "' lacks ':'");
  }
  const auto kind = text.substr(0, colon);
  const auto args = text.substr(colon + 1);
  const auto comma = args.find(',');
  GenSpec spec;
  if (kind == "lollipop") {
    spec.kind = GenKind::Lollipop;
    spec.a = parse_size(args, text);
    if (spec.a == 0) throw Error(Errc::InvalidArgument, "lollipop needs a chain length >= 1");
    return spec;
  }
  if (kind != "er" && kind != "cliquechain") {
    throw Error(Errc::InvalidArgument, "unknown generator '" + std::string(kind) + "'");
  }
  if (comma == std::string_view::npos) {
    throw Error(Errc::InvalidArgument, "generator spec '" + std::string(text) + "' needs two sizes");
  }
  spec.kind = kind == "er" ? GenKind::ErdosRenyi : GenKind::CliqueChain;
  spec.a = parse_size(args.substr(0, comma), text);
  spec.b = parse_size(args.substr(comma + 1), text);
  if (spec.a == 0 || (spec.kind == GenKind::CliqueChain && spec.b == 0)) {
    throw Error(Errc::InvalidArgument, "generator spec '" + std::string(text) + "' needs positive sizes");
  }
  return spec;
}

std::string to_string(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::Lollipop:
      return "lollipop:" + std::to_string(spec.a);
    case GenKind::ErdosRenyi:
      return "er:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
    case GenKind::CliqueChain:
      return "cliquechain:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
  }
  return {};
}

LoadedGraph make_lollipop(std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "lollipop needs a chain length >= 1");
  LoadedGraph out;
  auto v = [](int i) { return "v" + std::to_string(i); };
  auto u = [](std::uint64_t i) { return "u" + std::to_string(i); };
  for (int i = 1; i <= 13; ++i) declare(out, v(i));
  for (std::uint64_t i = 0; i <= n; ++i) declare(out, u(i));
  for (int i = 1; i <= 5; ++i) link(out, v(i), v(i % 5 + 1));
  for (int base : {6, 10}) {
    for (int i = base; i < base + 4; ++i) {
      for (int j = i + 1; j < base + 4; ++j) link(out, v(i), v(j));
    }
  }
  link(out, v(2), v(7));
  link(out, u(0), v(5));
  link(out, u(0), u(1));
  if (n >= 2) link(out, u(0), u(2));
  for (std::uint64_t i = 3; i <= n; ++i) link(out, u(i - 2), u(i));
  return out;
}

LoadedGraph make_erdos_renyi(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::InvalidArgument, "er needs n >= 1");
  if (n > std::numeric_limits<VertexId>::max() / 2) throw Error(Errc::InvalidArgument, "er: n too large");
  if (m > n * (n - 1) / 2) {
    throw Error(Errc::InvalidArgument, "er: " + std::to_string(m) + " edges do not fit on " + std::to_string(n) +
                                           " vertices");
  }
  LoadedGraph out;
  for (std::uint64_t i = 0; i < n; ++i) declare(out, std::to_string(i));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  while (out.graph.num_edges() < m) {
    const auto a = static_cast<VertexId>(pick(rng));
    const auto b = static_cast<VertexId>(pick(rng));
    if (a == b || out.graph.has_edge(a, b)) continue;
    out.graph.insert_edge(a, b);
  }
  return out;
}

LoadedGraph make_clique_chain(std::uint64_t c, std::uint64_t k) {
  if (c == 0 || k == 0) throw Error(Errc::InvalidArgument, "cliquechain needs positive sizes");
  LoadedGraph out;
  const std::uint64_t n = c * k;
  for (std::uint64_t i = 0; i < n; ++i) declare(out, std::to_string(i));
  for (std::uint64_t q = 0; q < c; ++q) {
    const auto base = static_cast<VertexId>(q * k);
    for (VertexId i = 0; i < k; ++i) {
      for (VertexId j = i + 1; j < k; ++j) out.graph.insert_edge(base + i, base + j);
    }
    if (q + 1 < c) out.graph.insert_edge(static_cast<VertexId>(base + k - 1), static_cast<VertexId>(base + k));
  }
  return out;
}

LoadedGraph generate(const GenSpec& spec, std::uint64_t seed) {
  switch (spec.kind) {
    case GenKind::Lollipop:
      return make_lollipop(spec.a);
    case GenKind::ErdosRenyi:
      return make_erdos_renyi(spec.a, spec.b, seed);
    case GenKind::CliqueChain:
      return make_clique_chain(spec.a, spec.b);
  }
  throw Error(Errc::InvalidArgument, "unknown generator kind");
}

}  // namespace kcore
