#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kcore/graph.hpp"

namespace kcore {

enum class GenKind { Lollipop, ErdosRenyi, CliqueChain };

struct GenSpec {
  GenKind kind = GenKind::Lollipop;
  std::uint64_t a = 0;  // lollipop: chain length; er: n; cliquechain: clique count
  std::uint64_t b = 0;  // er: m; cliquechain: clique size
};

// "lollipop:N", "er:N,M" or "cliquechain:C,K". Throws Error{InvalidArgument}.
GenSpec parse_gen_spec(std::string_view text);
std::string to_string(const GenSpec& spec);

// Vertices v1..v13 and u0..uN. v1..v5 form a cycle, v6..v9 and v10..v13
// are cliques, v2-v7 links the cycle to the first clique, and u0 hangs off
// v5. The u vertices form a path that zigzags out of u0:
// uN' - ... - u3 - u1 - u0 - u2 - u4 - ... - uN'' (odd indices on one side,
// even on the other). Cores: 3 on the cliques, 2 on the cycle, 1 on the
// path. Requires N >= 1.
LoadedGraph make_lollipop(std::uint64_t n);

// Uniform simple graph with n vertices labelled 0..n-1 and m distinct edges.
LoadedGraph make_erdos_renyi(std::uint64_t n, std::uint64_t m, std::uint64_t seed);

// c cliques of k vertices each; clique i's last vertex is joined to clique
// i+1's first vertex.
LoadedGraph make_clique_chain(std::uint64_t c, std::uint64_t k);

LoadedGraph generate(const GenSpec& spec, std::uint64_t seed);

}  // namespace kcore
