#include <doctest.h>

#include "kcore/decomp.hpp"
#include "kcore/gen.hpp"
#include "kcore/oracle.hpp"
#include "support.hpp"

using namespace kcore;
using kcore::testing::complete_graph;
using kcore::testing::id;
using kcore::testing::later_neighbors;

namespace {

constexpr Heuristic kAll[] = {Heuristic::SmallRemFirst, Heuristic::LargeRemFirst, Heuristic::RandomRemFirst};

// rem recomputed from the order itself.
void fill_rem(const DynamicGraph& g, CoreState& st, const KOrder& order) {
  st.rem.assign(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) st.rem[v] = later_neighbors(g, order, v);
}

}  // namespace

TEST_CASE("lollipop fixture cores and bucket sizes") {
  const auto lg = make_lollipop(2000);
  const auto d = core_decompose(lg.graph);
  for (int i = 1; i <= 13; ++i) {
    CHECK(d.state.core[id(lg.names, "v" + std::to_string(i))] == (i >= 6 ? 3u : 2u));
  }
  for (int i = 0; i <= 2000; ++i) CHECK(d.state.core[id(lg.names, "u" + std::to_string(i))] == 1u);
  CHECK(d.order.bucket_size(1) == 2001);
  CHECK(d.order.bucket_size(2) == 5);
  CHECK(d.order.bucket_size(3) == 8);
}

TEST_CASE("small-rem-first leaves u0 last in O_1 with rem 1") {
  const auto lg = make_lollipop(2000);
  const auto d = core_decompose(lg.graph, Heuristic::SmallRemFirst);
  const VertexId u0 = id(lg.names, "u0");
  CHECK(d.order.back(1) == u0);
  CHECK(d.state.rem[u0] == 1);
}

TEST_CASE("K4 and trivial graphs") {
  auto k4 = core_decompose(complete_graph(4));
  CHECK(k4.state.core == std::vector<CoreValue>{3, 3, 3, 3});
  CHECK(core_decompose(DynamicGraph{}).state.core.empty());
  auto iso = core_decompose(DynamicGraph(3));
  CHECK(iso.state.core == std::vector<CoreValue>{0, 0, 0});
  CHECK(iso.order.bucket_size(0) == 3);
}

TEST_CASE("every heuristic agrees with the naive oracle and yields a valid order") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto lg = make_erdos_renyi(60 + seed * 7, 150 + seed * 40, seed);
    const auto expect = oracle::naive_cores(lg.graph);
    for (Heuristic h : kAll) {
      const auto d = core_decompose(lg.graph, h, seed);
      REQUIRE(d.state.core == expect);
      const auto check = validate_korder(lg.graph, d.state, d.order);
      REQUIRE_MESSAGE(check.ok, check.diagnostic);
      REQUIRE(d.state.mcd == compute_mcd(lg.graph, d.state.core));
      for (VertexId v = 0; v < lg.graph.num_vertices(); ++v) {
        REQUIRE(d.state.rem[v] == later_neighbors(lg.graph, d.order, v));
      }
    }
  }
}

TEST_CASE("heuristics only differ inside buckets") {
  const auto lg = make_clique_chain(6, 5);
  const auto a = core_decompose(lg.graph, Heuristic::SmallRemFirst);
  const auto b = core_decompose(lg.graph, Heuristic::LargeRemFirst);
  const auto c = core_decompose(lg.graph, Heuristic::RandomRemFirst, 3);
  CHECK(a.state.core == b.state.core);
  CHECK(a.state.core == c.state.core);
  for (CoreValue k = 0; k < a.order.num_buckets(); ++k) {
    CHECK(a.order.bucket_size(k) == b.order.bucket_size(k));
    CHECK(a.order.bucket_size(k) == c.order.bucket_size(k));
  }
}

TEST_CASE("random-rem-first is deterministic per seed") {
  const auto lg = make_erdos_renyi(120, 400, 2);
  const auto a = core_decompose(lg.graph, Heuristic::RandomRemFirst, 9);
  const auto b = core_decompose(lg.graph, Heuristic::RandomRemFirst, 9);
  for (CoreValue k = 0; k < a.order.num_buckets(); ++k) CHECK(a.order.bucket_contents(k) == b.order.bucket_contents(k));
}

TEST_CASE("mcd and pcd on the lollipop after closing v4-u0") {
  auto lg = make_lollipop(2000);
  const auto d = core_decompose(lg.graph);
  const VertexId u0 = id(lg.names, "u0");
  lg.graph.insert_edge(id(lg.names, "v4"), u0);
  const auto mcd = compute_mcd(lg.graph, d.state.core);
  const auto pcd = compute_pcd(lg.graph, d.state.core, mcd);
  CHECK(mcd[u0] == 4);
  CHECK(pcd[u0] == 4);
  const VertexId u1997 = id(lg.names, "u1997");
  CHECK(mcd[u1997] == 2);
  CHECK(pcd[u1997] == 1);
}

TEST_CASE("hand-built order on the lollipop cycle") {
  const auto lg = make_lollipop(20);
  auto d = core_decompose(lg.graph);
  auto v = [&](int i) { return id(lg.names, "v" + std::to_string(i)); };
  // O_2 = v3 v2 v1 v4 v5
  for (int i : {3, 2, 1, 4, 5}) d.order.remove(v(i));
  const std::vector<VertexId> block{v(3), v(2), v(1), v(4), v(5)};
  d.order.insert_head_block(block, 2);
  fill_rem(lg.graph, d.state, d.order);
  CHECK(d.order.precedes(v(3), v(2)));
  CHECK(d.order.precedes(v(2), v(1)));
  CHECK(d.order.precedes(v(1), v(7)));
  CHECK(d.order.precedes(v(2), v(7)));
  CHECK(d.state.rem[v(2)] == 2);
  CHECK(validate_korder(lg.graph, d.state, d.order).ok);

  SUBCASE("stale rem is reported") {
    d.state.rem[v(1)] += 1;
    const auto check = validate_korder(lg.graph, d.state, d.order);
    CHECK_FALSE(check.ok);
    CHECK(check.vertex == v(1));
  }
  SUBCASE("u0 at the head of O_1 has too many later neighbors") {
    const VertexId u0 = id(lg.names, "u0");
    d.order.move_to_front(u0);
    fill_rem(lg.graph, d.state, d.order);
    CHECK(d.state.rem[u0] == 3);
    const auto check = validate_korder(lg.graph, d.state, d.order);
    CHECK_FALSE(check.ok);
    CHECK(check.vertex == u0);
  }
  SUBCASE("a vertex in the wrong bucket is reported") {
    d.order.remove(v(5));
    d.order.append_tail(v(5), 3);
    CHECK_FALSE(validate_korder(lg.graph, d.state, d.order).ok);
  }
}

TEST_CASE("parallel scans equal their serial references") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto lg = make_erdos_renyi(500, 2500, seed);
    auto d = core_decompose(lg.graph, Heuristic::RandomRemFirst, seed);
    const auto mcd = compute_mcd(lg.graph, d.state.core);
    CHECK(mcd == serial::compute_mcd(lg.graph, d.state.core));
    CHECK(compute_pcd(lg.graph, d.state.core, mcd) == serial::compute_pcd(lg.graph, d.state.core, mcd));
    CHECK(validate_korder(lg.graph, d.state, d.order).ok);
    CHECK(serial::validate_korder(lg.graph, d.state, d.order).ok);
    d.state.rem[seed * 17] += 1;
    const auto p = validate_korder(lg.graph, d.state, d.order);
    const auto s = serial::validate_korder(lg.graph, d.state, d.order);
    CHECK_FALSE(p.ok);
    CHECK(p.vertex == s.vertex);
  }
}

TEST_CASE("heuristic names round-trip") {
  for (Heuristic h : kAll) CHECK(parse_heuristic(heuristic_name(h)) == h);
  CHECK(parse_heuristic("small-rem-first") == Heuristic::SmallRemFirst);
  CHECK_FALSE(parse_heuristic("medium"));
}
