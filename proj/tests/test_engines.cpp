#include <doctest.h>

#include <algorithm>
#include <memory>

#include "kcore/error.hpp"
#include "kcore/gen.hpp"
#include "kcore/oracle.hpp"
#include "kcore/order_engine.hpp"
#include "kcore/traversal_engine.hpp"
#include "kcore/workload.hpp"
#include "support.hpp"

using namespace kcore;
using kcore::testing::complete_graph;
using kcore::testing::id;

namespace {

EngineOptions checked() {
  EngineOptions o;
  o.checked = true;
  return o;
}

std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

UpdateResult apply(CoreMaintainer& e, const WorkloadOp& op) {
  return op.kind == OpKind::Insert ? e.insert_edge(op.u, op.v) : e.remove_edge(op.u, op.v);
}

}  // namespace

TEST_CASE("closing v4-u0 on the lollipop") {
  const auto lg = make_lollipop(2000);
  const VertexId v4 = id(lg.names, "v4");
  const VertexId u0 = id(lg.names, "u0");

  SUBCASE("order engine expands one vertex") {
    OrderEngine e(lg.graph, Heuristic::SmallRemFirst, 1, checked());
    const auto r = e.insert_edge(v4, u0);
    CHECK(r.k == 1);
    CHECK(r.vstar == std::vector<VertexId>{u0});
    CHECK(r.visited == 1);
    CHECK(e.core(u0) == 2);
    CHECK(e.order().front(2) == u0);
  }
  SUBCASE("traversal engine walks the chain") {
    TraversalEngine e(lg.graph, checked());
    const auto r = e.insert_edge(v4, u0);
    CHECK(r.vstar == std::vector<VertexId>{u0});
    CHECK(r.visited == 1999);
    CHECK(e.core(u0) == 2);
  }
  SUBCASE("oracle engine agrees") {
    OracleEngine e(lg.graph);
    const auto r = e.insert_edge(u0, v4);
    CHECK(r.vstar == std::vector<VertexId>{u0});
  }
}

TEST_CASE("removing an edge of K4 drops every vertex") {
  for (int which = 0; which < 3; ++which) {
    std::unique_ptr<CoreMaintainer> e;
    if (which == 0) e = std::make_unique<OrderEngine>(complete_graph(4), Heuristic::SmallRemFirst, 1, checked());
    if (which == 1) e = std::make_unique<TraversalEngine>(complete_graph(4), checked());
    if (which == 2) e = std::make_unique<OracleEngine>(complete_graph(4));
    const auto r = e->remove_edge(2, 0);
    CHECK(r.k == 3);
    CHECK(sorted(r.vstar) == std::vector<VertexId>{0, 1, 2, 3});
    for (VertexId v = 0; v < 4; ++v) CHECK(e->core(v) == 2);
    const auto back = e->insert_edge(0, 2);
    CHECK(back.k == 2);
    CHECK(sorted(back.vstar) == std::vector<VertexId>{0, 1, 2, 3});
  }
}

TEST_CASE("bridging two K4s changes nothing") {
  DynamicGraph g(8);
  for (VertexId base : {0u, 4u}) {
    for (VertexId i = 0; i < 4; ++i) {
      for (VertexId j = i + 1; j < 4; ++j) g.insert_edge(base + i, base + j);
    }
  }
  OrderEngine order(g, Heuristic::SmallRemFirst, 1, checked());
  TraversalEngine trav(g, checked());
  CHECK(order.insert_edge(3, 4).vstar.empty());
  CHECK(trav.insert_edge(3, 4).vstar.empty());
  CHECK(order.remove_edge(4, 3).vstar.empty());
  CHECK(trav.remove_edge(4, 3).vstar.empty());
}

TEST_CASE("a triangle forms one edge at a time") {
  OrderEngine e(DynamicGraph(3), Heuristic::SmallRemFirst, 1, checked());
  CHECK(sorted(e.insert_edge(0, 1).vstar) == std::vector<VertexId>{0, 1});
  CHECK(e.insert_edge(1, 2).vstar == std::vector<VertexId>{2});
  const auto r = e.insert_edge(2, 0);
  CHECK(r.k == 1);
  CHECK(sorted(r.vstar) == std::vector<VertexId>{0, 1, 2});
  CHECK(r.visited == 3);
}

TEST_CASE("insertions may name new vertices") {
  OrderEngine order(complete_graph(3), Heuristic::SmallRemFirst, 1, checked());
  TraversalEngine trav(complete_graph(3), checked());
  for (CoreMaintainer* e : {static_cast<CoreMaintainer*>(&order), static_cast<CoreMaintainer*>(&trav)}) {
    const auto r = e->insert_edge(1, 5);
    CHECK(e->graph().num_vertices() == 6);
    CHECK(r.vstar == std::vector<VertexId>{5});
    CHECK(e->core(5) == 1);
    CHECK(e->core(4) == 0);
  }
}

TEST_CASE("rejected updates leave the engine untouched") {
  const auto lg = make_erdos_renyi(30, 60, 3);
  OrderEngine order(lg.graph, Heuristic::SmallRemFirst, 1, checked());
  TraversalEngine trav(lg.graph, checked());
  const auto [a, b] = lg.graph.edges().front();
  VertexId c = 0;
  while (c == a || lg.graph.has_edge(a, c)) ++c;
  for (CoreMaintainer* e : {static_cast<CoreMaintainer*>(&order), static_cast<CoreMaintainer*>(&trav)}) {
    const std::vector<CoreValue> before(e->cores().begin(), e->cores().end());
    auto code = [&](auto&& fn) {
      try {
        fn();
      } catch (const Error& err) {
        return err.code();
      }
      return Errc::Io;
    };
    CHECK(code([&] { e->insert_edge(a, a); }) == Errc::SelfLoop);
    CHECK(code([&] { e->insert_edge(b, a); }) == Errc::DuplicateEdge);
    CHECK(code([&] { e->remove_edge(a, c); }) == Errc::MissingEdge);
    CHECK(code([&] { e->remove_edge(a, 999); }) == Errc::MissingEdge);
    CHECK(std::equal(before.begin(), before.end(), e->cores().begin(), e->cores().end()));
    CHECK_FALSE(e->self_check());
  }
}

TEST_CASE("peeling from the roots of a broken K4") {
  DynamicGraph g = complete_graph(4);
  std::vector<CoreValue> core(4, 3);
  auto mcd = compute_mcd(g, core);
  g.remove_edge(0, 1);
  --mcd[0];
  --mcd[1];
  PeelScratch scratch;
  std::size_t visited = 0;
  const VertexId roots[] = {0, 1};
  const auto vstar = peel_find_vstar(g, core, mcd, roots, 3, scratch, &visited);
  CHECK(vstar.size() == 4);
  CHECK(visited == 4);
  CHECK(core == std::vector<CoreValue>(4, 2));
}

TEST_CASE("refresh_mcd with nothing moved is a no-op") {
  const DynamicGraph g = complete_graph(3);
  std::vector<CoreValue> core(3, 2);
  auto mcd = compute_mcd(g, core);
  std::vector<std::uint8_t> mark;
  refresh_mcd(g, core, mcd, {}, Direction::Insert, mark);
  CHECK(mcd == std::vector<std::uint32_t>(3, 2));
}

TEST_CASE("fuzz against the naive oracle on every family") {
  const std::vector<std::string> specs{"er:40,80", "er:25,120", "lollipop:12", "cliquechain:5,4", "er:60,60"};
  for (const auto& text : specs) {
    for (Heuristic h : {Heuristic::SmallRemFirst, Heuristic::LargeRemFirst, Heuristic::RandomRemFirst}) {
      CAPTURE(text);
      CAPTURE(heuristic_name(h));
      const auto lg = generate(parse_gen_spec(text), 5);
      OrderEngine order(lg.graph, h, 17, checked());
      TraversalEngine trav(lg.graph, checked());
      const auto ops = random_mixed_ops(lg.graph, 600, 23, MixPolicy::Random);
      std::size_t rejected = 0;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        CAPTURE(i);
        const auto a = apply(order, ops[i]);
        const auto b = apply(trav, ops[i]);
        const auto expect = oracle::naive_cores(order.graph());
        REQUIRE(std::equal(expect.begin(), expect.end(), order.cores().begin(), order.cores().end()));
        REQUIRE(std::equal(expect.begin(), expect.end(), trav.cores().begin(), trav.cores().end()));
        REQUIRE(sorted(a.vstar) == sorted(b.vstar));
        if (ops[i].kind == OpKind::Insert) {
          REQUIRE(a.visited >= a.vstar.size());
          rejected += a.visited - a.vstar.size();
        }
      }
      CHECK(rejected > 0);
    }
  }
}

TEST_CASE("expanded tracking lists exactly the counted vertices") {
  const auto lg = make_erdos_renyi(50, 150, 8);
  EngineOptions o = checked();
  o.track_expanded = true;
  OrderEngine order(lg.graph, Heuristic::SmallRemFirst, 1, o);
  TraversalEngine trav(lg.graph, o);
  for (const auto& op : random_mixed_ops(lg.graph, 300, 4)) {
    const auto a = apply(order, op);
    const auto b = apply(trav, op);
    if (op.kind != OpKind::Insert) continue;
    CHECK(a.expanded.size() == a.visited);
    CHECK(b.expanded.size() == b.visited);
    const auto ex = sorted(a.expanded);
    for (VertexId v : a.vstar) CHECK(std::binary_search(ex.begin(), ex.end(), v));
  }
}
