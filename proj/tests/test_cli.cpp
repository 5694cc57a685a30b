#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "kcore/commands.hpp"
#include "kcore/error.hpp"
#include "kcore/oracle.hpp"
#include "support.hpp"

using namespace kcore;
using kcore::testing::id;
using kcore::testing::parse_graph;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<WorkloadOp> ops_from(const std::string& text, LoadedGraph& lg) {
  std::istringstream in(text);
  return parse_workload(in, lg.names);
}

}  // namespace

TEST_CASE("generator specs") {
  CHECK(to_string(parse_gen_spec("er:200,800")) == "er:200,800");
  CHECK(to_string(parse_gen_spec("lollipop:7")) == "lollipop:7");
  CHECK(to_string(parse_gen_spec("cliquechain:3,4")) == "cliquechain:3,4");
  for (const char* bad : {"lollipop:0", "er:10", "er:x,3", "star:4", "lollipop", "cliquechain:3,0", "er:4,7"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(generate(parse_gen_spec(bad), 1), Error);
  }
}

TEST_CASE("lollipop:5 counts") {
  const auto lg = make_lollipop(5);
  CHECK(lg.graph.num_vertices() == 13 + 6);
  // path (5) + cycle (5) + two K4s (12) + v2-v7 + u0-v5
  CHECK(lg.graph.num_edges() == 5 + 5 + 12 + 2);
  std::ostringstream text;
  write_edge_list(text, lg.graph, lg.names);
  const auto again = parse_graph(text.str());
  CHECK(again.graph.num_edges() == lg.graph.num_edges());
  // Reloading renumbers vertices, so compare the core multisets.
  auto a = oracle::naive_cores(again.graph);
  auto b = oracle::naive_cores(lg.graph);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("er:10,0 is ten isolated vertices") {
  std::ostringstream out;
  cmd_gen(parse_gen_spec("er:10,0"), 1, out);
  const auto lg = parse_graph(out.str());
  CHECK(lg.graph.num_vertices() == 10);
  CHECK(lg.graph.num_edges() == 0);
}

TEST_CASE("generation is deterministic per seed") {
  std::ostringstream a, b, c;
  cmd_gen(parse_gen_spec("er:200,800"), 7, a);
  cmd_gen(parse_gen_spec("er:200,800"), 7, b);
  cmd_gen(parse_gen_spec("er:200,800"), 8, c);
  CHECK(a.str() == b.str());
  CHECK(a.str() != c.str());
}

TEST_CASE("clique chain shape") {
  const auto lg = make_clique_chain(4, 5);
  CHECK(lg.graph.num_edges() == 4 * 10 + 3);
  CHECK(oracle::naive_cores(lg.graph) == std::vector<CoreValue>(20, 4));
}

TEST_CASE("workload parsing") {
  auto lg = parse_graph("a b\nb c\n");
  const auto ops = ops_from("# header\nI a c\nR a b\n\nQ b\nI c new\n", lg);
  REQUIRE(ops.size() == 4);
  CHECK(ops[0] == WorkloadOp{OpKind::Insert, 0, 2});
  CHECK(ops[1].kind == OpKind::Remove);
  CHECK(ops[2].kind == OpKind::QueryCore);
  CHECK(ops[3].v == 3);
  std::ostringstream out;
  write_workload(out, ops, lg.names);
  CHECK(out.str() == "I a c\nR a b\nQ b\nI c new\n");
  for (const char* bad : {"X a b\n", "I a\n", "Q\n", "R a b c\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ops_from(bad, lg), Error);
  }
}

TEST_CASE("random mixed ops stay valid") {
  const auto lg = make_erdos_renyi(30, 40, 2);
  for (MixPolicy policy : {MixPolicy::Alternate, MixPolicy::Random}) {
    DynamicGraph g = lg.graph;
    const auto ops = random_mixed_ops(g, 3000, 5, policy);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (policy == MixPolicy::Alternate && g.num_edges() > 0) CHECK((ops[i].kind == OpKind::Insert) == (i % 2 == 0));
      if (ops[i].kind == OpKind::Insert) {
        g.insert_edge(ops[i].u, ops[i].v);
      } else {
        g.remove_edge(ops[i].u, ops[i].v);
      }
    }
    CHECK(ops == random_mixed_ops(lg.graph, 3000, 5, policy));
  }
}

TEST_CASE("derived workloads remove what they reinsert") {
  auto lg = parse_graph("a b 4\nb c 1\nc d 9\nd a 2\n");
  const auto ops = derive_latest(lg, 2);
  REQUIRE(ops.size() == 2);
  CHECK(ops[0] == WorkloadOp{OpKind::Insert, 0, 1});
  CHECK(ops[1] == WorkloadOp{OpKind::Insert, 2, 3});
  CHECK(lg.graph.num_edges() == 2);
  CHECK_THROWS_AS(derive_latest(lg, 5), Error);

  DynamicGraph g = make_erdos_renyi(50, 200, 1).graph;
  const auto sample = derive_sample(g, 60, 3);
  CHECK(g.num_edges() == 140);
  for (const auto& op : sample) CHECK_FALSE(g.has_edge(op.u, op.v));
}

TEST_CASE("decompose output") {
  SUBCASE("lollipop fixture") {
    const auto lg = make_lollipop(2000);
    std::ostringstream out;
    const auto s = cmd_decompose(lg, Heuristic::SmallRemFirst, 1, out);
    CHECK(s.max_core == 3);
    CHECK(s.bucket_sizes == std::vector<std::size_t>{0, 2001, 5, 8});
    CHECK(lines_of(out.str()).size() == 2014 + 4);
  }
  SUBCASE("empty graph") {
    std::ostringstream out;
    const auto s = cmd_decompose(parse_graph(""), Heuristic::SmallRemFirst, 1, out);
    CHECK(s.n == 0);
    CHECK(out.str() == "# n=0 m=0 max_core=0\n");
  }
  SUBCASE("K4") {
    std::ostringstream out;
    cmd_decompose(parse_graph("a b\na c\na d\nb c\nb d\nc d\n"), Heuristic::SmallRemFirst, 1, out);
    const auto lines = lines_of(out.str());
    CHECK(std::count_if(lines.begin(), lines.end(), [](const std::string& l) {
            return l[0] != '#' && l.find(" 3 ") != std::string::npos;
          }) == 4);
  }
}

TEST_CASE("apply on the lollipop fixture") {
  auto lg = make_lollipop(2000);
  const auto ops = ops_from("I v4 u0\n", lg);
  for (Algo algo : {Algo::Order, Algo::Traversal}) {
    std::ostringstream csv;
    ApplyOptions o;
    o.algo = algo;
    o.check_every = 1;
    o.stats = &csv;
    const auto s = cmd_apply(lg, ops, o);
    const auto rows = lines_of(csv.str());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == kStatsHeader);
    const std::string prefix = algo == Algo::Order ? "0,I,1,1,1," : "0,I,1,1,1999,";
    CHECK(rows[1].rfind(prefix, 0) == 0);
    CHECK(s.checks == 1);
  }
}

TEST_CASE("apply replays mixed ops under checks") {
  const auto lg = make_erdos_renyi(200, 800, 7);
  const auto ops = random_mixed_ops(lg.graph, 2000, 3);
  for (Algo algo : {Algo::Order, Algo::Traversal, Algo::Oracle}) {
    ApplyOptions o;
    o.algo = algo;
    o.check_every = algo == Algo::Oracle ? 0 : 1;
    const auto s = cmd_apply(lg, ops, o);
    CHECK(s.inserts == 1000);
    CHECK(s.removes == 1000);
    std::size_t binned = 0;
    for (auto b : s.histogram) binned += b;
    CHECK(binned == s.inserts);
    REQUIRE(s.ratio());
    CHECK(*s.ratio() >= 1.0);
  }
}

TEST_CASE("apply reports failures with the op index") {
  auto lg = parse_graph("a b\nb c\n");
  const auto ops = ops_from("I a c\nR a b\nR a b\n", lg);
  try {
    cmd_apply(lg, ops, {});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingEdge);
    CHECK(std::string(e.what()).find("op 2") != std::string::npos);
  }
}

TEST_CASE("queries report the current core") {
  auto lg = parse_graph("a b\nb c\nc a\n");
  const auto ops = ops_from("Q a\nR a b\nQ a\n", lg);
  std::ostringstream csv;
  ApplyOptions o;
  o.stats = &csv;
  const auto s = cmd_apply(lg, ops, o);
  const auto rows = lines_of(csv.str());
  CHECK(rows[1].rfind("0,Q,2,0,0,", 0) == 0);
  CHECK(rows[3].rfind("2,Q,1,0,0,", 0) == 0);
  CHECK(s.queries == 2);
}

TEST_CASE("stability protocol") {
  const auto lg = make_erdos_renyi(500, 3000, 2);
  for (double p : {0.0, 0.1, 0.2}) {
    std::ostringstream out;
    StabilityOptions o;
    o.groups = 10;
    o.group_size = 100;
    o.p = p;
    o.check = true;
    const auto rows = cmd_stability(lg, o, out);
    CHECK(rows.size() == 10);
    CHECK(lines_of(out.str()).size() == 11);
    std::size_t removals = 0;
    for (const auto& r : rows) removals += r.removals;
    CHECK((p == 0.0) == (removals == 0));
  }
  std::ostringstream sink;
  StabilityOptions zero;
  zero.group_size = 0;
  CHECK_THROWS_AS(cmd_stability(lg, zero, sink), Error);
  StabilityOptions huge;
  huge.groups = 100;
  CHECK_THROWS_AS(cmd_stability(lg, huge, sink), Error);
}

TEST_CASE("heuristics comparison") {
  SUBCASE("lollipop fixture workload") {
    auto lg = make_lollipop(2000);
    const auto ops = ops_from("I v4 u0\n", lg);
    std::ostringstream out;
    const auto rows = cmd_heuristics(lg, ops, 1, out);
    REQUIRE(rows[0].heuristic == Heuristic::SmallRemFirst);
    CHECK(rows[0].ratio() == 1.0);
    CHECK(out.str().find("cores identical across heuristics: yes") != std::string::npos);
  }
  SUBCASE("random workload") {
    const auto lg = make_erdos_renyi(150, 500, 4);
    const auto ops = random_mixed_ops(lg.graph, 600, 9);
    std::ostringstream out;
    for (const auto& row : cmd_heuristics(lg, ops, 2, out)) {
      REQUIRE(row.ratio());
      CHECK(*row.ratio() >= 1.0);
    }
  }
}
