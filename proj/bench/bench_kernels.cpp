// Serial vs OpenMP kernels, then order vs traversal maintenance.
// Usage: bench_kernels [n] [avg_degree] [repeats]
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "kcore/commands.hpp"
#include "kcore/decomp.hpp"
#include "kcore/gen.hpp"
#include "kcore/oracle.hpp"
#include "kcore/workload.hpp"

using namespace kcore;

namespace {

double best_ms(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-16s %12.3f %12.3f %8.2fx\n", name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
  const std::uint64_t deg = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 8;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 5;

  const auto lg = make_erdos_renyi(n, n * deg / 2, 1);
  const auto d = core_decompose(lg.graph);
  const auto& g = lg.graph;
  const auto& core = d.state.core;
  const auto mcd = compute_mcd(g, core);
  std::printf("graph er:%llu,%llu  threads=%d\n", static_cast<unsigned long long>(n),
              static_cast<unsigned long long>(n * deg / 2), omp_get_max_threads());
  std::printf("%-16s %12s %12s %9s\n", "kernel", "serial ms", "openmp ms", "speedup");
  row("mcd", best_ms(repeats, [&] { serial::compute_mcd(g, core); }),
      best_ms(repeats, [&] { compute_mcd(g, core); }));
  row("pcd", best_ms(repeats, [&] { serial::compute_pcd(g, core, mcd); }),
      best_ms(repeats, [&] { compute_pcd(g, core, mcd); }));
  row("validate_korder", best_ms(repeats, [&] { serial::validate_korder(g, d.state, d.order); }),
      best_ms(repeats, [&] { validate_korder(g, d.state, d.order); }));
  {
    const auto small = make_erdos_renyi(std::min<std::uint64_t>(n, 5000), std::min<std::uint64_t>(n, 5000) * 2, 2);
    const auto ds = core_decompose(small.graph);
    row("region_sizes", best_ms(1, [&] {
          oracle::serial::region_sizes(small.graph, ds.state.core, ds.state.mcd, ds.order);
        }),
        best_ms(1, [&] { oracle::region_sizes(small.graph, ds.state.core, ds.state.mcd, ds.order); }));
  }

  std::printf("\n%-22s %-10s %12s %14s %10s\n", "workload", "engine", "update ms", "sum visited", "ratio");
  auto engines = [&](const std::string& title, const LoadedGraph& base, const std::vector<WorkloadOp>& ops) {
    for (Algo algo : {Algo::Order, Algo::Traversal}) {
      ApplyOptions o;
      o.algo = algo;
      const auto s = cmd_apply(base, ops, o);
      std::printf("%-22s %-10s %12.3f %14llu %10.3f\n", title.c_str(), std::string(algo_name(algo)).c_str(),
                  s.micros / 1000.0, static_cast<unsigned long long>(s.insert_visited), s.ratio().value_or(0));
    }
  };
  {
    auto lol = make_lollipop(100000);
    VertexNames& names = lol.names;
    const std::vector<WorkloadOp> ops{{OpKind::Insert, *names.find("v4"), *names.find("u0")}};
    engines("lollipop:100000 close", lol, ops);
  }
  {
    auto er = lg;
    const auto ops = derive_sample(er.graph, 300, 3);
    engines("er sample 300", er, ops);
  }
  return 0;
}
