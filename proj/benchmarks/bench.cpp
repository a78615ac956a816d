#include <benchmark/benchmark.h>

#include "gel/canonical.hpp"
#include "gel/chib.hpp"
#include "gel/editdist.hpp"
#include "gel/graph.hpp"
#include "gel/graph6.hpp"
#include "gel/heuristic.hpp"

namespace {

void bm_canonical_form(benchmark::State& state) {
  gel::Graph g = gel::gnp(static_cast<int>(state.range(0)), 0.5, 12);
  for (auto _ : state) benchmark::DoNotOptimize(gel::canonical_form(g));
}
BENCHMARK(bm_canonical_form)->Arg(7)->Arg(9);

void bm_enumerate(benchmark::State& state) {
  for (auto _ : state) {
    auto gs = gel::enumerate_nonisomorphic(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(gs.size());
  }
}
BENCHMARK(bm_enumerate)->Arg(6)->Arg(7);

void bm_binary_chromatic(benchmark::State& state) {
  gel::Graph g = gel::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gel::binary_chromatic(g));
}
BENCHMARK(bm_binary_chromatic)->Arg(9)->Arg(13);

void bm_dist_to_forb(benchmark::State& state) {
  gel::Graph g = gel::gnp(static_cast<int>(state.range(0)), 0.5, 4);
  auto fam = gel::make_family({gel::path_graph(4)}, gel::FamilyMode::induced);
  for (auto _ : state)
    benchmark::DoNotOptimize(gel::dist_to_forb_value(g, fam));
}
BENCHMARK(bm_dist_to_forb)->Arg(8)->Arg(10);

void bm_graph6_roundtrip(benchmark::State& state) {
  gel::Graph g = gel::gnp(32, 0.5, 5);
  for (auto _ : state) {
    std::string s = gel::to_graph6(g);
    benchmark::DoNotOptimize(gel::from_graph6(s));
  }
}
BENCHMARK(bm_graph6_roundtrip);

void bm_derandomized_edit(benchmark::State& state) {
  gel::Graph g = gel::gnp(static_cast<int>(state.range(0)), 0.5, 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(gel::derandomized_edit(g, 2, 1).edits.toggles.size());
}
BENCHMARK(bm_derandomized_edit)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
