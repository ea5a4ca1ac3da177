#include <benchmark/benchmark.h>

#include "reescov/binomial_gb.hpp"
#include "reescov/graph_io.hpp"
#include "reescov/graphs.hpp"
#include "reescov/monomials.hpp"
#include "reescov/rees.hpp"
#include "reescov/resolutions.hpp"

namespace {

using namespace reescov;

void BM_MinimalCovers(benchmark::State& state) {
  DslContext ctx;
  ctx.seed = 1;
  const Graph g = parse_construction("random:" + std::to_string(state.range(0)) + ":0.3", ctx).graph;
  for (auto _ : state) benchmark::DoNotOptimize(minimal_vertex_covers(g));
}
BENCHMARK(BM_MinimalCovers)->Arg(12)->Arg(20)->Arg(28);

void BM_ReesPresentation(benchmark::State& state) {
  const auto ideal = cover_ideal(standard_family(Family::friendship, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(rees_presentation(ideal));
}
BENCHMARK(BM_ReesPresentation)->Arg(2)->Arg(3)->Arg(4);

void BM_ReesAttach(benchmark::State& state) {
  const auto ideal = cover_ideal(parse_construction("attach(edge;edge,edge)").graph);
  for (auto _ : state) benchmark::DoNotOptimize(rees_presentation(ideal));
}
BENCHMARK(BM_ReesAttach);

void BM_Power(benchmark::State& state) {
  const auto ideal = cover_ideal(standard_family(Family::fan, 4));
  for (auto _ : state) benchmark::DoNotOptimize(power(ideal, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Power)->Arg(2)->Arg(3)->Arg(4);

void BM_LinearQuotientsSearch(benchmark::State& state) {
  const auto gens = power(cover_ideal(standard_family(Family::cycle, 5)), static_cast<unsigned>(state.range(0))).generators();
  for (auto _ : state) benchmark::DoNotOptimize(find_linear_quotients_order(gens));
}
BENCHMARK(BM_LinearQuotientsSearch)->Arg(1)->Arg(2);

void BM_BettiTable(benchmark::State& state) {
  const auto ideal = power(cover_ideal(standard_family(Family::path, 4)), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal));
}
BENCHMARK(BM_BettiTable)->Arg(1)->Arg(2)->Arg(3);

}  // namespace
BENCHMARK_MAIN();
