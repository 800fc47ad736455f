#include <benchmark/benchmark.h>

#include "bricklab/brick_analysis.hpp"
#include "bricklab/constructions.hpp"
#include "bricklab/matching.hpp"
#include "bricklab/verifier.hpp"

namespace {

using namespace bricklab;

void BM_EnumerateFamily(benchmark::State& state) {
  const MultiGraph g = family_member(static_cast<unsigned>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_perfect_matchings(g).count);
}
BENCHMARK(BM_EnumerateFamily)->Arg(18)->Arg(30)->Arg(40);

void BM_EnumeratePetersen(benchmark::State& state) {
  const MultiGraph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_perfect_matchings(g).count);
}
BENCHMARK(BM_EnumeratePetersen);

void BM_BrickPairDeletion(benchmark::State& state) {
  const MultiGraph g = family_member(static_cast<unsigned>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_brick_elp(g));
}
BENCHMARK(BM_BrickPairDeletion)->Arg(18)->Arg(30)->Arg(40);

void BM_SolidScanWheel(benchmark::State& state) {
  const MultiGraph g = wheel(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solid_status(g).kind);
}
BENCHMARK(BM_SolidScanWheel)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorem(benchmark::State& state) {
  const TheoremOptions opts{state.range(0) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(18, 40, opts).size());
}
BENCHMARK(BM_VerifyTheorem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
