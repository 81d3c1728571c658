#include <benchmark/benchmark.h>

#include "ccodes/analysis.hpp"
#include "ccodes/construct.hpp"
#include "ccodes/subcircuit.hpp"

using namespace ccodes;

namespace {

TransitionSequence code_for(int which) {
  switch (which) {
    case 0: return builtin_code(Builtin::example1);
    case 1: return construct_form(9, 2);   // N = 40, d = 15
    default: return construct_form(13, 6); // N = 64, d = 23
  }
}

int spread_for(int which) { return which == 0 ? 9 : (which == 1 ? 9 : 13); }

void BM_VerifyDirect(benchmark::State& state) {
  auto t = code_for(static_cast<int>(state.range(0)));
  int k = spread_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_spread_at_least(t, k));
  }
}
BENCHMARK(BM_VerifyDirect)->Arg(0)->Arg(1)->Arg(2);

void BM_VerifyKlee(benchmark::State& state) {
  auto t = code_for(static_cast<int>(state.range(0)));
  int k = spread_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_spread_at_least_klee(t, k));
  }
}
BENCHMARK(BM_VerifyKlee)->Arg(0)->Arg(1)->Arg(2);

void BM_VerifyCharacterization(benchmark::State& state) {
  auto t = code_for(static_cast<int>(state.range(0)));
  int k = spread_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spread_via_characterization(t, k));
  }
}
BENCHMARK(BM_VerifyCharacterization)->Arg(0)->Arg(1)->Arg(2);

void BM_ComputeSpread(benchmark::State& state) {
  auto t = code_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_spread(t));
  }
}
BENCHMARK(BM_ComputeSpread)->Arg(0)->Arg(1)->Arg(2);

void BM_Analyze(benchmark::State& state) {
  auto t = code_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(t));
  }
}
BENCHMARK(BM_Analyze)->Arg(0)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
