#include <benchmark/benchmark.h>

#include "ccodes/search.hpp"

using namespace ccodes;

namespace {

void BM_SearchK42(benchmark::State& state) {
  for (auto _ : state) {
    SearchProblem p;
    p.d = 4;
    p.k = 2;
    benchmark::DoNotOptimize(search_max(p));
  }
}
BENCHMARK(BM_SearchK42);

void BM_SearchK52(benchmark::State& state) {
  for (auto _ : state) {
    SearchProblem p;
    p.d = 5;
    p.k = 2;
    benchmark::DoNotOptimize(search_max(p));
  }
}
BENCHMARK(BM_SearchK52)->Unit(benchmark::kMillisecond);

void BM_SearchK63(benchmark::State& state) {
  for (auto _ : state) {
    SearchProblem p;
    p.d = 6;
    p.k = 3;
    benchmark::DoNotOptimize(search_max(p));
  }
}
BENCHMARK(BM_SearchK63)->Unit(benchmark::kMillisecond);

void BM_SearchSymmetric95(benchmark::State& state) {
  for (auto _ : state) {
    SearchProblem p;
    p.d = 9;
    p.k = 5;
    p.min_phi = 7;
    benchmark::DoNotOptimize(search_max_symmetric(p));
  }
}
BENCHMARK(BM_SearchSymmetric95)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
