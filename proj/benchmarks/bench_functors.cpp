#include <benchmark/benchmark.h>

#include "floer/random.hpp"

using namespace floer;

static void BM_FundamentalSequences(benchmark::State& state) {
  Rng rng(3);
  RandomParams p;
  p.max_rank = 4;
  ChainComplex Y = s_u(random_u_complex(rng, p));
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_sequences(Y, Window(-h, h)));
}
BENCHMARK(BM_FundamentalSequences)->Arg(4)->Arg(8);

static void BM_KoszulA(benchmark::State& state) {
  Rng rng(5);
  RandomParams p;
  p.max_rank = 4;
  ChainComplex C = random_u_complex(rng, p);
  for (auto _ : state) benchmark::DoNotOptimize(koszul_a(C, Flavor::minus, Window(-8, 8)));
}
BENCHMARK(BM_KoszulA);

static void BM_Case2(benchmark::State& state) {
  Rng rng(9);
  RandomParams p;
  p.max_rank = 4;
  ChainComplex C = random_u_complex(rng, p);
  for (auto _ : state)
    for (Flavor f : kAllFlavors) benchmark::DoNotOptimize(case2_check(C, f, Window(-8, 8)));
}
BENCHMARK(BM_Case2);
