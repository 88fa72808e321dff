#include <benchmark/benchmark.h>

#include "floer/random.hpp"

using namespace floer;

// Smith form of a dense random matrix with small entries.
static void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  IntMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M.set(i, j, rng.uniform(-3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(snf(M, Ring::Z(), true));
}
BENCHMARK(BM_Snf)->Arg(8)->Arg(16)->Arg(32);

static void BM_HomologyRandom(benchmark::State& state) {
  Rng rng(11);
  RandomParams p;
  std::vector<ChainComplex> corpus;
  for (int i = 0; i < 64; ++i) corpus.push_back(random_complex(rng, p));
  for (auto _ : state)
    for (const auto& C : corpus) benchmark::DoNotOptimize(homology(C));
}
BENCHMARK(BM_HomologyRandom);

static void BM_TowerVanishing(benchmark::State& state) {
  ChainComplex pt(GradedModule({{"e", 0}}));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FlavorBundle b = assemble(tower_model({pt, N, {}}));
    ChainComplex S = s_u(b.bar);
    benchmark::DoNotOptimize(homology(S));
  }
}
BENCHMARK(BM_TowerVanishing)->DenseRange(2, 5);
