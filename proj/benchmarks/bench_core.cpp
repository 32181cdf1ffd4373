#include <benchmark/benchmark.h>

#include "eamod/eamod.hpp"

using namespace eamod;

namespace {

void BM_Rank(benchmark::State& state) {
  const FieldCtx f = FieldCtx::create(3, static_cast<unsigned>(state.range(1)));
  const auto n = static_cast<std::size_t>(state.range(0));
  CounterRng rng(1, 0);
  MatF a(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = f.element(rng.below(f.order()));
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->Args({64, 1})->Args({128, 1})->Args({64, 2})->Args({128, 4});

void BM_Wedge(benchmark::State& state) {
  const FieldCtx f = FieldCtx::create(3, 1);
  const EAModule d1 = block_model_d1(SymContext(3, static_cast<unsigned>(state.range(0))), f);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(d1, 2).dim());
}
BENCHMARK(BM_Wedge)->Arg(2)->Arg(3)->Arg(4);

void BM_PointSweep(benchmark::State& state) {
  const FieldCtx f3 = FieldCtx::create(3, 1);
  const FieldCtx f = FieldCtx::create(3, static_cast<unsigned>(state.range(0)));
  const EAModule m = d_r(SymContext(3, 3), f3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(variety_points(m, f).variety_count());
}
BENCHMARK(BM_PointSweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
