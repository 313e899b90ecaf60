#include <benchmark/benchmark.h>

#include "chaoslab/dendrite.hpp"
#include "chaoslab/spacing.hpp"
#include "chaoslab/words.hpp"

using namespace chaoslab;

// the whole top walk through level 3, ending on the lazy level
static void BM_TopOrbit(benchmark::State& state) {
  dendrite::Grid g;
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    dendrite::DPoint p = dendrite::top(g, 0, 1);
    for (std::uint64_t s = 0; s < steps; ++s) p = dendrite::apply_f(p, g);
    benchmark::DoNotOptimize(p);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TopOrbit)->Arg(27)->Arg(3051);

static void BM_SpacingLanguage(benchmark::State& state) {
  auto p = words::IntegerSet::p_star();
  for (auto _ : state) benchmark::DoNotOptimize(spacing::language(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SpacingLanguage)->DenseRange(8, 20, 4);

static void BM_MetricRho(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  words::Word w(n, 0);
  auto x = words::SymbolStream::from_prefix(w);
  w.back() = 1;
  auto y = words::SymbolStream::from_prefix(w);
  for (auto _ : state) benchmark::DoNotOptimize(words::metric_rho(x, y, n + 1));
}
BENCHMARK(BM_MetricRho)->Arg(64)->Arg(4096);
BENCHMARK_MAIN();
