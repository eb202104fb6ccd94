#include <benchmark/benchmark.h>

#include <random>

#include "conjucyclic/conjucyclic.hpp"
#include "conjucyclic/weights.hpp"

using namespace conjucyclic;

static void BM_FieldMul(benchmark::State& state) {
  const auto t = build_tower(2, static_cast<std::uint32_t>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Element> xs(4096);
  for (auto& x : xs) x = Element{static_cast<std::uint32_t>(rng() % t->size())};
  Element acc = kOne;
  for (auto _ : state) {
    for (const auto x : xs) acc = t->add(t->mul(acc, x), x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(4);

static void BM_Factor(benchmark::State& state) {
  const auto t = build_tower(static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_x2n_minus_1(*t, static_cast<std::size_t>(state.range(1))));
  }
}
BENCHMARK(BM_Factor)->Args({3, 11})->Args({2, 45})->Args({5, 31});

static void BM_WeightsTernary11(benchmark::State& state) {
  const auto t = build_tower(3, 1);
  const auto f = factor_x2n_minus_1(*t, 11);
  const auto code = build_conjucyclic_code(t, 11, expand_divisor(*t, f, DivisorIndex{{0, 0, 0, 1, 1, 0}}));
  const EnumerationOptions options{static_cast<unsigned>(state.range(0)), EnumerationOptions{}.budget};
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code, options));
  state.SetItemsProcessed(state.iterations() * 531441);
}
BENCHMARK(BM_WeightsTernary11)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_WeightsQuaternary11(benchmark::State& state) {
  const auto t = build_tower(2, 2);
  const auto f = factor_x2n_minus_1(*t, 11);
  const auto code = build_conjucyclic_code(t, 11, expand_divisor(*t, f, DivisorIndex{{0, 0, 2}}));
  const EnumerationOptions options{static_cast<unsigned>(state.range(0)), EnumerationOptions{}.budget};
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code, options));
  state.SetItemsProcessed(state.iterations() * 16777216);
}
BENCHMARK(BM_WeightsQuaternary11)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(3)->UseRealTime();
BENCHMARK_MAIN();
