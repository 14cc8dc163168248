#include <benchmark/benchmark.h>

#include "wreath/algebra.hpp"
#include "wreath/bruhat.hpp"
#include "wreath/group_context.hpp"
#include "wreath/orbit.hpp"
#include "wreath/representation.hpp"
#include "wreath/springer.hpp"

namespace {

void BM_GroupContext(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    wreath::GroupContext ctx(m, d);
    benchmark::DoNotOptimize(ctx.conjugacy_classes().size());
  }
}
BENCHMARK(BM_GroupContext)->Args({2, 2})->Args({3, 2})->Args({2, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_HasseCovers(benchmark::State& state) {
  const wreath::GroupContext ctx(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(wreath::hasse_covers(ctx).size());
}
BENCHMARK(BM_HasseCovers)->Args({3, 2})->Args({2, 4})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_BruhatLeqWreath(benchmark::State& state) {
  const wreath::GroupContext ctx(4, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& x = ctx.element(i % ctx.size());
    const auto& y = ctx.element((i * 7919) % ctx.size());
    benchmark::DoNotOptimize(wreath::bruhat_leq(x, y));
    ++i;
  }
}
BENCHMARK(BM_BruhatLeqWreath);

void BM_VerifyRelations(benchmark::State& state) {
  const wreath::ConvolutionAlgebra alg(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(wreath::verify_relations(alg).passed());
}
BENCHMARK(BM_VerifyRelations)->Args({2, 2})->Args({3, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_BasisCensus(benchmark::State& state) {
  const wreath::ConvolutionAlgebra alg(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(wreath::basis_census(alg).span_rank);
}
BENCHMARK(BM_BasisCensus)->Args({3, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(wreath::character_table(m, d).rows.size());
}
BENCHMARK(BM_CharacterTable)->Args({2, 2})->Args({3, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_VerifySpringer(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(wreath::verify_springer(m, d).passed());
}
BENCHMARK(BM_VerifySpringer)->Args({2, 2})->Args({3, 2})->Args({2, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_DimensionProperty(benchmark::State& state) {
  for (auto _ : state) {
    bool ok = true;
    for (std::size_t m = 1; m <= 5; ++m)
      for (std::size_t d = 1; d <= 3; ++d)
        for (const auto& p : wreath::enumerate_profiles(m, d)) ok = ok && wreath::check_dimension_property(p);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_DimensionProperty)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
