#include <benchmark/benchmark.h>

#include "uniatlas/gauss_sums.hpp"
#include "uniatlas/lemma_suite.hpp"
#include "uniatlas/spin_group.hpp"
#include "uniatlas/springer_symbols.hpp"
#include "uniatlas/zeta_engine.hpp"

using namespace uniatlas;

static void BM_BuildSpinGroup(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto parts = lemmas::realize_square_signs(k, 0b10101u & ((1u << k) - 1));
  for (auto _ : state) {
    auto g = spin::SpinGroup::build(parts);
    benchmark::DoNotOptimize(g.table_a().order());
  }
}
BENCHMARK(BM_BuildSpinGroup)->DenseRange(2, 7);

static void BM_TwistAnalysis(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto g = spin::SpinGroup::build(lemmas::realize_square_signs(k, 0));
  spin::TwistPattern pattern;
  pattern.flips.assign(k - 1, 0);
  pattern.flips[0] = 1;
  const auto family = k % 2 == 0 ? spin::SpinFamily::D : spin::SpinFamily::B;
  for (auto _ : state) {
    auto report = spin::twist_analysis(g, pattern, family);
    benchmark::DoNotOptimize(report.fixed_order);
  }
}
BENCHMARK(BM_TwistAnalysis)->DenseRange(3, 6);

static void BM_EnumerateBlock(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto block = symbols::enumerate_block(k);
    benchmark::DoNotOptimize(block.size());
  }
}
BENCHMARK(BM_EnumerateBlock)->DenseRange(4, 12)->RangeMultiplier(2);

static void BM_EliminateCandidates(benchmark::State& state) {
  const auto query = zeta::make_query(zeta::SeriesFamily::Sp, 6, 7, 2);
  for (auto _ : state) {
    auto survivors = zeta::eliminate_candidates(query);
    benchmark::DoNotOptimize(survivors.size());
  }
}
BENCHMARK(BM_EliminateCandidates);

static void BM_GaussSum(benchmark::State& state) {
  const long long p = state.range(0);
  for (auto _ : state) {
    auto g = gauss::quadratic_gauss_sum(p);
    benchmark::DoNotOptimize(g.value);
  }
}
BENCHMARK(BM_GaussSum)->Arg(97)->Arg(199)->Arg(997);

static void BM_GaussSumExtension(benchmark::State& state) {
  for (auto _ : state) {
    auto g = gauss::quadratic_gauss_sum(13, 3);
    benchmark::DoNotOptimize(g.value);
  }
}
BENCHMARK(BM_GaussSumExtension);

BENCHMARK_MAIN();
