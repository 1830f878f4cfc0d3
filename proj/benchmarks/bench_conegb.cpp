#include <benchmark/benchmark.h>

#include <random>

#include "conegb/engine.hpp"
#include "conegb/hilbert.hpp"
#include "conegb/simplex.hpp"
#include "conegb/systems.hpp"

using namespace conegb;

namespace {

StrategyConfig sugar() {
  StrategyConfig cfg;
  cfg.strategy = Strategy::Sugar;
  return cfg;
}

void BM_StaticCyclic(benchmark::State& state) {
  const auto f = generate_cyclic(static_cast<std::size_t>(state.range(0)));
  const auto order = TermOrdering::grevlex(f.front().nvars());
  for (auto _ : state) benchmark::DoNotOptimize(static_run(f, order, sugar()));
}
BENCHMARK(BM_StaticCyclic)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_DynamicCyclic(benchmark::State& state) {
  const auto f = generate_cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dynamic_run(f, sugar()));
}
BENCHMARK(BM_DynamicCyclic)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_DynamicKatsura(benchmark::State& state) {
  const auto f = generate_katsura(static_cast<std::size_t>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(dynamic_run(f, sugar()));
}
BENCHMARK(BM_DynamicKatsura)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_HilbertData(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::uniform_int_distribution<int> e(0, 5);
  std::vector<Term> gens;
  for (int i = 0; i < 20; ++i) {
    std::vector<std::int32_t> v(n);
    for (auto& x : v) x = e(rng);
    gens.emplace_back(v);
  }
  const MonomialIdeal ideal(n, gens);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_data(ideal));
}
BENCHMARK(BM_HilbertData)->DenseRange(4, 8, 2);

void BM_FeasibleWeight(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::uniform_int_distribution<int> c(-3, 3);
  // A feasible system: every row is positive at (n, n-1, ..., 1).
  ConstraintSystem sys(n);
  while (sys.size() < 3 * n) {
    std::vector<std::int64_t> row(n);
    std::int64_t at = 0;
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = c(rng);
      at += row[k] * static_cast<std::int64_t>(n - k);
    }
    if (at > 0) sys.add(Constraint(row));
  }
  for (auto _ : state) benchmark::DoNotOptimize(feasible_weight(sys));
}
BENCHMARK(BM_FeasibleWeight)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
