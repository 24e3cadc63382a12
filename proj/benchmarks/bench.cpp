#include <benchmark/benchmark.h>

#include <random>

#include "ms3/catalogue.hpp"
#include "ms3/census.hpp"
#include "ms3/plan.hpp"
#include "ms3/realize.hpp"

using namespace ms3;

static void BM_census_rank4(benchmark::State& state) {
  auto w_class = state.range(0) ? WClass::nonzero : WClass::zero;
  int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto c = census(4, w_class, threads);
    benchmark::DoNotOptimize(c.classes.size());
  }
}
BENCHMARK(BM_census_rank4)->Args({0, 1})->Args({0, 4})->Args({1, 1})->Args({1, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_canonical_rank4(benchmark::State& state) {
  F2Vector w(4);
  auto space = enumerate_pw(4, w);
  std::mt19937_64 rng(5);
  std::vector<MsDescriptor> batch;
  for (int i = 0; i < 32; ++i) batch.emplace_back(space.form_at(rng() % space.size()), w);
  for (auto _ : state) {
    for (const auto& d : batch) benchmark::DoNotOptimize(canonical(d).form.packed());
  }
}
BENCHMARK(BM_canonical_rank4)->Unit(benchmark::kMillisecond);

static void BM_eval_spliced_plans(benchmark::State& state) {
  // large composite plan: every orientable catalogue plan spliced in sequence
  LinkPlan big;
  big.orientable = true;
  for (const auto& e : catalogue()) {
    if (!e.plan || !e.plan->orientable) continue;
    big = splice(big, *e.plan);
  }
  for (auto _ : state) {
    auto d = eval_plan(big);
    benchmark::DoNotOptimize(d.form.triples().size());
  }
}
BENCHMARK(BM_eval_spliced_plans);

static void BM_roundtrip_rank4(benchmark::State& state) {
  F2Vector w = F2Vector::unit(4, 0);
  auto space = enumerate_pw(4, w);
  std::mt19937_64 rng(9);
  for (auto _ : state) {
    MsDescriptor d(space.form_at(rng() % space.size()), w);
    benchmark::DoNotOptimize(roundtrip(d).ok);
  }
}
BENCHMARK(BM_roundtrip_rank4);

BENCHMARK_MAIN();
