#include <benchmark/benchmark.h>

#include "walldiv/binary_form.hpp"
#include "walldiv/brill_noether.hpp"
#include "walldiv/catalog.hpp"
#include "walldiv/wall.hpp"

using namespace walldiv;

// wall_test at p = genus on a fixed k, delta = 0
static void BM_wall_test(benchmark::State& state) {
  const BNParams params = BNParams::make(0, state.range(0), 0, 6);
  const CurveClass r = curve_class(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wall_test(r, params.ctx()));
  }
}
BENCHMARK(BM_wall_test)->Arg(10)->Arg(40)->Arg(160)->Arg(640);

static void BM_canonical_form_indefinite(benchmark::State& state) {
  const Integer n = state.range(0);
  const Gram2 g{2 * n + 1, n, -3 * n - 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(g));
  }
}
BENCHMARK(BM_canonical_form_indefinite)->Arg(3)->Arg(30)->Arg(300);

static void BM_canonical_form_definite(benchmark::State& state) {
  const Integer n = state.range(0);
  const Gram2 g{n * n + 1, n * n, n * n + 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(g));
  }
}
BENCHMARK(BM_canonical_form_definite)->Arg(10)->Arg(1000);

static void BM_generate_catalog(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  const std::int64_t p0 = 2 * k - 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_catalog({k, 0, 2, p0, p0}));
  }
}
BENCHMARK(BM_generate_catalog)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
