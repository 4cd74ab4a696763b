// Serial reference kernels against their OpenMP counterparts, plus the
// powerdomain build and the sup-preservation scan.

#include <benchmark/benchmark.h>

#include "spectral/completion.hpp"
#include "spectral/generators.hpp"
#include "spectral/ideals.hpp"
#include "spectral/powerdomain.hpp"

using namespace spectral;

namespace {

// Grid posets (rows x cols) keep the down-set count predictable: C(r+c, r).
FinitePoset grid_for(const benchmark::State& state) {
  return fixtures::grid(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
}

template <std::vector<Subset> (*Kernel)(const FinitePoset&, IdealQuery)>
void run_kernel(benchmark::State& state) {
  const auto p = grid_for(state);
  std::size_t count = 0;
  for (auto _ : state) {
    auto sets = Kernel(p, {});
    count = sets.size();
    benchmark::DoNotOptimize(sets.data());
  }
  state.counters["down_sets"] = static_cast<double>(count);
  state.counters["elements"] = static_cast<double>(p.size());
}

void filter_args(benchmark::internal::Benchmark* b) {
  b->Args({3, 3})->Args({4, 4})->Args({4, 5})->Unit(benchmark::kMicrosecond);
}

void extension_args(benchmark::internal::Benchmark* b) {
  b->Args({4, 4})->Args({5, 5})->Args({6, 6})->Args({5, 8})->Unit(benchmark::kMicrosecond);
}

void BM_BuildPowerdomain(benchmark::State& state) {
  const auto p = grid_for(state);
  for (auto _ : state) {
    auto pd = build_powerdomain(p);
    benchmark::DoNotOptimize(pd.size());
  }
}

void BM_SupScan(benchmark::State& state) {
  const auto pd = build_powerdomain(fixtures::boolean_lattice(static_cast<std::size_t>(state.range(0))));
  const auto id = MonotoneMap::identity(pd.order());
  for (auto _ : state) benchmark::DoNotOptimize(is_sup_preserving(id));
  state.counters["points"] = static_cast<double>(pd.size());
}

}  // namespace

BENCHMARK_TEMPLATE(run_kernel, down_sets_filter_serial)->Name("filter/serial")->Apply(filter_args);
BENCHMARK_TEMPLATE(run_kernel, down_sets_filter_parallel)->Name("filter/parallel")->Apply(filter_args);
BENCHMARK_TEMPLATE(run_kernel, down_sets_extension_serial)->Name("extension/serial")->Apply(extension_args);
BENCHMARK_TEMPLATE(run_kernel, down_sets_extension_parallel)->Name("extension/parallel")->Apply(extension_args);
BENCHMARK(BM_BuildPowerdomain)->Args({4, 4})->Args({6, 6})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SupScan)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
