#include <benchmark/benchmark.h>

#include "cocat/catalog.hpp"
#include "cocat/monoid.hpp"
#include "cocat/search.hpp"
#include "cocat/tensor.hpp"

using namespace cocat;

namespace {

// range(0): 0 = serial reference, 1 = OpenMP kernel.
void completion_search(benchmark::State& state) {
  const auto corner = cartesian_tensor(ordinal(2), ordinal(2));
  for (auto _ : state) benchmark::DoNotOptimize(search_double_completions(corner, state.range(0) == 1));
}

void set_completion_search(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(set_double_completions(4, state.range(0) == 1));
}

void associator_extension(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_associator_extension(TensorKind::GrayPseudo, state.range(0) == 1));
}

void monoid_obstruction(benchmark::State& state) {
  const auto z4 = cyclic_monoid(4);
  for (auto _ : state) benchmark::DoNotOptimize(search_comultiplication(z4, 6, state.range(0) == 1));
}

}  // namespace

BENCHMARK(completion_search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(set_completion_search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(associator_extension)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(monoid_obstruction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
