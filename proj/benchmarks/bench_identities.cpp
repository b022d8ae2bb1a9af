#include <benchmark/benchmark.h>

#include "gsn/registry.hpp"

namespace {

void BM_Identity(benchmark::State& state, const char* id, gsn::Mode mode) {
  gsn::Bounds bounds = mode == gsn::Mode::Numeric ? gsn::Bounds::numeric_defaults() : gsn::Bounds::symbolic_defaults();
  bounds.max_p = 3;
  bounds.param_points = 2;
  for (auto _ : state) benchmark::DoNotOptimize(gsn::run_identity(id, mode, bounds));
}

BENCHMARK_CAPTURE(BM_Identity, eq323_numeric, "EQ-3.23", gsn::Mode::Numeric)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Identity, eq36_symbolic, "EQ-3.6", gsn::Mode::Symbolic)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Identity, eq42_numeric, "EQ-3.42", gsn::Mode::Numeric)->Unit(benchmark::kMillisecond);

}  // namespace
