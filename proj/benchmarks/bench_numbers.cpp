#include <benchmark/benchmark.h>

#include "gsn/bivariate.hpp"
#include "gsn/classic.hpp"
#include "gsn/gsn.hpp"
#include "gsn/weyl.hpp"

namespace {

void BM_GsnRowExplicit(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  const gsn::ParamSpec spec(2, gsn::Rational(1, 2), 2, p, {{1, 1, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(gsn::gsn_row(spec));
}
BENCHMARK(BM_GsnRowExplicit)->Arg(2)->Arg(4)->Arg(8);

void BM_GsnRowConversion(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  const gsn::ParamSpec spec(2, gsn::Rational(1, 2), 2, p, {{1, 1, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(gsn::convert_gen_to_gsn(spec, gsn::gen_row(spec)));
}
BENCHMARK(BM_GsnRowConversion)->Arg(2)->Arg(4)->Arg(8);

void BM_BivariateTriangle(benchmark::State& state) {
  const auto rows = static_cast<unsigned>(state.range(0));
  const gsn::Coefficients c{1, 2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(gsn::triangle(c, 2, rows));
}
BENCHMARK(BM_BivariateTriangle)->Arg(8)->Arg(16)->Arg(32);

void BM_SymbolicBivariate(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  const gsn::BivariateParams bp(gsn::Coefficients::symbolic(), p, p);
  for (auto _ : state) benchmark::DoNotOptimize(gsn::gsn2_row(bp));
}
BENCHMARK(BM_SymbolicBivariate)->Arg(1)->Arg(2)->Arg(3);

void BM_Stirling2Explicit(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state)
    for (long k = 0; k <= p; ++k) benchmark::DoNotOptimize(gsn::stirling2_explicit(p, k));
}
BENCHMARK(BM_Stirling2Explicit)->Arg(10)->Arg(40);

void BM_WeylPower(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  const gsn::WeylWord base = gsn::operator_lhs(gsn::Rational(1, 2), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gsn::weyl_power(base, p));
}
BENCHMARK(BM_WeylPower)->Arg(2)->Arg(4)->Arg(6);

}  // namespace
