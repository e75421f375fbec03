#include <benchmark/benchmark.h>

#include "rquant/catalog.hpp"
#include "rquant/quantize.hpp"
#include "rquant/verify.hpp"

namespace {

void BM_PolyMul(benchmark::State& state) {
  const rquant::Poly a = rquant::Poly::parse("1 + 2*lambda - 1/3*theta + lambda*theta^2");
  rquant::Poly p(1);
  for (auto _ : state) {
    p = rquant::Poly(1);
    for (int64_t n = 0; n < state.range(0); ++n) p *= a;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PolyMul)->Arg(2)->Arg(4)->Arg(8);

void BM_Op3Compose(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const rquant::Op3 a = rquant::lift12(rquant::flag_r(d, rquant::Poly::variable("c")).op);
  const rquant::Op3 b = rquant::lift23(rquant::permutation_P(d));
  for (auto _ : state) benchmark::DoNotOptimize(rquant::compose(a, b));
}
BENCHMARK(BM_Op3Compose)->Arg(2)->Arg(3)->Arg(4);

void BM_BraidResidualExample2(benchmark::State& state) {
  const rquant::HSeries s = rquant::example2(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rquant::braid_residual(s));
}
BENCHMARK(BM_BraidResidualExample2)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_QuantizeExample2(benchmark::State& state) {
  const rquant::ClassicalR r = rquant::classical_limit(rquant::example2()).r;
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rquant::quantize(r, order, {true, true, false}));
}
BENCHMARK(BM_QuantizeExample2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
