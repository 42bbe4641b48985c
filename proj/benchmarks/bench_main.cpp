#include <benchmark/benchmark.h>

#include "qm/harmonics.hpp"

namespace {

// Fresh ring per iteration so the slice cache does not hide the work.
void BM_Slice(benchmark::State& state, const char* label) {
  const qm::CoxeterGroup g = qm::build_group(label);
  const qm::MultiplicityFunction m(g, {static_cast<unsigned>(state.range(1))});
  for (auto _ : state) {
    qm::QuasiinvariantRing ring(g, m);
    benchmark::DoNotOptimize(ring.slice(static_cast<unsigned>(state.range(0))).dim());
  }
}
BENCHMARK_CAPTURE(BM_Slice, A2, "A2")->Args({6, 1})->Args({9, 2});
BENCHMARK_CAPTURE(BM_Slice, B2, "B2")->Args({8, 1})->Args({12, 2});
BENCHMARK_CAPTURE(BM_Slice, G2, "G2")->Args({12, 1});

void BM_Gram(benchmark::State& state, const char* label) {
  const qm::CoxeterGroup g = qm::build_group(label);
  const qm::MultiplicityFunction m(g, {1});
  const auto j = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    qm::QmContext ctx(g, m);
    benchmark::DoNotOptimize(ctx.gram(j));
  }
}
BENCHMARK_CAPTURE(BM_Gram, A2, "A2")->Arg(4)->Arg(6);
BENCHMARK_CAPTURE(BM_Gram, B2, "B2")->Arg(4)->Arg(6);

void BM_HarmonicSpace(benchmark::State& state, const char* label) {
  const qm::CoxeterGroup g = qm::build_group(label);
  const qm::MultiplicityFunction m(g, {static_cast<unsigned>(state.range(0))});
  for (auto _ : state) {
    qm::QmContext ctx(g, m);
    benchmark::DoNotOptimize(ctx.harmonic_space().basis.total());
  }
}
BENCHMARK_CAPTURE(BM_HarmonicSpace, A2, "A2")->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HarmonicSpace, B2, "B2")->Arg(1)->Unit(benchmark::kMillisecond);

void BM_B6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qm::b6_counterexample().pi_v_zero);
}
BENCHMARK(BM_B6)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
