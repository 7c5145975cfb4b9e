#include <benchmark/benchmark.h>

#include <gring/dsl.hpp>
#include <gring/ideal.hpp>

using namespace gring;

namespace {

void BM_GroupRingMul(benchmark::State& state) {
  auto r = build_ring("Z3[S3]");  // untabled: every product is a convolution
  const ElemId n = ElemId(r->size());
  ElemId x = 0;
  for (auto _ : state) {
    x = (x + 131) % n;
    benchmark::DoNotOptimize(r->mul(x, (x + 7) % n));
  }
}
BENCHMARK(BM_GroupRingMul);

void BM_PrincipalIdeal(benchmark::State& state) {
  auto r = build_ring("Z4[D4]");
  ElemId x = 0;
  for (auto _ : state) {
    x = (x + 9173) % ElemId(r->size());
    benchmark::DoNotOptimize(ideal_closure(r, std::vector<ElemId>{x}));
  }
}
BENCHMARK(BM_PrincipalIdeal);

void BM_NilaryDecision(benchmark::State& state) {
  auto r = build_ring("Z3[C6]");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_ideal_property(zero_ideal(r), IdealProperty::Nilary));
  }
}
BENCHMARK(BM_NilaryDecision);

void BM_ParseRoundTrip(benchmark::State& state) {
  const std::string text = "Z4[C2 x C2][C3] x Z9[S3]";
  for (auto _ : state) {
    benchmark::DoNotOptimize(print_ring_expr(*parse_ring_expr(text)));
  }
}
BENCHMARK(BM_ParseRoundTrip);

}  // namespace

BENCHMARK_MAIN();
