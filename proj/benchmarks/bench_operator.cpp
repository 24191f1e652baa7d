#include <benchmark/benchmark.h>

#include "dimcert/scheme.hpp"
#include "dimcert/symmetric.hpp"

namespace {

void bm_apply_d2(benchmark::State& state) {
  using namespace dimcert;
  const auto cells = state.range(0);
  const Interval box{0.617, 0.619};
  const auto comp = build_complementary(SimilarityScheme::bernoulli(box));
  const auto J = admissible_interval(comp, box, 0.1);
  StepFunction psi = StepFunction::indicator(UniformPartition::of(J, cells));
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_d2_discrete(psi, 0.9, box, comp));
  }
  state.SetItemsProcessed(state.iterations() * cells);
}

void bm_certify(benchmark::State& state) {
  using namespace dimcert;
  const Interval box{0.74, 0.76};
  const auto comp = build_complementary(SimilarityScheme::bernoulli(box));
  const auto J = admissible_interval(comp, box, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        certify_alpha(comp, box, J, state.range(0), {1e-3, 200, 0.995, 0.75}));
  }
}

}  // namespace

BENCHMARK(bm_apply_d2)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(bm_certify)->Arg(120)->Arg(4000);

BENCHMARK_MAIN();
