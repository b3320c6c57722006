#include <benchmark/benchmark.h>

#include "errbounds/bounds.hpp"
#include "errbounds/entropy.hpp"
#include "errbounds/verifier.hpp"

using namespace errbounds;

static void BM_BinaryEntropyInverse(benchmark::State& state) {
  double h = 0.0;
  for (auto _ : state) {
    h = h >= 1.0 ? 0.0 : h + 0.001;
    benchmark::DoNotOptimize(binary_entropy_inverse(Bits(h), EntropyBranch::Lower));
  }
}
BENCHMARK(BM_BinaryEntropyInverse);

static void BM_AnalyticalUpper(benchmark::State& state) {
  const Probability p_min(0.2);
  double h = 0.0;
  for (auto _ : state) {
    h = h >= 0.4 ? 0.0 : h + 0.0004;
    benchmark::DoNotOptimize(analytical_upper(Bits(h), p_min));
  }
}
BENCHMARK(BM_AnalyticalUpper);

static void BM_ConditionalEntropy(benchmark::State& state) {
  const auto s = make_setting(make_priors(0.7), Probability(0.1), Probability(0.05));
  for (auto _ : state) {
    benchmark::DoNotOptimize(conditional_entropy(s));
  }
}
BENCHMARK(BM_ConditionalEntropy);

static void BM_CertifyBounds(benchmark::State& state) {
  const SamplerConfig cfg{.seed = 42,
                          .n_samples = static_cast<std::size_t>(state.range(0)),
                          .fixed_priors = std::nullopt,
                          .tolerance = 1e-9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_bounds(cfg, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CertifyBounds)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
