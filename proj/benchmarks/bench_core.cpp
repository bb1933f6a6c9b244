#include <benchmark/benchmark.h>

#include <vector>

#include "discount/asymptotics.hpp"
#include "discount/certify.hpp"
#include "discount/curve.hpp"
#include "discount/exact_mixture.hpp"

namespace {

using namespace discount;

// n equal-weight scenarios with rates k/(100 n), k = 1..n.
ExactScenarioSet ladder(int n) {
    std::vector<ExactScenario> s;
    for (int k = 1; k <= n; ++k) s.push_back({Rational(1, n), Rational(k, 100L * n)});
    return ExactScenarioSet(std::move(s));
}

void BM_CertifyDecreasing(benchmark::State& state) {
    const auto s = ladder(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(certify_theorem1(s));
}
BENCHMARK(BM_CertifyDecreasing)->DenseRange(2, 8);

void BM_ExactLimit(benchmark::State& state) {
    const auto s = ladder(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_limit(h_exact(mixture_to_rational(s))));
}
BENCHMARK(BM_ExactLimit)->DenseRange(2, 8, 2);

void BM_EstimateLimit(benchmark::State& state) {
    const auto model = mix(ladder(static_cast<int>(state.range(0))).to_float());
    for (auto _ : state) benchmark::DoNotOptimize(estimate_limit(model, RateKind::Hyperbolic, 1e8));
}
BENCHMARK(BM_EstimateLimit)->Arg(3)->Arg(8);

void BM_SampleCurve(benchmark::State& state) {
    const auto model = mix(ladder(static_cast<int>(state.range(0))).to_float());
    const auto grid = geometric_grid(1.0, 1e6, 256);
    for (auto _ : state) benchmark::DoNotOptimize(sample_curve(model, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}
BENCHMARK(BM_SampleCurve)->Arg(3)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
