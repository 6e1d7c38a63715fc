#include <benchmark/benchmark.h>

#include <projinv/verification.hpp>

using namespace projinv;

static void BM_EvaluateExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Configuration<Rational> c = random_config(n, 7);
    const auto descs = generating_set(n);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(c, descs));
}
BENCHMARK(BM_EvaluateExact)->Arg(3)->Arg(5)->Arg(8);

static void BM_EvaluateFloat(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Configuration<double> c = to_double_config(random_config(n, 7));
    const auto descs = generating_set(n);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(c, descs));
}
BENCHMARK(BM_EvaluateFloat)->Arg(3)->Arg(5)->Arg(8);

static void BM_TransformConfig(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Configuration<Rational> c = random_config(n, 11);
    Homography<Rational> h = random_homography(13, c);
    for (auto _ : state) benchmark::DoNotOptimize(transform_config(h, c));
}
BENCHMARK(BM_TransformConfig)->Arg(3)->Arg(8);

static void BM_ZInvariantExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Configuration<Rational> c = random_config(n, 17);
    for (auto _ : state) benchmark::DoNotOptimize(z_invariant(c));
}
BENCHMARK(BM_ZInvariantExact)->Arg(5)->Arg(9);

static void BM_RankCertificate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(invariant_jacobian_rank(n, 23));
}
BENCHMARK(BM_RankCertificate)->Arg(3)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
