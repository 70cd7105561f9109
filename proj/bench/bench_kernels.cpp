// Serial reference vs OpenMP kernels: truncated Cauchy product and the
// batched partition counter.

#include <benchmark/benchmark.h>

#include <random>

#include "theta/constraint.hpp"
#include "theta/qseries.hpp"
#include "theta/series.hpp"

using namespace theta;

namespace {

TruncatedSeries dense_series(int order, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    TruncatedSeries s(order);
    for (int i = 0; i <= order; ++i) s[i] = d(rng);
    return s;
}

void BM_mul_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TruncatedSeries a = dense_series(n, 1), b = dense_series(n, 2), out(n);
    for (auto _ : state) {
        kernels::mul_serial(a, b, out);
        benchmark::DoNotOptimize(out);
    }
}

void BM_mul_parallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TruncatedSeries a = dense_series(n, 1), b = dense_series(n, 2), out(n);
    for (auto _ : state) {
        kernels::mul_parallel(a, b, out);
        benchmark::DoNotOptimize(out);
    }
}

// A realistic workload: big-integer coefficients of partition scale.
void BM_inverse_pochhammer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TruncatedSeries p = pochhammer(1, 1, n);
    for (auto _ : state) {
        TruncatedSeries inv = inverse(p);
        benchmark::DoNotOptimize(inv);
    }
}

void BM_count_range_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Constraint c = Constraint::regular(3);
    for (auto _ : state) {
        auto v = kernels::count_range_serial(c, n);
        benchmark::DoNotOptimize(v);
    }
}

void BM_count_range_parallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Constraint c = Constraint::regular(3);
    for (auto _ : state) {
        auto v = kernels::count_range_parallel(c, n);
        benchmark::DoNotOptimize(v);
    }
}

}  // namespace

BENCHMARK(BM_mul_serial)->Arg(256)->Arg(512)->Arg(1024);
BENCHMARK(BM_mul_parallel)->Arg(256)->Arg(512)->Arg(1024);
BENCHMARK(BM_inverse_pochhammer)->Arg(512);
BENCHMARK(BM_count_range_serial)->Arg(50)->Arg(60);
BENCHMARK(BM_count_range_parallel)->Arg(50)->Arg(60);

BENCHMARK_MAIN();
