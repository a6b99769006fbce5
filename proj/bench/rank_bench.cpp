#include <benchmark/benchmark.h>

#include "levelalg/exactalg.hpp"

using namespace levelalg;

namespace {

// Square matrices of rank n/2 so elimination does real work on every row.
DenseMatrix input(std::size_t n, const PrimeField& f) {
    DenseMatrix a = sample_matrix(n, n / 2, f, 7, "bench-a");
    DenseMatrix b = sample_matrix(n / 2, n, f, 7, "bench-b");
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n / 2; ++k) {
            const std::uint32_t x = a(i, k);
            for (std::size_t j = 0; j < n; ++j) m(i, j) = f.add(m(i, j), f.mul(x, b(k, j)));
        }
    return m;
}

void BM_rank(benchmark::State& state) {
    PrimeField f;
    DenseMatrix m = input(static_cast<std::size_t>(state.range(0)), f);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m, f));
}

void BM_rank_reference(benchmark::State& state) {
    PrimeField f;
    DenseMatrix m = input(static_cast<std::size_t>(state.range(0)), f);
    for (auto _ : state) benchmark::DoNotOptimize(rank_reference(m, f));
}

void BM_rank_large_prime(benchmark::State& state) {
    PrimeField f(2147483647u);
    DenseMatrix m = input(static_cast<std::size_t>(state.range(0)), f);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m, f));
}

}  // namespace

BENCHMARK(BM_rank)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_reference)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_large_prime)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
