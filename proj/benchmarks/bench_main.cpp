#include <benchmark/benchmark.h>

#include "tamon/verify.hpp"

using namespace tamon;

namespace {

CycloMatrix sample_matrix(long n, int dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_quasi_unipotent(rng, n, dim, nullptr);
}

void BM_MatRank(benchmark::State& state) {
    CycloMatrix m = sample_matrix(state.range(0), (int)state.range(1), 7);
    for (auto _ : state) benchmark::DoNotOptimize(mat_rank(m));
}
BENCHMARK(BM_MatRank)->Args({4, 6})->Args({8, 8})->Args({12, 10});

void BM_WedgeMatrix(benchmark::State& state) {
    CycloMatrix m = sample_matrix(4, (int)state.range(0), 11);
    for (auto _ : state) benchmark::DoNotOptimize(wedge_matrix(m, (int)state.range(0) / 2));
}
BENCHMARK(BM_WedgeMatrix)->Arg(4)->Arg(6)->Arg(8);

void BM_JordanProfile(benchmark::State& state) {
    long n = state.range(0);
    CycloMatrix m = sample_matrix(n, 8, 13);
    std::vector<QZElem> cands;
    for (long k = 0; k < n; ++k) cands.push_back(QZElem::make(k, n));
    for (auto _ : state) benchmark::DoNotOptimize(jordan_profile(m, cands));
}
BENCHMARK(BM_JordanProfile)->Arg(4)->Arg(8);

void BM_HgAnalysis(benchmark::State& state) {
    Rng rng(42);
    AbelianType a = random_admissible(rng, state.range(0), 12);
    for (auto _ : state) benchmark::DoNotOptimize(hg_analysis(a));
}
BENCHMARK(BM_HgAnalysis)->Arg(3)->Arg(5)->Arg(8);

void BM_WeightFiltration(benchmark::State& state) {
    Rng rng(5);
    CycloMatrix nil = random_nilpotent(rng, 2, (int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(weight_filtration(nil, 0));
}
BENCHMARK(BM_WeightFiltration)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
