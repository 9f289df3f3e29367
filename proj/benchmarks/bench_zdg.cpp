// Microbenchmarks for the hot paths: factorization, matrix construction,
// the dense and reduced eigensolves, all-pairs BFS, and a full analysis.

#include "zdg/zdg.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

namespace {

zdg::ClassStructure cs_for(std::uint64_t n) {
    return zdg::class_partition(zdg::factorize(n));
}

void BM_FactorizeSemiprime(benchmark::State& state) {
    // Two 7-digit primes: past the trial-division bound, resolved by rho.
    const std::uint64_t n = 1000003ULL * 1000033ULL;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zdg::factorize(n));
    }
}
BENCHMARK(BM_FactorizeSemiprime);

void BM_ClassPartition(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto fm = zdg::factorize(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zdg::class_partition(fm));
    }
}
BENCHMARK(BM_ClassPartition)->Arg(720)->Arg(30030);

void BM_BuildAdjacency(benchmark::State& state) {
    const auto cs = cs_for(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            zdg::build_adjacency(cs, zdg::Convention::paper_loops));
    }
    state.SetLabel("order " + std::to_string(cs.total_vertices));
}
BENCHMARK(BM_BuildAdjacency)->Arg(720)->Arg(1024);

void BM_DenseSpectrum(benchmark::State& state) {
    const auto cs = cs_for(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zdg::spectrum(
            cs, zdg::Convention::paper_loops, zdg::SpectrumSource::full_dense));
    }
    state.SetLabel("order " + std::to_string(cs.total_vertices));
}
BENCHMARK(BM_DenseSpectrum)->Arg(27)->Arg(100)->Arg(243)->Unit(benchmark::kMicrosecond);

void BM_ReducedSpectrum(benchmark::State& state) {
    const auto cs = cs_for(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zdg::spectrum(cs, zdg::Convention::paper_loops,
                                               zdg::SpectrumSource::class_reduced));
    }
    state.SetLabel(std::to_string(cs.classes.size()) + " classes");
}
BENCHMARK(BM_ReducedSpectrum)->Arg(243)->Arg(720)->Arg(30030)->Unit(benchmark::kMicrosecond);

void BM_WienerBfs(benchmark::State& state) {
    const auto cs = cs_for(static_cast<std::uint64_t>(state.range(0)));
    const auto matrix = zdg::build_adjacency(cs, zdg::Convention::paper_loops);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zdg::wiener_index(zdg::bfs_distances(matrix)));
    }
    state.SetLabel("order " + std::to_string(cs.total_vertices));
}
BENCHMARK(BM_WienerBfs)->Arg(720)->Arg(1996)->Unit(benchmark::kMicrosecond);

void BM_Analyze(benchmark::State& state) {
    zdg::AnalyzeOptions options;
    options.collect_timings = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            zdg::analyze(static_cast<std::uint64_t>(state.range(0)), options));
    }
}
BENCHMARK(BM_Analyze)->Arg(243)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
