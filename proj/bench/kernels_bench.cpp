// Serial reference kernels against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS.

#include "narayana/analysis.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

using namespace narayana;
namespace an = narayana::analysis;

namespace {

void set_threads(benchmark::State& state) { state.counters["threads"] = omp_get_max_threads(); }

void BM_HistogramSerial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(an::serial::length_histogram(state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HistogramParallel(benchmark::State& state)
{
    set_threads(state);
    for (auto _ : state) benchmark::DoNotOptimize(an::length_histogram(state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CurveSerial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(an::serial::length_curve(state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CurveParallel(benchmark::State& state)
{
    set_threads(state);
    for (auto _ : state) benchmark::DoNotOptimize(an::length_curve(state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CoverageSerial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            an::serial::sequence_coverage(kind::Variant{-2}, state.range(0), constraint_from_gap(3)));
    }
}

void BM_CoverageParallel(benchmark::State& state)
{
    set_threads(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(an::sequence_coverage(kind::Variant{-2}, state.range(0), constraint_from_gap(3)));
    }
}

const std::vector<Integer>& zipf_values()
{
    static const auto values = draw_samples(Distribution::zipf(1.1, 1'000'000), 1'000'000, 1);
    return values;
}

void BM_TotalBitsSerial(benchmark::State& state)
{
    const auto& v = zipf_values();
    for (auto _ : state) benchmark::DoNotOptimize(an::serial::total_code_bits(Code::Narayana, v));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}

void BM_TotalBitsParallel(benchmark::State& state)
{
    set_threads(state);
    const auto& v = zipf_values();
    for (auto _ : state) benchmark::DoNotOptimize(an::total_code_bits(Code::Narayana, v));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}

const std::vector<Integer>& resync_values()
{
    static const auto values = draw_samples(Distribution::uniform(100000), 2000, 1);
    return values;
}

void BM_ResyncSerial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(an::serial::resync_trials(resync_values(), state.range(0), 2));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ResyncParallel(benchmark::State& state)
{
    set_threads(state);
    for (auto _ : state) benchmark::DoNotOptimize(an::resync_trials(resync_values(), state.range(0), 2));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_HistogramSerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramParallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveSerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveParallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TotalBitsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TotalBitsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResyncSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResyncParallel)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
