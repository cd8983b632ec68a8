#include <benchmark/benchmark.h>

#include "specvol/curves.hpp"
#include "specvol/extract.hpp"
#include "specvol/mirzakhani.hpp"
#include "specvol/oracle.hpp"
#include "specvol/trec.hpp"

using namespace specvol;

// Fresh engine per iteration so the whole (g,n) DAG is recomputed.
static void BM_OkuyamaCorrelator(benchmark::State& state)
{
    const int g = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        RecursionEngine engine(CurveId::Okuyama);
        benchmark::DoNotOptimize(engine.correlator(g, n));
    }
}
BENCHMARK(BM_OkuyamaCorrelator)->Args({1, 2})->Args({0, 5})->Args({2, 1})->Args({0, 6})->Args({2, 2})->Unit(benchmark::kMillisecond);

static void BM_TopQCorrelator(benchmark::State& state)
{
    const int g = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        RecursionEngine engine(CurveId::TopQ);
        benchmark::DoNotOptimize(engine.correlator(g, n));
    }
}
BENCHMARK(BM_TopQCorrelator)->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);

static void BM_MirzakhaniQ(benchmark::State& state)
{
    const int g = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto engine = MirzakhaniEngine::q_deformed();
        benchmark::DoNotOptimize(engine.volume(g, n));
    }
}
BENCHMARK(BM_MirzakhaniQ)->Args({2, 2})->Args({3, 1})->Args({0, 7})->Unit(benchmark::kMillisecond);

static void BM_DiscreteVolume(benchmark::State& state)
{
    RecursionEngine engine(CurveId::Okuyama);
    auto w = engine.correlator(2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(discrete_volume(*w));
}
BENCHMARK(BM_DiscreteVolume)->Unit(benchmark::kMillisecond);

static void BM_SeriesExp(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(0));
    TruncatedLaurentSeries exponent(GeneratorFamily::ZetaQ, 1, degree);
    for (int k = 1; 2 * k <= degree; ++k) exponent.at(2 * k) = GradedCoefficient::zeta(k, make_rational(1 << (2 * k), k));
    for (auto _ : state) benchmark::DoNotOptimize(series_exp(exponent));
}
BENCHMARK(BM_SeriesExp)->Arg(8)->Arg(16);

static void BM_ChordMoment(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(chord_moment(k));
}
BENCHMARK(BM_ChordMoment)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_ZetaQNumeric(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(zeta_q_numeric(3, 0.999L, 1e-12L));
}
BENCHMARK(BM_ZetaQNumeric)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
