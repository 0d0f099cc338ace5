#include <benchmark/benchmark.h>

#include "striptr/bps/bps.hpp"
#include "striptr/exact/bernoulli.hpp"
#include "striptr/free_energy/free_energy.hpp"
#include "striptr/polylog/polylog.hpp"
#include "striptr/trcore/recursion.hpp"

using namespace striptr;

namespace {

StripGeometry spp()
{
    KahlerMap k;
    k.variables = {"Q", "mu"};
    k.alpha_labels = {Monomial::parse("Q^-1"), Monomial::parse("mu")};
    return StripGeometry({Rational(2), Rational(1, 3)}, {}, 0, k);
}

StripGeometry six_punctured()
{
    return StripGeometry({Rational(1, 2), Rational(1, 5)}, {Rational(1, 3)}, 0);
}

} // namespace

static void BM_LiNeg(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(li_neg(n, Rational(5, 7)));
    }
}
BENCHMARK(BM_LiNeg)->Arg(1)->Arg(5)->Arg(9);

static void BM_SInverseSeries(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(s_inverse_series(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_SInverseSeries)->Arg(12)->Arg(40);

static void BM_ClosedRoute(benchmark::State &state)
{
    auto geom = six_punctured();
    for (auto _ : state) {
        benchmark::DoNotOptimize(fg_closed(static_cast<int>(state.range(0)), geom));
    }
}
BENCHMARK(BM_ClosedRoute)->DenseRange(2, 6, 2);

static void BM_ResidueRoute(benchmark::State &state)
{
    auto geom = six_punctured();
    for (auto _ : state) {
        benchmark::DoNotOptimize(fg_residue(static_cast<int>(state.range(0)), geom));
    }
}
BENCHMARK(BM_ResidueRoute)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_RecursionGenusTwo(benchmark::State &state)
{
    auto geom = spp();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tr_free_energy(2, geom, state.range(0), false));
    }
}
BENCHMARK(BM_RecursionGenusTwo)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_ProductLogSeries(benchmark::State &state)
{
    auto geom = spp();
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_product_log_series(geom, static_cast<int>(state.range(0)), 4));
    }
}
BENCHMARK(BM_ProductLogSeries)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Crosscheck(benchmark::State &state)
{
    auto geom = spp();
    for (auto _ : state) {
        benchmark::DoNotOptimize(coefficient_crosscheck(geom, 6, 5));
    }
}
BENCHMARK(BM_Crosscheck);

BENCHMARK_MAIN();
