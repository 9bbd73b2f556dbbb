#include <benchmark/benchmark.h>

#include "hypwidth/analysis.hpp"

// Hot paths: signed distances, strip extremes per family, the width
// optimizer, and the whole-body checkers.

using namespace hypwidth;

namespace {

const Geodesic kLine{IdealPoint(0.4), IdealPoint(2.9)};

ConvexBody lens(int m) {
    return sample_disk_intersection({HPoint(0.2, 0.0), HPoint(-0.1, 0.15), HPoint(0.0, -0.2)},
                                    {1.0, 0.9, 1.1}, m);
}

void SignedDist(benchmark::State& state) {
    const HPoint p(0.3, -0.2);
    for (auto _ : state) benchmark::DoNotOptimize(signed_dist(p, kLine));
}
BENCHMARK(SignedDist);

void StripExtentReuleaux(benchmark::State& state) {
    const ConvexBody k = ConvexBody::reuleaux(static_cast<int>(state.range(0)), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(k.extent(kLine.normal()));
}
BENCHMARK(StripExtentReuleaux)->Arg(3)->Arg(7);

void StripExtentSampled(benchmark::State& state) {
    const ConvexBody k = lens(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(k.extent(kLine.normal()));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(StripExtentSampled)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void WidthReuleaux(benchmark::State& state) {
    const ConvexBody k = ConvexBody::reuleaux(3, 1.0);
    const IdealPoint x(0.7);
    for (auto _ : state) benchmark::DoNotOptimize(width(k, x).value);
}
BENCHMARK(WidthReuleaux);

void WidthSampled(benchmark::State& state) {
    const ConvexBody k = lens(static_cast<int>(state.range(0)));
    const IdealPoint x(0.7);
    for (auto _ : state) benchmark::DoNotOptimize(width(k, x).value);
}
BENCHMARK(WidthSampled)->Arg(2048)->Arg(8192);

void ThicknessMagicQuadrangle(benchmark::State& state) {
    const ConvexBody k = ConvexBody::magic_quadrangle();
    for (auto _ : state) benchmark::DoNotOptimize(thickness(k, 180).value);
}
BENCHMARK(ThicknessMagicQuadrangle)->Unit(benchmark::kMillisecond);

void ConstantWidthVerdict(benchmark::State& state) {
    const ConvexBody k = ConvexBody::reuleaux(5, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_constant_width(k, 1e-3, static_cast<int>(state.range(0))));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(ConstantWidthVerdict)->Arg(90)->Arg(360)->Unit(benchmark::kMillisecond);

void InradiusLens(benchmark::State& state) {
    const ConvexBody k = lens(2048);
    for (auto _ : state) benchmark::DoNotOptimize(inradius(k).value);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(InradiusLens)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
