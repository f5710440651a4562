#include <benchmark/benchmark.h>

#include "platocf/cf_core.hpp"
#include "platocf/geometry.hpp"
#include "platocf/scattering.hpp"
#include "platocf/size_distribution.hpp"

namespace
{
using namespace platocf;

// Panel count grows linearly with q, so cost should too
void BM_Intensity(benchmark::State& state)
{
    auto cf = cf_for(solid_shape(SolidKind::Octahedron, 1.0));
    double const q = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(intensity(cf, q));
}
BENCHMARK(BM_Intensity)->Arg(1)->Arg(10)->Arg(100);

void BM_PolydisperseIntensity(benchmark::State& state)
{
    auto cf = cf_for(solid_shape(SolidKind::Tetrahedron, 1.0));
    auto dist = SizeDistribution::poisson_gamma(4, 1.0);
    double const q = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(polydisperse_intensity(cf, dist, q));
}
BENCHMARK(BM_PolydisperseIntensity)->Arg(1)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_IntensityCurve(benchmark::State& state)
{
    auto cf = cf_for(solid_shape(SolidKind::Tetrahedron, 1.0));
    auto q = linear_grid(0, 100, 401);
    for (auto _ : state)
        benchmark::DoNotOptimize(intensity_curve(cf, q, {}, 1));
}
BENCHMARK(BM_IntensityCurve)->Unit(benchmark::kMillisecond);

}  // namespace
