#include <benchmark/benchmark.h>

#include "platocf/cf_calculus.hpp"
#include "platocf/cf_core.hpp"
#include "platocf/geometry.hpp"

namespace
{
using namespace platocf;

// Sweep r across every piece, including the arctan-heavy last one
template<double (*F)(double)>
void BM_ClosedForm(benchmark::State& state)
{
    double const dmax = F == &cf_octahedron ? 1.4142135623730951 : 1.0;
    double r = 0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(F(r));
        r += 1e-3 * dmax;
        if (r > dmax)
            r = 0;
    }
}
BENCHMARK(BM_ClosedForm<cf_tetrahedron>)->Name("cf_tetrahedron");
BENCHMARK(BM_ClosedForm<cf_octahedron>)->Name("cf_octahedron");

void BM_PiecewiseDispatch(benchmark::State& state)
{
    auto cf = cf_for(scale_to_unit_dmax(solid_shape(SolidKind::Octahedron, 1.0)));
    double r = 0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(cf(r));
        r = r > 1 ? 0 : r + 1e-3;
    }
}
BENCHMARK(BM_PiecewiseDispatch);

void BM_MomentIntegral(benchmark::State& state)
{
    auto cf = cf_for(solid_shape(SolidKind::Tetrahedron, 1.0));
    for (auto _ : state)
        benchmark::DoNotOptimize(moment_integral(cf, 4));
}
BENCHMARK(BM_MomentIntegral);

void BM_CurvatureJump(benchmark::State& state)
{
    auto cf = cf_for(solid_shape(SolidKind::Octahedron, 1.0));
    double const b = cf.breakpoints()[1];
    for (auto _ : state)
        benchmark::DoNotOptimize(curvature_jump(cf, b));
}
BENCHMARK(BM_CurvatureJump);

}  // namespace
