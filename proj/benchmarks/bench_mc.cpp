#include <benchmark/benchmark.h>

#include "platocf/geometry.hpp"
#include "platocf/mc_oracle.hpp"
#include "platocf/random.hpp"

namespace
{
using namespace platocf;

void BM_SamplePoint(benchmark::State& state)
{
    auto kind = static_cast<SolidKind>(state.range(0));
    auto spec = solid_shape(kind, 1.0);
    RandomStream rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_point(spec, rng));
    state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_SamplePoint)
    ->Arg(static_cast<int>(SolidKind::Tetrahedron))
    ->Arg(static_cast<int>(SolidKind::Octahedron))
    ->Arg(static_cast<int>(SolidKind::Cylinder));

void BM_EstimateCF(benchmark::State& state)
{
    auto spec = solid_shape(SolidKind::Octahedron, 1.0);
    std::uint64_t const n = 1 << 20;
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_cf(spec, 0.5, n, 3, McParallel{1}));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_EstimateCF)->Unit(benchmark::kMillisecond);

}  // namespace
