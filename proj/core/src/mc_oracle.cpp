#include "platocf/mc_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "platocf/errors.hpp"

namespace platocf
{
namespace
{
constexpr std::uint64_t min_cf_samples = 1000;
constexpr std::uint64_t min_rg2_samples = 10'000;

unsigned resolve_workers(McParallel par, std::uint64_t blocks)
{
    unsigned w = par.workers ? par.workers : std::thread::hardware_concurrency();
    w = std::max(w, 1u);
    return static_cast<unsigned>(std::min<std::uint64_t>(w, blocks));
}

std::uint64_t block_count(std::uint64_t n)
{
    return (n + mc_block_size - 1) / mc_block_size;
}

std::uint64_t block_length(std::uint64_t n, std::uint64_t block)
{
    return std::min(mc_block_size, n - block * mc_block_size);
}

/*!
 * Run body(block) -> Result for every block and return the per-block results
 * in block order. Workers pull blocks from a shared counter.
 */
template<class Result, class Body>
std::vector<Result> run_blocks(std::uint64_t blocks, McParallel par, Body&& body)
{
    std::vector<Result> results(blocks);
    unsigned const workers = resolve_workers(par, blocks);
    if (workers <= 1)
    {
        for (std::uint64_t b = 0; b < blocks; ++b)
            results[b] = body(b);
        return results;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
    {
        pool.emplace_back([&] {
            for (auto b = next++; b < blocks; b = next++)
                results[b] = body(b);
        });
    }
    pool.clear();
    return results;
}

// Stream tags keep the passes of different estimators apart
constexpr std::uint64_t rg2_stream = 0x52470000;
constexpr std::uint64_t volume_stream = 0x564f0000;

}  // namespace

//---------------------------------------------------------------------------//
McEstimate estimate_cf(SolidSpec const& solid,
                       double r,
                       std::uint64_t n,
                       std::uint64_t seed,
                       McParallel par,
                       std::uint64_t stream)
{
    if (!(r >= 0))
        throw DomainError("estimate_cf: r must be non-negative");
    if (n < min_cf_samples)
        throw DomainError("estimate_cf: need at least 1000 samples");

    std::uint64_t const blocks = block_count(n);
    auto hits = run_blocks<std::uint64_t>(blocks, par, [&](std::uint64_t b) {
        RandomStream rng(seed, stream, b);
        std::uint64_t count = 0;
        std::uint64_t const len = block_length(n, b);
        for (std::uint64_t i = 0; i < len; ++i)
        {
            Point3 const x = sample_point(solid, rng);
            Point3 const u = unit_direction(rng);
            if (contains(solid, x + r * u))
                ++count;
        }
        return count;
    });

    std::uint64_t total = 0;
    for (auto h : hits)
        total += h;
    double const p = static_cast<double>(total) / static_cast<double>(n);
    return {p, std::sqrt(p * (1 - p) / static_cast<double>(n)), n, seed};
}

//---------------------------------------------------------------------------//
McEstimate estimate_rg2(SolidSpec const& solid,
                        std::uint64_t n,
                        std::uint64_t seed,
                        McParallel par)
{
    if (n < min_rg2_samples)
        throw DomainError("estimate_rg2: need at least 10000 samples");
    std::uint64_t const blocks = block_count(n);
    double const count = static_cast<double>(n);

    // Pass 1: centroid
    auto sums = run_blocks<Point3>(blocks, par, [&](std::uint64_t b) {
        RandomStream rng(seed, rg2_stream, b);
        Point3 sum{};
        std::uint64_t const len = block_length(n, b);
        for (std::uint64_t i = 0; i < len; ++i)
            sum = sum + sample_point(solid, rng);
        return sum;
    });
    Point3 centroid{};
    for (auto const& s : sums)
        centroid = centroid + s;
    centroid = (1 / count) * centroid;

    // Pass 2: replay the same points, accumulate |x - c|^2 and its square
    struct Moments
    {
        double s1{0};
        double s2{0};
    };
    auto moments = run_blocks<Moments>(blocks, par, [&](std::uint64_t b) {
        RandomStream rng(seed, rg2_stream, b);
        Moments m;
        std::uint64_t const len = block_length(n, b);
        for (std::uint64_t i = 0; i < len; ++i)
        {
            double const d2 = norm2(sample_point(solid, rng) - centroid);
            m.s1 += d2;
            m.s2 += d2 * d2;
        }
        return m;
    });
    double s1 = 0;
    double s2 = 0;
    for (auto const& m : moments)
    {
        s1 += m.s1;
        s2 += m.s2;
    }
    double const mean = s1 / count;
    double const var = std::max(0.0, (s2 - count * mean * mean) / (count - 1));
    return {mean, std::sqrt(var / count), n, seed};
}

//---------------------------------------------------------------------------//
McEstimate estimate_volume(SolidSpec const& solid,
                           std::uint64_t n,
                           std::uint64_t seed,
                           McParallel par)
{
    if (n < min_cf_samples)
        throw DomainError("estimate_volume: need at least 1000 samples");
    double const h = bounding_half_width(solid);
    std::uint64_t const blocks = block_count(n);
    auto hits = run_blocks<std::uint64_t>(blocks, par, [&](std::uint64_t b) {
        RandomStream rng(seed, volume_stream, b);
        std::uint64_t count = 0;
        std::uint64_t const len = block_length(n, b);
        for (std::uint64_t i = 0; i < len; ++i)
        {
            Point3 p{rng.uniform(-h, h), rng.uniform(-h, h), rng.uniform(-h, h)};
            if (contains(solid, p))
                ++count;
        }
        return count;
    });
    std::uint64_t total = 0;
    for (auto v : hits)
        total += v;
    double const frac = static_cast<double>(total) / static_cast<double>(n);
    double const box = 8 * h * h * h;
    return {box * frac,
            box * std::sqrt(frac * (1 - frac) / static_cast<double>(n)),
            n,
            seed};
}

//---------------------------------------------------------------------------//
std::vector<CurvePoint> tabulate_cf(SolidSpec const& solid,
                                    std::span<double const> grid,
                                    std::uint64_t n_per_point,
                                    std::uint64_t seed,
                                    McParallel par)
{
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw DomainError("tabulate_cf: grid must be sorted");
    std::vector<CurvePoint> table;
    table.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        auto est = estimate_cf(solid, grid[i], n_per_point, seed, par, i);
        table.push_back({grid[i], est.mean, est.std_error});
    }
    return table;
}

}  // namespace platocf
