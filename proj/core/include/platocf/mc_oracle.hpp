#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geometry.hpp"

namespace platocf
{
//! Monte Carlo mean with its standard error and provenance.
struct McEstimate
{
    double mean{0};
    double std_error{0};
    std::uint64_t n_samples{0};
    std::uint64_t seed{0};
};

//! Abscissa, value and (for stochastic tables) standard error.
struct CurvePoint
{
    double x{0};
    double value{0};
    double std_error{0};
};

//! Trials per independently keyed random stream.
inline constexpr std::uint64_t mc_block_size = 1 << 16;

//! Worker threads; zero selects std::thread::hardware_concurrency.
struct McParallel
{
    unsigned workers{0};
};

/*!
 * Unbiased estimate of gamma(r): the fraction of trials in which x + r u
 * stays inside the solid, with x uniform in the solid and u isotropic.
 *
 * Trials are grouped into blocks of \c mc_block_size; block \c b draws from
 * RandomStream(seed, stream, b). Hit counts are exact integers, so the
 * estimate is bitwise independent of the number of workers.
 */
McEstimate estimate_cf(SolidSpec const& solid,
                       double r,
                       std::uint64_t n,
                       std::uint64_t seed,
                       McParallel par = {},
                       std::uint64_t stream = 0);

/*!
 * Squared gyration radius: mean |x - c|^2 over uniform interior points,
 * with the centroid c taken from the same sample in a first pass.
 */
McEstimate estimate_rg2(SolidSpec const& solid,
                        std::uint64_t n,
                        std::uint64_t seed,
                        McParallel par = {});

//! Volume as bounding-cube volume times the rejection hit rate.
McEstimate estimate_volume(SolidSpec const& solid,
                           std::uint64_t n,
                           std::uint64_t seed,
                           McParallel par = {});

//! Raw per-point CF estimates; point i uses stream i of the seed.
std::vector<CurvePoint> tabulate_cf(SolidSpec const& solid,
                                    std::span<double const> grid,
                                    std::uint64_t n_per_point,
                                    std::uint64_t seed,
                                    McParallel par = {});

}  // namespace platocf
