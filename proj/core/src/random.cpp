#include "platocf/random.hpp"

#include <cmath>
#include <numbers>

#include "platocf/geometry.hpp"

namespace platocf
{
namespace
{
std::mt19937_64 make_engine(std::uint64_t seed,
                            std::uint64_t stream,
                            std::uint64_t substream)
{
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    std::seed_seq seq{lo(seed),
                      hi(seed),
                      lo(stream),
                      hi(stream),
                      lo(substream),
                      hi(substream)};
    return std::mt19937_64(seq);
}
}  // namespace

RandomStream::RandomStream(std::uint64_t seed,
                           std::uint64_t stream,
                           std::uint64_t substream)
    : engine_(make_engine(seed, stream, substream))
{
}

Point3 unit_direction(RandomStream& rng)
{
    double const cos_theta = rng.uniform(-1.0, 1.0);
    double const phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    double const sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    return {sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta};
}

}  // namespace platocf
