#pragma once

#include <cstdint>
#include <random>

namespace platocf
{
//---------------------------------------------------------------------------//
/*!
 * Seeded, caller-owned stream of uniform variates.
 *
 * A stream is keyed by (seed, stream, substream). Monte Carlo drivers split
 * their trials into fixed-size blocks and key one stream per block, so every
 * draw is a function of the seed, the block index and the position inside
 * the block. Results therefore do not depend on how blocks are assigned to
 * worker threads.
 */
class RandomStream
{
  public:
    explicit RandomStream(std::uint64_t seed,
                          std::uint64_t stream = 0,
                          std::uint64_t substream = 0);

    //! Uniform on [0, 1) with 53 random mantissa bits.
    double uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    //! Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t next_bits() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

struct Point3;

//! Isotropic unit vector: cos(theta) uniform on [-1, 1], azimuth uniform.
Point3 unit_direction(RandomStream& rng);

}  // namespace platocf
