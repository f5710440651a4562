#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "random.hpp"

namespace platocf
{
//---------------------------------------------------------------------------//
// TYPES
//---------------------------------------------------------------------------//
//! Reference solids. Cube and cylinder only serve as Monte Carlo comparisons.
enum class SolidKind
{
    Tetrahedron,
    Octahedron,
    Sphere,
    Cube,
    Cylinder,
};

std::string_view to_string(SolidKind kind);
std::optional<SolidKind> parse_solid_kind(std::string_view name);

//! True for the solids with a closed-form correlation function.
constexpr bool has_analytic_cf(SolidKind kind)
{
    return kind == SolidKind::Tetrahedron || kind == SolidKind::Octahedron
           || kind == SolidKind::Sphere;
}

struct Point3
{
    double x{0};
    double y{0};
    double z{0};
};

inline Point3 operator+(Point3 const& a, Point3 const& b)
{
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Point3 operator-(Point3 const& a, Point3 const& b)
{
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Point3 operator*(double s, Point3 const& p)
{
    return {s * p.x, s * p.y, s * p.z};
}
inline double dot(Point3 const& a, Point3 const& b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline double norm2(Point3 const& p) { return dot(p, p); }

//---------------------------------------------------------------------------//
/*!
 * Geometric description of a reference solid.
 *
 * \c edge is the edge length for polyhedra and the diameter for the sphere.
 * The cylinder has height equal to its diameter and \c edge holds that
 * common value.
 *
 * \c rg2 is the squared gyration radius. For the sphere and cylinder it is
 * exact (\c rg2_stderr is zero); for polyhedra it comes from a cached Monte
 * Carlo estimate and \c rg2_stderr carries its standard error.
 */
struct SolidSpec
{
    SolidKind kind{SolidKind::Tetrahedron};
    double edge{1};
    double surface{0};
    double volume{0};
    double dmax{0};
    double rg2{0};
    double rg2_stderr{0};
};

//! Sample count and seed of the cached gyration-radius estimate.
inline constexpr std::uint64_t rg2_cache_samples = 10'000'000;
inline constexpr std::uint64_t rg2_cache_seed = 0x7e7a0c7aULL;

//---------------------------------------------------------------------------//
// OPERATIONS
//---------------------------------------------------------------------------//
// Exact surface, volume and maximal chord for a solid of the given size
SolidSpec solid_metrics(SolidKind kind, double edge);

// As solid_metrics but skipping the Monte Carlo gyration estimate: polyhedra
// get rg2 = rg2_stderr = 0
SolidSpec solid_shape(SolidKind kind, double edge);

// Multiply every length by lambda
SolidSpec rescale(SolidSpec const& solid, double lambda);

// Rescale so the maximal chord equals one
SolidSpec scale_to_unit_dmax(SolidSpec const& solid);

/*!
 * Closed point containment in the canonical placement:
 *
 * - tetrahedron: vertices at l(1,1,1), l(1,-1,-1), l(-1,1,-1), l(-1,-1,1)
 *   with l = edge / (2 sqrt 2);
 * - octahedron: |x| + |y| + |z| <= edge / sqrt 2;
 * - sphere, cube: centered at the origin, cube axis-aligned;
 * - cylinder: centered at the origin with its axis along z.
 */
bool contains(SolidSpec const& solid, Point3 const& p);

// Uniform point inside the solid; deterministic given the stream state
Point3 sample_point(SolidSpec const& solid, RandomStream& rng);

// As above, also counting candidate draws consumed by rejection
Point3 sample_point(SolidSpec const& solid,
                    RandomStream& rng,
                    std::uint64_t& attempts);

// Vertices of the canonical placement (empty for sphere and cylinder)
std::vector<Point3> vertices(SolidSpec const& solid);

// Half-width of the axis-aligned bounding cube of the canonical placement
double bounding_half_width(SolidSpec const& solid);

// Distance between parallel facets, if the solid has any
std::optional<double> parallel_face_separation(SolidSpec const& solid);

}  // namespace platocf
