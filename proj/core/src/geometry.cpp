#include "platocf/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

#include "platocf/errors.hpp"
#include "platocf/mc_oracle.hpp"

namespace platocf
{
namespace
{
using std::numbers::pi;
using std::numbers::sqrt2;
using std::numbers::sqrt3;

// Relative slack on the closed-set tests, in units of the bounding size
constexpr double boundary_slack = 8 * std::numeric_limits<double>::epsilon();

//! Surface, volume and maximal chord of the size-1 solid, without rg2.
SolidSpec unit_metrics(SolidKind kind)
{
    SolidSpec s;
    s.kind = kind;
    s.edge = 1;
    switch (kind)
    {
        case SolidKind::Tetrahedron:
            s.surface = sqrt3;
            s.volume = 1 / (6 * sqrt2);
            s.dmax = 1;
            break;
        case SolidKind::Octahedron:
            s.surface = 2 * sqrt3;
            s.volume = sqrt2 / 3;
            s.dmax = sqrt2;
            break;
        case SolidKind::Sphere:
            s.surface = pi;
            s.volume = pi / 6;
            s.dmax = 1;
            s.rg2 = 0.6 * 0.25;
            break;
        case SolidKind::Cube:
            s.surface = 6;
            s.volume = 1;
            s.dmax = sqrt3;
            break;
        case SolidKind::Cylinder:
            // Height equals diameter: R = 1/2, h = 1
            s.surface = 1.5 * pi;
            s.volume = pi / 4;
            s.dmax = sqrt2;
            s.rg2 = 5.0 / 24.0;
            break;
    }
    return s;
}

struct Rg2Cache
{
    std::once_flag once;
    double mean{0};
    double stderr_{0};
};

//! Monte Carlo gyration radius of a unit-edge polyhedron, computed once.
std::pair<double, double> cached_polyhedron_rg2(SolidKind kind)
{
    static std::array<Rg2Cache, 5> cache;
    auto& entry = cache[static_cast<std::size_t>(kind)];
    std::call_once(entry.once, [&] {
        auto est = estimate_rg2(
            unit_metrics(kind), rg2_cache_samples, rg2_cache_seed);
        entry.mean = est.mean;
        entry.stderr_ = est.std_error;
    });
    return {entry.mean, entry.stderr_};
}

bool is_polyhedron(SolidKind kind)
{
    return kind == SolidKind::Tetrahedron || kind == SolidKind::Octahedron
           || kind == SolidKind::Cube;
}

}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(SolidKind kind)
{
    switch (kind)
    {
        case SolidKind::Tetrahedron:
            return "tetrahedron";
        case SolidKind::Octahedron:
            return "octahedron";
        case SolidKind::Sphere:
            return "sphere";
        case SolidKind::Cube:
            return "cube";
        case SolidKind::Cylinder:
            return "cylinder";
    }
    return "unknown";
}

std::optional<SolidKind> parse_solid_kind(std::string_view name)
{
    for (auto kind : {SolidKind::Tetrahedron,
                      SolidKind::Octahedron,
                      SolidKind::Sphere,
                      SolidKind::Cube,
                      SolidKind::Cylinder})
    {
        if (to_string(kind) == name)
            return kind;
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
SolidSpec solid_shape(SolidKind kind, double edge)
{
    if (!(edge > 0) || !std::isfinite(edge))
    {
        throw DomainError("solid_metrics: edge must be positive and finite, got "
                          + std::to_string(edge));
    }
    return rescale(unit_metrics(kind), edge);
}

SolidSpec solid_metrics(SolidKind kind, double edge)
{
    SolidSpec s = solid_shape(kind, edge);
    if (is_polyhedron(kind))
    {
        auto [mean, err] = cached_polyhedron_rg2(kind);
        s.rg2 = mean * edge * edge;
        s.rg2_stderr = err * edge * edge;
    }
    return s;
}

SolidSpec rescale(SolidSpec const& solid, double lambda)
{
    if (!(lambda > 0))
        throw DomainError("rescale: factor must be positive");
    SolidSpec s = solid;
    s.edge *= lambda;
    s.surface *= lambda * lambda;
    s.volume *= lambda * lambda * lambda;
    s.dmax *= lambda;
    s.rg2 *= lambda * lambda;
    s.rg2_stderr *= lambda * lambda;
    return s;
}

SolidSpec scale_to_unit_dmax(SolidSpec const& solid)
{
    SolidSpec s = rescale(solid, 1 / solid.dmax);
    s.dmax = 1;
    return s;
}

//---------------------------------------------------------------------------//
double bounding_half_width(SolidSpec const& solid)
{
    switch (solid.kind)
    {
        case SolidKind::Tetrahedron:
            return solid.edge / (2 * sqrt2);
        case SolidKind::Octahedron:
            return solid.edge / sqrt2;
        case SolidKind::Sphere:
        case SolidKind::Cube:
        case SolidKind::Cylinder:
            return solid.edge / 2;
    }
    return 0;
}

bool contains(SolidSpec const& solid, Point3 const& p)
{
    double const h = bounding_half_width(solid);
    double const tol = boundary_slack * h;
    switch (solid.kind)
    {
        case SolidKind::Tetrahedron:
            return p.x + p.y + p.z >= -h - tol && p.x - p.y - p.z >= -h - tol
                   && -p.x + p.y - p.z >= -h - tol
                   && -p.x - p.y + p.z >= -h - tol;
        case SolidKind::Octahedron:
            return std::abs(p.x) + std::abs(p.y) + std::abs(p.z) <= h + tol;
        case SolidKind::Sphere:
            return norm2(p) <= h * h * (1 + boundary_slack);
        case SolidKind::Cube:
            return std::abs(p.x) <= h + tol && std::abs(p.y) <= h + tol
                   && std::abs(p.z) <= h + tol;
        case SolidKind::Cylinder:
            return p.x * p.x + p.y * p.y <= h * h * (1 + boundary_slack)
                   && std::abs(p.z) <= h + tol;
    }
    return false;
}

//---------------------------------------------------------------------------//
Point3 sample_point(SolidSpec const& solid,
                    RandomStream& rng,
                    std::uint64_t& attempts)
{
    double const h = bounding_half_width(solid);
    switch (solid.kind)
    {
        case SolidKind::Tetrahedron: {
            // Sorted uniform spacings give uniform barycentric weights
            std::array<double, 3> u{rng.uniform(), rng.uniform(), rng.uniform()};
            std::sort(u.begin(), u.end());
            double const w0 = u[0];
            double const w1 = u[1] - u[0];
            double const w2 = u[2] - u[1];
            double const w3 = 1 - u[2];
            ++attempts;
            return {h * (w0 + w1 - w2 - w3),
                    h * (w0 - w1 + w2 - w3),
                    h * (w0 - w1 - w2 + w3)};
        }
        case SolidKind::Cube:
            ++attempts;
            return {rng.uniform(-h, h), rng.uniform(-h, h), rng.uniform(-h, h)};
        case SolidKind::Octahedron:
        case SolidKind::Sphere:
            while (true)
            {
                ++attempts;
                Point3 p{rng.uniform(-h, h), rng.uniform(-h, h), rng.uniform(-h, h)};
                if (contains(solid, p))
                    return p;
            }
        case SolidKind::Cylinder:
            while (true)
            {
                ++attempts;
                double const x = rng.uniform(-h, h);
                double const y = rng.uniform(-h, h);
                if (x * x + y * y <= h * h)
                    return {x, y, rng.uniform(-h, h)};
            }
    }
    return {};
}

Point3 sample_point(SolidSpec const& solid, RandomStream& rng)
{
    std::uint64_t attempts = 0;
    return sample_point(solid, rng, attempts);
}

//---------------------------------------------------------------------------//
std::vector<Point3> vertices(SolidSpec const& solid)
{
    double const h = bounding_half_width(solid);
    switch (solid.kind)
    {
        case SolidKind::Tetrahedron:
            return {{h, h, h}, {h, -h, -h}, {-h, h, -h}, {-h, -h, h}};
        case SolidKind::Octahedron:
            return {{h, 0, 0}, {-h, 0, 0}, {0, h, 0}, {0, -h, 0}, {0, 0, h}, {0, 0, -h}};
        case SolidKind::Cube: {
            std::vector<Point3> result;
            for (double x : {-h, h})
                for (double y : {-h, h})
                    for (double z : {-h, h})
                        result.push_back({x, y, z});
            return result;
        }
        case SolidKind::Sphere:
        case SolidKind::Cylinder:
            return {};
    }
    return {};
}

std::optional<double> parallel_face_separation(SolidSpec const& solid)
{
    switch (solid.kind)
    {
        case SolidKind::Octahedron:
            // Facets x+y+z = +-h lie 2h/sqrt(3) apart
            return 2 * bounding_half_width(solid) / sqrt3;
        case SolidKind::Cube:
        case SolidKind::Cylinder:
            return solid.edge;
        case SolidKind::Tetrahedron:
        case SolidKind::Sphere:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace platocf
