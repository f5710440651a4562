#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "platocf/errors.hpp"
#include "platocf/geometry.hpp"
#include "platocf/random.hpp"

using namespace platocf;

namespace
{
double const sqrt2 = std::numbers::sqrt2;
double const sqrt3 = std::numbers::sqrt3;

SolidSpec unit(SolidKind kind)
{
    return solid_shape(kind, 1.0);
}

}  // namespace

TEST(SolidKindNames, RoundTrip)
{
    for (auto kind : {SolidKind::Tetrahedron, SolidKind::Octahedron, SolidKind::Sphere,
                      SolidKind::Cube, SolidKind::Cylinder})
    {
        auto parsed = parse_solid_kind(to_string(kind));
        ASSERT_TRUE(parsed);
        EXPECT_EQ(*parsed, kind);
    }
    EXPECT_FALSE(parse_solid_kind("dodecahedron"));
    EXPECT_TRUE(has_analytic_cf(SolidKind::Sphere));
    EXPECT_FALSE(has_analytic_cf(SolidKind::Cube));
}

TEST(SolidMetrics, UnitTetrahedron)
{
    auto s = unit(SolidKind::Tetrahedron);
    EXPECT_NEAR(s.surface, sqrt3, 1e-15);
    EXPECT_NEAR(s.volume, 1 / (6 * sqrt2), 1e-16);
    EXPECT_DOUBLE_EQ(s.dmax, 1.0);
}

TEST(SolidMetrics, UnitOctahedron)
{
    auto s = unit(SolidKind::Octahedron);
    EXPECT_NEAR(s.surface, 2 * sqrt3, 1e-15);
    EXPECT_NEAR(s.volume, sqrt2 / 3, 1e-16);
    EXPECT_NEAR(s.dmax, sqrt2, 1e-15);
}

TEST(SolidMetrics, OtherSolids)
{
    auto sphere = unit(SolidKind::Sphere);
    EXPECT_NEAR(sphere.volume, std::numbers::pi / 6, 1e-16);
    EXPECT_NEAR(sphere.surface, std::numbers::pi, 1e-15);
    EXPECT_DOUBLE_EQ(sphere.rg2, 0.15);

    auto cube = unit(SolidKind::Cube);
    EXPECT_DOUBLE_EQ(cube.volume, 1.0);
    EXPECT_DOUBLE_EQ(cube.surface, 6.0);
    EXPECT_NEAR(cube.dmax, sqrt3, 1e-15);

    auto cyl = unit(SolidKind::Cylinder);
    EXPECT_NEAR(cyl.volume, std::numbers::pi / 4, 1e-16);
    EXPECT_NEAR(cyl.surface, 1.5 * std::numbers::pi, 1e-15);
    EXPECT_NEAR(cyl.dmax, sqrt2, 1e-15);
    EXPECT_NEAR(cyl.rg2, 5.0 / 24.0, 1e-16);
}

TEST(SolidMetrics, RejectsBadEdge)
{
    EXPECT_THROW(solid_metrics(SolidKind::Cube, 0.0), DomainError);
    EXPECT_THROW(solid_metrics(SolidKind::Cube, -1.0), DomainError);
    EXPECT_THROW(solid_shape(SolidKind::Sphere, NAN), DomainError);
}

TEST(SolidMetrics, PolyhedronGyrationCarriesError)
{
    auto tet = solid_metrics(SolidKind::Tetrahedron, 1.0);
    EXPECT_GT(tet.rg2_stderr, 0);
    EXPECT_NEAR(tet.rg2, 0.075, 4 * tet.rg2_stderr);

    // The cached estimate scales with the square of the edge
    auto big = solid_metrics(SolidKind::Tetrahedron, 3.0);
    EXPECT_NEAR(big.rg2, 9 * tet.rg2, 1e-14);
    EXPECT_NEAR(big.rg2_stderr, 9 * tet.rg2_stderr, 1e-16);
}

TEST(Rescale, UnitDmax)
{
    auto oct = scale_to_unit_dmax(unit(SolidKind::Octahedron));
    EXPECT_NEAR(oct.edge, 1 / sqrt2, 1e-15);
    EXPECT_NEAR(oct.dmax, 1.0, 1e-15);

    auto tet = scale_to_unit_dmax(unit(SolidKind::Tetrahedron));
    EXPECT_DOUBLE_EQ(tet.edge, 1.0);
    EXPECT_DOUBLE_EQ(tet.volume, unit(SolidKind::Tetrahedron).volume);

    auto cube = scale_to_unit_dmax(unit(SolidKind::Cube));
    EXPECT_NEAR(cube.edge, 1 / sqrt3, 1e-15);

    auto ball = scale_to_unit_dmax(solid_shape(SolidKind::Sphere, 2.0));
    EXPECT_NEAR(ball.edge, 1.0, 1e-15);
    EXPECT_NEAR(ball.volume, std::numbers::pi / 6, 1e-15);
}

TEST(Rescale, PowersOfLambda)
{
    auto s = rescale(unit(SolidKind::Octahedron), 2.0);
    EXPECT_NEAR(s.volume, 8 * sqrt2 / 3, 1e-14);
    EXPECT_NEAR(s.surface, 8 * sqrt3, 1e-14);
    EXPECT_NEAR(s.dmax, 2 * sqrt2, 1e-14);
    EXPECT_THROW(rescale(s, 0.0), DomainError);
}

TEST(Contains, Examples)
{
    auto tet = unit(SolidKind::Tetrahedron);
    EXPECT_TRUE(contains(tet, {0, 0, 0}));
    double const l = 1 / (2 * sqrt2);
    EXPECT_TRUE(contains(tet, {l, l, l}));
    EXPECT_FALSE(contains(tet, {-l, -l, -l}));

    auto oct = unit(SolidKind::Octahedron);
    EXPECT_FALSE(contains(oct, {1 / sqrt2 + 0.01, 0, 0}));
    EXPECT_TRUE(contains(oct, {1 / sqrt2, 0, 0}));

    auto cyl = unit(SolidKind::Cylinder);
    EXPECT_TRUE(contains(cyl, {0.35, 0.35, 0.5}));
    EXPECT_FALSE(contains(cyl, {0.36, 0.36, 0}));
}

TEST(Vertices, MaximalChordIsVertexDistance)
{
    for (auto kind : {SolidKind::Tetrahedron, SolidKind::Octahedron, SolidKind::Cube})
    {
        auto s = unit(kind);
        auto vs = vertices(s);
        double longest = 0;
        for (auto const& a : vs)
        {
            EXPECT_TRUE(contains(s, a));
            for (auto const& b : vs)
                longest = std::max(longest, std::sqrt(norm2(a - b)));
        }
        EXPECT_NEAR(longest, s.dmax, 1e-14) << to_string(kind);
    }
    EXPECT_TRUE(vertices(unit(SolidKind::Sphere)).empty());
}

TEST(Vertices, EdgeLengths)
{
    auto tet = unit(SolidKind::Tetrahedron);
    auto vs = vertices(tet);
    ASSERT_EQ(vs.size(), 4u);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            EXPECT_NEAR(std::sqrt(norm2(vs[i] - vs[j])), 1.0, 1e-15);
}

TEST(ParallelFaces, Separation)
{
    EXPECT_FALSE(parallel_face_separation(unit(SolidKind::Tetrahedron)));
    EXPECT_FALSE(parallel_face_separation(unit(SolidKind::Sphere)));
    auto d = parallel_face_separation(unit(SolidKind::Octahedron));
    ASSERT_TRUE(d);
    // Twice the inradius 1/sqrt(6)
    EXPECT_NEAR(*d, 2 / std::sqrt(6.0), 1e-15);
    EXPECT_DOUBLE_EQ(*parallel_face_separation(unit(SolidKind::Cube)), 1.0);
}

TEST(SamplePoint, AlwaysInside)
{
    for (auto kind : {SolidKind::Tetrahedron, SolidKind::Octahedron, SolidKind::Sphere,
                      SolidKind::Cube, SolidKind::Cylinder})
    {
        auto s = solid_shape(kind, 0.7);
        RandomStream rng(11);
        for (int i = 0; i < 20000; ++i)
            ASSERT_TRUE(contains(s, sample_point(s, rng))) << to_string(kind);
    }
}

TEST(SamplePoint, Deterministic)
{
    auto s = unit(SolidKind::Octahedron);
    RandomStream a(42, 3);
    RandomStream b(42, 3);
    RandomStream c(42, 4);
    bool any_diff = false;
    for (int i = 0; i < 1000; ++i)
    {
        auto pa = sample_point(s, a);
        auto pb = sample_point(s, b);
        auto pc = sample_point(s, c);
        ASSERT_EQ(pa.x, pb.x);
        ASSERT_EQ(pa.y, pb.y);
        ASSERT_EQ(pa.z, pb.z);
        any_diff = any_diff || pa.x != pc.x;
    }
    EXPECT_TRUE(any_diff);
}

TEST(SamplePoint, OctahedronMeanIsCentered)
{
    auto s = unit(SolidKind::Octahedron);
    RandomStream rng(5);
    int const n = 1'000'000;
    Point3 sum{0, 0, 0};
    double sum_sq = 0;
    for (int i = 0; i < n; ++i)
    {
        auto p = sample_point(s, rng);
        sum = sum + p;
        sum_sq += p.x * p.x;
    }
    // Per-coordinate variance equals rg2 / 3 by symmetry
    double const sigma = std::sqrt(sum_sq / n / n);
    EXPECT_NEAR(sum.x / n, 0, 3 * sigma);
    EXPECT_NEAR(sum.y / n, 0, 3 * sigma);
    EXPECT_NEAR(sum.z / n, 0, 3 * sigma);
}

TEST(SamplePoint, TetrahedronHalfSpaceFraction)
{
    auto s = unit(SolidKind::Tetrahedron);
    double const h = bounding_half_width(s);
    double const cut = 0.3 * h;

    // Dense-grid volume fraction of the part with x > cut
    int const m = 240;
    long inside = 0;
    long beyond = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
            {
                Point3 p{-h + (i + 0.5) * 2 * h / m, -h + (j + 0.5) * 2 * h / m,
                         -h + (k + 0.5) * 2 * h / m};
                if (contains(s, p))
                {
                    ++inside;
                    beyond += p.x > cut;
                }
            }
    double const grid_fraction = static_cast<double>(beyond) / inside;

    RandomStream rng(9);
    int const n = 1'000'000;
    int hits = 0;
    int positive = 0;
    for (int i = 0; i < n; ++i)
    {
        auto p = sample_point(s, rng);
        hits += p.x > cut;
        positive += p.x > 0;
    }
    double const f = static_cast<double>(hits) / n;
    double const sigma = std::sqrt(f * (1 - f) / n);
    // Grid discretization error is far below the sampling error here
    EXPECT_NEAR(f, grid_fraction, 3 * sigma + 2e-3);
    double const half = static_cast<double>(positive) / n;
    EXPECT_NEAR(half, 0.5, 3 * std::sqrt(0.25 / n));
}

TEST(UnitDirection, IsotropicMoments)
{
    RandomStream rng(17);
    int const n = 200000;
    double zz = 0;
    double xy = 0;
    for (int i = 0; i < n; ++i)
    {
        auto u = unit_direction(rng);
        ASSERT_NEAR(norm2(u), 1.0, 1e-14);
        zz += u.z * u.z;
        xy += u.x * u.y;
    }
    EXPECT_NEAR(zz / n, 1.0 / 3, 5 * std::sqrt(4.0 / 45 / n));
    EXPECT_NEAR(xy / n, 0.0, 5 * std::sqrt(1.0 / 15 / n));
}
