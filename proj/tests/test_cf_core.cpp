#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "platocf/cf_core.hpp"
#include "platocf/errors.hpp"
#include "platocf/geometry.hpp"
#include "support/oracles.hpp"

using namespace platocf;

namespace
{
double const sqrt2 = std::numbers::sqrt2;
double const sqrt3 = std::numbers::sqrt3;
}  // namespace

TEST(Constants, DihedralAngles)
{
    auto const& c = cf_constants();
    EXPECT_NEAR(c.alpha_t, 1.2309594173, 1e-10);
    EXPECT_NEAR(c.alpha_o, 1.9106332362, 1e-10);
    EXPECT_LE(std::abs(c.alpha_t + c.alpha_o - std::numbers::pi), 1e-15);
    EXPECT_DOUBLE_EQ(c.volume_t, solid_shape(SolidKind::Tetrahedron, 1).volume);
    EXPECT_DOUBLE_EQ(c.surface_o, solid_shape(SolidKind::Octahedron, 1).surface);
}

TEST(Helpers, Examples)
{
    EXPECT_DOUBLE_EQ(eval_helper(HelperId::Delta34, 1.0), 1.0);
    EXPECT_NEAR(eval_helper(HelperId::Delta11, sqrt2), 1.0, 1e-15);
    EXPECT_NEAR(eval_helper(HelperId::T4, 1.0), sqrt2, 1e-15);
    EXPECT_NEAR(eval_helper(HelperId::T19, sqrt2), 1.0, 1e-14);
    EXPECT_EQ(to_string(HelperId::T7), "T7");
    EXPECT_EQ(to_string(HelperId::Delta11), "Delta11");
}

TEST(Helpers, DomainErrorsCarryId)
{
    try
    {
        eval_helper(HelperId::Delta34, 0.5);
        FAIL() << "expected a domain error";
    }
    catch (HelperDomainError const& e)
    {
        EXPECT_EQ(e.id(), HelperId::Delta34);
    }
    EXPECT_THROW(eval_helper(HelperId::Delta11, 0.9), HelperDomainError);
    EXPECT_THROW(eval_helper(HelperId::T15, 0.95), HelperDomainError);
    // Poles of the arctan arguments
    EXPECT_THROW(eval_helper(HelperId::T1, 1.0), HelperDomainError);
    EXPECT_THROW(eval_helper(HelperId::T1, 1.0), DomainError);
}

TEST(Helpers, FiniteInsideDomain)
{
    for (int id = 1; id <= 14; ++id)
        for (double r : {0.87, 0.9, 0.95, 0.99})
            EXPECT_TRUE(std::isfinite(eval_helper(static_cast<HelperId>(id), r)))
                << id << " " << r;
    for (int id = 15; id <= 19; ++id)
        for (double r : {1.05, 1.2, 1.4})
            EXPECT_TRUE(std::isfinite(eval_helper(static_cast<HelperId>(id), r)))
                << id << " " << r;
}

TEST(Tetrahedron, Examples)
{
    EXPECT_EQ(cf_tetrahedron(0.0), 1.0);
    EXPECT_NEAR(cf_tetrahedron(1.0), 0.0, 1e-12);
    EXPECT_EQ(cf_tetrahedron(1.5), 0.0);
    EXPECT_THROW(cf_tetrahedron(-0.1), DomainError);
    // The quoted 0.254555 is a rounded figure; the exact value is frozen below
    EXPECT_NEAR(cf_tetrahedron(0.3), 0.254555, 5e-5);
}

TEST(Tetrahedron, FrozenHighPrecisionValues)
{
    for (auto const& v : test::frozen_tetrahedron)
        EXPECT_NEAR(cf_tetrahedron(v.r), v.gamma, 1e-13) << "r=" << v.r;
}

TEST(Octahedron, Examples)
{
    EXPECT_EQ(cf_octahedron(0.0), 1.0);
    EXPECT_NEAR(cf_octahedron(0.2), 0.663529, 1e-6);
    EXPECT_NEAR(cf_octahedron(sqrt2), 0.0, 1e-12);
    EXPECT_EQ(cf_octahedron(2.0), 0.0);
    EXPECT_THROW(cf_octahedron(-1e-9), DomainError);
}

TEST(Octahedron, FrozenHighPrecisionValues)
{
    for (auto const& v : test::frozen_octahedron)
        EXPECT_NEAR(cf_octahedron(v.r), v.gamma, 1e-13) << "r=" << v.r;
}

TEST(Sphere, Cubic)
{
    EXPECT_EQ(cf_sphere(0.0), 1.0);
    EXPECT_NEAR(cf_sphere(1.0), 0.0, 1e-16);
    EXPECT_DOUBLE_EQ(cf_sphere(0.5), 0.3125);
    EXPECT_EQ(cf_sphere(1.2), 0.0);
    EXPECT_THROW(cf_sphere(-1.0), DomainError);
}

TEST(Breakpoints, Values)
{
    auto t = tetrahedron_breakpoints();
    ASSERT_EQ(t.size(), 5u);
    EXPECT_DOUBLE_EQ(t[1], 1 / sqrt2);
    EXPECT_DOUBLE_EQ(t[2], std::sqrt(2.0 / 3.0));
    EXPECT_DOUBLE_EQ(t[3], sqrt3 / 2);
    EXPECT_DOUBLE_EQ(t[4], 1.0);

    auto o = octahedron_breakpoints();
    ASSERT_EQ(o.size(), 5u);
    EXPECT_DOUBLE_EQ(o[1], std::sqrt(2.0 / 3.0));
    EXPECT_DOUBLE_EQ(o[3], 1.0);
    EXPECT_DOUBLE_EQ(o[4], sqrt2);
}

TEST(Breakpoints, PiecesAgreeAtInteriorBreakpoints)
{
    auto t = tetrahedron_breakpoints();
    auto o = octahedron_breakpoints();
    for (std::size_t i = 1; i + 1 < t.size(); ++i)
    {
        EXPECT_NEAR(tetrahedron_piece(i - 1, t[i]), tetrahedron_piece(i, t[i]), 1e-12);
        EXPECT_NEAR(octahedron_piece(i - 1, o[i]), octahedron_piece(i, o[i]), 1e-12);
    }
}

TEST(Breakpoints, GuardBandNearSingularities)
{
    // Inside the guard band the one-sided limits must join smoothly with
    // the direct formula just outside it
    for (double eps : {1e-6, 1e-8, 1e-10, 0.0})
    {
        EXPECT_NEAR(cf_tetrahedron(1 - eps), 0.0, 1e-12) << eps;
        EXPECT_NEAR(cf_octahedron(sqrt2 - eps), 0.0, 1e-12) << eps;
    }
    EXPECT_NEAR(cf_tetrahedron(sqrt3 / 2 + 1e-12), cf_tetrahedron(sqrt3 / 2 - 1e-12), 1e-11);
    EXPECT_NEAR(cf_octahedron(1 + 1e-12), cf_octahedron(1 - 1e-12), 1e-11);
}

TEST(Shape, MonotoneDecreasing)
{
    for (auto f : {&cf_tetrahedron, &cf_octahedron, &cf_sphere})
    {
        double prev = f(0.0);
        for (int i = 1; i <= 2000; ++i)
        {
            double const r = 1.5 * i / 2000;
            double const g = f(r);
            EXPECT_LE(g, prev + 1e-14) << r;
            EXPECT_GE(g, -1e-12) << r;
            prev = g;
        }
    }
}

TEST(PiecewiseCF, IndexingAndDispatch)
{
    auto cf = cf_for(solid_shape(SolidKind::Tetrahedron, 1.0));
    EXPECT_TRUE(cf.analytic());
    EXPECT_EQ(cf.num_pieces(), 4u);
    EXPECT_EQ(cf.piece_index(0.0), 0u);
    EXPECT_EQ(cf.piece_index(tetrahedron_breakpoints()[1]), 1u);
    EXPECT_EQ(cf.piece_index(0.7), 0u);
    EXPECT_EQ(cf.piece_index(0.9), 3u);
    EXPECT_EQ(cf.piece_index(1.0), 3u);
    EXPECT_EQ(cf(0.3), cf_tetrahedron(0.3));
    EXPECT_EQ(cf(1.2), 0.0);
    EXPECT_EQ(cf.eval_piece(2, 0.85), tetrahedron_piece(2, 0.85));
}

TEST(PiecewiseCF, ScalingIdentity)
{
    auto cf = cf_for(solid_shape(SolidKind::Tetrahedron, 2.0));
    EXPECT_DOUBLE_EQ(cf.dmax(), 2.0);
    EXPECT_NEAR(cf(0.6), cf_tetrahedron(0.3), 1e-15);

    auto oct = cf_for(scale_to_unit_dmax(solid_shape(SolidKind::Octahedron, 1.0)));
    EXPECT_NEAR(oct.dmax(), 1.0, 1e-15);
    EXPECT_NEAR(oct(1.0), 0.0, 1e-9);
    EXPECT_NEAR(oct(0.5), cf_octahedron(0.5 * sqrt2), 1e-15);

    auto half = oct.scaled(0.5);
    EXPECT_NEAR(half(0.25), oct(0.5), 1e-15);
}

TEST(PiecewiseCF, TabulatedCube)
{
    auto spec = solid_shape(SolidKind::Cube, 1.0);
    TabulationOptions opts{51, 20000, 3};
    auto cf = cf_for(spec, opts);
    EXPECT_FALSE(cf.analytic());
    EXPECT_EQ(cf(0.0), 1.0);
    EXPECT_NEAR(cf.dmax(), sqrt3, 1e-15);
    EXPECT_EQ(cf(2.0), 0.0);
    // Exact cube CF slope at the origin: 1 - S r / (4 V)
    double const r = 0.01;
    EXPECT_NEAR(cf(r), 1 - 1.5 * r, 0.02);

    auto again = cf_for(spec, opts);
    for (double x : {0.1, 0.5, 1.0, 1.5})
        EXPECT_EQ(cf(x), again(x));
}
