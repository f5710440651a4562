#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "platocf/cf_calculus.hpp"
#include "platocf/cf_core.hpp"
#include "platocf/errors.hpp"
#include "platocf/geometry.hpp"

using namespace platocf;

namespace
{
PiecewiseCF unit_cf(SolidKind kind)
{
    return cf_for(solid_shape(kind, 1.0));
}

double const slope_t = -3 * std::sqrt(1.5);
double const slope_o = -std::pow(1.5, 1.5);
}  // namespace

TEST(Stencil, PolynomialsAreExact)
{
    auto cubic = [](double x) { return 2 - x + 3 * x * x - 0.5 * x * x * x; };
    for (auto side : {StencilSide::Central, StencilSide::Left, StencilSide::Right})
    {
        EXPECT_NEAR(stencil_derivative(cubic, 0.7, 1, side, 1e-3),
                    -1 + 6 * 0.7 - 1.5 * 0.49, 1e-9);
        EXPECT_NEAR(stencil_derivative(cubic, 0.7, 2, side, 1e-3), 6 - 3 * 0.7, 1e-5);
    }
}

TEST(Derivative, InitialSlopeNearOrigin)
{
    auto tet = unit_cf(SolidKind::Tetrahedron);
    EXPECT_NEAR(cf_derivative(tet, 1e-4, 1), slope_t, 1e-3);
    EXPECT_NEAR(cf_derivative(tet, 0.0, 1, StencilSide::Right), slope_t, 1e-6);
    EXPECT_NEAR(initial_slope(tet), slope_t, 1e-12);

    auto oct = unit_cf(SolidKind::Octahedron);
    EXPECT_NEAR(initial_slope(oct), slope_o, 1e-12);
    // Slope equals -S / (4 V)
    auto s = solid_shape(SolidKind::Octahedron, 1.0);
    EXPECT_NEAR(initial_slope(oct), -s.surface / (4 * s.volume), 1e-12);
}

TEST(Derivative, SphereSecondDerivative)
{
    auto ball = unit_cf(SolidKind::Sphere);
    EXPECT_NEAR(cf_derivative(ball, 0.5, 2), 1.5, 1e-6);
    EXPECT_NEAR(cf_derivative(ball, 0.5, 1), -1.5 + 1.5 * 0.25, 1e-9);
}

TEST(Derivative, DomainChecks)
{
    auto tet = unit_cf(SolidKind::Tetrahedron);
    EXPECT_THROW(cf_derivative(tet, 0.0, 1), DomainError);
    EXPECT_THROW(cf_derivative(tet, 1.0, 1), DomainError);
    EXPECT_THROW(cf_derivative(tet, -0.1, 1, StencilSide::Right), DomainError);
    EXPECT_THROW(cf_derivative(tet, 0.5, 3), DomainError);
    // Central request sitting on a breakpoint
    EXPECT_THROW(cf_derivative(tet, 1 / std::numbers::sqrt2, 1), DomainError);
    EXPECT_NO_THROW(cf_derivative(tet, 1 / std::numbers::sqrt2, 1, StencilSide::Left));
    EXPECT_NO_THROW(cf_derivative(tet, 1.0, 1, StencilSide::Left));
}

TEST(Derivative, FirstDerivativeContinuous)
{
    for (auto kind : {SolidKind::Tetrahedron, SolidKind::Octahedron})
    {
        auto cf = unit_cf(kind);
        auto b = cf.breakpoints();
        for (std::size_t i = 1; i + 1 < b.size(); ++i)
        {
            double const left = cf_derivative(cf, b[i], 1, StencilSide::Left);
            double const right = cf_derivative(cf, b[i], 1, StencilSide::Right);
            EXPECT_NEAR(left, right, 1e-6) << to_string(kind) << " b=" << b[i];
        }
    }
}

TEST(Derivative, CentralFallsBackNearBreakpoints)
{
    auto oct = unit_cf(SolidKind::Octahedron);
    double const b = std::sqrt(2.0 / 3.0);
    // Just left of the breakpoint the value must match the left branch
    double const near = cf_derivative(oct, b - 1e-6, 2);
    double const left = cf_derivative(oct, b, 2, StencilSide::Left);
    EXPECT_NEAR(near, left, 1e-2);
}

TEST(CurvatureJump, OctahedronFacePair)
{
    auto oct = unit_cf(SolidKind::Octahedron);
    auto jump = curvature_jump(oct, std::sqrt(2.0 / 3.0));
    EXPECT_NEAR(jump.jump(), 3.0, 1e-4);
    EXPECT_GT(std::abs(jump.jump()), 10 * jump.noise_floor);

    // After rescaling to unit dmax the jump sits at 1/sqrt(3) and doubles
    auto scaled = cf_for(scale_to_unit_dmax(solid_shape(SolidKind::Octahedron, 1.0)));
    auto j2 = curvature_jump(scaled, 1 / std::numbers::sqrt3);
    EXPECT_NEAR(j2.jump(), 6.0, 1e-3);
}

TEST(CurvatureJump, TetrahedronHasNone)
{
    auto tet = unit_cf(SolidKind::Tetrahedron);
    auto b = tet.breakpoints();
    for (std::size_t i = 1; i + 1 < b.size(); ++i)
    {
        auto j = curvature_jump(tet, b[i]);
        EXPECT_LT(std::abs(j.jump()), j.noise_floor) << "b=" << b[i];
    }
}

TEST(Moments, Volumes)
{
    EXPECT_NEAR(moment_integral(unit_cf(SolidKind::Tetrahedron), 2),
                1 / (6 * std::numbers::sqrt2), 1e-8);
    EXPECT_NEAR(moment_integral(unit_cf(SolidKind::Octahedron), 2),
                std::numbers::sqrt2 / 3, 1e-8);
    EXPECT_NEAR(moment_integral(unit_cf(SolidKind::Sphere), 2),
                std::numbers::pi / 6, 1e-10);
}

TEST(Moments, GyrationOfSphere)
{
    // 4 pi int r^4 gamma = 2 rg2 V with rg2 = 3/20 for unit diameter
    EXPECT_NEAR(moment_integral(unit_cf(SolidKind::Sphere), 4),
                2 * 0.15 * std::numbers::pi / 6, 1e-12);
}

TEST(Constraints, DefaultsPass)
{
    for (auto kind : {SolidKind::Tetrahedron, SolidKind::Octahedron})
    {
        auto report = validate_constraints(solid_metrics(kind, 1.0));
        ASSERT_EQ(report.records.size(), 6u);
        for (auto const& r : report.records)
        {
            EXPECT_TRUE(r.pass) << to_string(kind) << " " << r.name << " err=" << r.abs_error
                                << " tol=" << r.tolerance;
            EXPECT_EQ(r.pass, r.abs_error <= r.tolerance);
        }
        EXPECT_TRUE(report.all_pass());
        EXPECT_EQ(report.rg2_samples, rg2_cache_samples);
        EXPECT_EQ(report.rg2_seed, rg2_cache_seed);
    }
}

TEST(Constraints, ScaledSolidPasses)
{
    auto spec = scale_to_unit_dmax(solid_metrics(SolidKind::Octahedron, 1.0));
    EXPECT_TRUE(validate_constraints(spec).all_pass());
}

TEST(Constraints, PerturbedPieceFailsVolume)
{
    auto spec = solid_metrics(SolidKind::Tetrahedron, 1.0);
    auto exact = cf_for(spec);
    auto b = exact.breakpoints();
    std::vector<PiecewiseCF::Evaluator> pieces;
    for (std::size_t i = 0; i < exact.num_pieces(); ++i)
    {
        double const bump = i == 1 ? 1e-3 : 0.0;
        pieces.push_back([exact, i, bump](double r) { return exact.eval_piece(i, r) + bump; });
    }
    PiecewiseCF perturbed(spec.kind, {b.begin(), b.end()}, pieces);
    auto report = validate_constraints(spec, perturbed);
    EXPECT_FALSE(report.at("volume_moment").pass);
    EXPECT_TRUE(report.at("gamma_at_0").pass);
    EXPECT_FALSE(report.all_pass());
}

TEST(Constraints, UnreachableToleranceFails)
{
    ConstraintTolerances tol;
    tol.volume_rel = 1e-15;
    auto report = validate_constraints(solid_metrics(SolidKind::Tetrahedron, 1.0), tol);
    EXPECT_FALSE(report.at("volume_moment").pass);
    EXPECT_THROW(report.at("nonexistent"), ContractError);
}
