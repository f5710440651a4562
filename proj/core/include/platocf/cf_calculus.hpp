#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cf_core.hpp"
#include "geometry.hpp"

namespace platocf
{
//---------------------------------------------------------------------------//
// DERIVATIVES
//---------------------------------------------------------------------------//
enum class StencilSide
{
    Central,  //!< five-point central; switches to one-sided near breakpoints
    Left,     //!< four-point stencil on [r - 3h, r] using the left piece
    Right,    //!< four-point stencil on [r, r + 3h] using the right piece
};

//! Step sizes relative to dmax.
struct StencilSteps
{
    double first{1e-5};
    double second_central{1e-3};
    double second_one_sided{1e-4};
};

//! Finite-difference derivative of an arbitrary function with step h.
double stencil_derivative(std::function<double(double)> const& f,
                          double r,
                          int order,
                          StencilSide side,
                          double h);

/*!
 * Numerical first or second derivative of a CF.
 *
 * Central requests need r in (0, dmax) and at least 1e-7 dmax away from
 * interior breakpoints; within ten steps of a breakpoint they fall back to
 * the one-sided stencil on r's own side. One-sided requests accept the
 * closed interval as long as the stencil stays inside [0, dmax], and at a
 * breakpoint evaluate the piece on the requested side.
 */
double cf_derivative(PiecewiseCF const& cf,
                     double r,
                     int order,
                     StencilSide side = StencilSide::Central,
                     StencilSteps const& steps = {});

//! One-sided second derivatives at a breakpoint with a noise estimate.
struct CurvatureJump
{
    double left{0};
    double right{0};
    //! Richardson step-halving differences plus a rounding bound, both sides.
    double noise_floor{0};

    double jump() const { return right - left; }
};

CurvatureJump curvature_jump(PiecewiseCF const& cf,
                             double breakpoint,
                             StencilSteps const& steps = {});

/*!
 * Exact slope at r = 0 of a CF whose first piece is a cubic polynomial:
 * the derivative at 0 of the cubic interpolating the piece at four points
 * spread over its interval.
 */
double initial_slope(PiecewiseCF const& cf);

//---------------------------------------------------------------------------//
// MOMENTS
//---------------------------------------------------------------------------//
//! 4 pi int_0^dmax r^power gamma(r) dr, Gauss-Legendre per piece.
double moment_integral(PiecewiseCF const& cf, int power, unsigned nodes = 64);

//---------------------------------------------------------------------------//
// CONSTRAINTS
//---------------------------------------------------------------------------//
struct ConstraintRecord
{
    std::string name;
    double expected{0};
    double actual{0};
    double abs_error{0};
    double tolerance{0};
    bool pass{false};
};

struct ConstraintReport
{
    SolidKind kind{SolidKind::Tetrahedron};
    std::vector<ConstraintRecord> records;
    std::uint64_t rg2_samples{0};
    std::uint64_t rg2_seed{0};
    double rg2{0};
    double rg2_stderr{0};

    bool all_pass() const;
    ConstraintRecord const& at(std::string const& name) const;
};

/*!
 * Tolerances of the six identities. Volume and gyration tolerances are
 * relative to the expected value; the gyration tolerance is widened to
 * three propagated standard errors of the Monte Carlo rg2.
 */
struct ConstraintTolerances
{
    double gamma_at_0{0};
    double slope_at_0{1e-12};
    double gamma_at_dmax{1e-9};
    double slope_at_dmax{1e-5};
    double volume_rel{1e-8};
    double gyration_rel{1e-4};
    double gyration_sigmas{3};
};

ConstraintReport validate_constraints(SolidSpec const& solid,
                                      ConstraintTolerances const& tol = {});

//! As above against an explicit CF (e.g. a perturbed one).
ConstraintReport validate_constraints(SolidSpec const& solid,
                                      PiecewiseCF const& cf,
                                      ConstraintTolerances const& tol = {});

}  // namespace platocf
