#include "platocf/cf_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "platocf/errors.hpp"
#include "platocf/quadrature.hpp"

namespace platocf
{
namespace
{
constexpr double breakpoint_exclusion = 1e-7;
constexpr double eps = std::numeric_limits<double>::epsilon();

//! Bound on the rounding error of one closed-form evaluation, in ulps of 1.
constexpr double evaluation_ulps = 64;

void check_order(int order)
{
    if (order != 1 && order != 2)
        throw DomainError("derivative order must be 1 or 2");
}

double one_sided(std::function<double(double)> const& f,
                 double r,
                 int order,
                 double h)
{
    // h < 0 mirrors the stencil to the left
    double const f0 = f(r);
    double const f1 = f(r + h);
    double const f2 = f(r + 2 * h);
    double const f3 = f(r + 3 * h);
    if (order == 1)
        return (-11 * f0 + 18 * f1 - 9 * f2 + 2 * f3) / (6 * h);
    return (2 * f0 - 5 * f1 + 4 * f2 - f3) / (h * h);
}

double nearest_interior_breakpoint(PiecewiseCF const& cf, double r)
{
    auto const b = cf.breakpoints();
    double best = std::numeric_limits<double>::infinity();
    double dist = best;
    for (std::size_t i = 1; i + 1 < b.size(); ++i)
    {
        if (std::abs(r - b[i]) < dist)
        {
            dist = std::abs(r - b[i]);
            best = b[i];
        }
    }
    return best;
}

double one_sided_cf(PiecewiseCF const& cf, double r, int order, StencilSide side, double h)
{
    double const dmax = cf.dmax();
    double const reach = side == StencilSide::Left ? r - 3 * h : r + 3 * h;
    if (reach < 0 || reach > dmax || r < 0 || r > dmax)
        throw DomainError("cf_derivative: one-sided stencil leaves [0, dmax]");
    double const probe = side == StencilSide::Left ? r - h / 2 : r + h / 2;
    std::size_t const piece = cf.piece_index(probe);
    auto const b = cf.breakpoints();
    if (reach < b[piece] || reach > b[piece + 1])
        throw DomainError("cf_derivative: one-sided stencil crosses a breakpoint");
    auto f = [&cf, piece](double x) { return cf.eval_piece(piece, x); };
    return one_sided(f, r, order, side == StencilSide::Left ? -h : h);
}

}  // namespace

//---------------------------------------------------------------------------//
double stencil_derivative(std::function<double(double)> const& f,
                          double r,
                          int order,
                          StencilSide side,
                          double h)
{
    check_order(order);
    if (!(h > 0))
        throw DomainError("stencil_derivative: step must be positive");
    switch (side)
    {
        case StencilSide::Left:
            return one_sided(f, r, order, -h);
        case StencilSide::Right:
            return one_sided(f, r, order, h);
        case StencilSide::Central:
            break;
    }
    double const fp1 = f(r + h);
    double const fm1 = f(r - h);
    double const fp2 = f(r + 2 * h);
    double const fm2 = f(r - 2 * h);
    if (order == 1)
        return (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
    return (-fp2 + 16 * fp1 - 30 * f(r) + 16 * fm1 - fm2) / (12 * h * h);
}

double cf_derivative(PiecewiseCF const& cf,
                     double r,
                     int order,
                     StencilSide side,
                     StencilSteps const& steps)
{
    check_order(order);
    double const dmax = cf.dmax();
    double const h_side
        = dmax * (order == 1 ? steps.first : steps.second_one_sided);
    if (side != StencilSide::Central)
        return one_sided_cf(cf, r, order, side, h_side);

    if (!(r > 0 && r < dmax))
        throw DomainError("cf_derivative: r must lie in (0, dmax)");
    double const h = dmax * (order == 1 ? steps.first : steps.second_central);
    double const b = nearest_interior_breakpoint(cf, r);
    double const dist = std::abs(r - b);
    if (dist < breakpoint_exclusion * dmax)
    {
        throw DomainError(
            "cf_derivative: r is on a breakpoint; request a stencil side");
    }
    if (dist < 10 * h)
        return one_sided_cf(cf, r, order, r < b ? StencilSide::Left : StencilSide::Right, h_side);
    if (r < 2 * h)
        return one_sided_cf(cf, r, order, StencilSide::Right, h_side);
    if (r > dmax - 2 * h)
        return one_sided_cf(cf, r, order, StencilSide::Left, h_side);
    return stencil_derivative([&cf](double x) { return cf(x); },
                              r, order, StencilSide::Central, h);
}

CurvatureJump
curvature_jump(PiecewiseCF const& cf, double breakpoint, StencilSteps const& steps)
{
    double const h = cf.dmax() * steps.second_one_sided;
    CurvatureJump result;
    result.left = one_sided_cf(cf, breakpoint, 2, StencilSide::Left, h);
    result.right = one_sided_cf(cf, breakpoint, 2, StencilSide::Right, h);
    double const left2 = one_sided_cf(cf, breakpoint, 2, StencilSide::Left, 2 * h);
    double const right2 = one_sided_cf(cf, breakpoint, 2, StencilSide::Right, 2 * h);
    // |2| + |5| + |4| + |1| = 12 rounding errors of size |gamma| <= 1
    double const rounding = 12 * evaluation_ulps * eps / (h * h);
    result.noise_floor = std::abs(result.left - left2)
                         + std::abs(result.right - right2) + 2 * rounding;
    return result;
}

double initial_slope(PiecewiseCF const& cf)
{
    double const s = cf.breakpoints()[1] / 4;
    double const f0 = cf.eval_piece(0, 0);
    double const f1 = cf.eval_piece(0, s);
    double const f2 = cf.eval_piece(0, 2 * s);
    double const f3 = cf.eval_piece(0, 3 * s);
    return (-11 * f0 + 18 * f1 - 9 * f2 + 2 * f3) / (6 * s);
}

//---------------------------------------------------------------------------//
double moment_integral(PiecewiseCF const& cf, int power, unsigned nodes)
{
    if (power < 0)
        throw DomainError("moment_integral: power must be non-negative");
    auto const& rule = gauss_legendre(nodes);
    auto const b = cf.breakpoints();
    double sum = 0;
    for (std::size_t i = 0; i < cf.num_pieces(); ++i)
    {
        sum += rule.integrate(
            [&](double r) { return std::pow(r, power) * cf.eval_piece(i, r); },
            b[i], b[i + 1]);
    }
    return 4 * std::numbers::pi * sum;
}

//---------------------------------------------------------------------------//
bool ConstraintReport::all_pass() const
{
    return std::all_of(records.begin(), records.end(),
                       [](ConstraintRecord const& r) { return r.pass; });
}

ConstraintRecord const& ConstraintReport::at(std::string const& name) const
{
    auto it = std::find_if(records.begin(), records.end(),
                           [&](ConstraintRecord const& r) { return r.name == name; });
    if (it == records.end())
        throw ContractError("ConstraintReport: no constraint named " + name);
    return *it;
}

ConstraintReport validate_constraints(SolidSpec const& solid,
                                      ConstraintTolerances const& tol)
{
    if (!has_analytic_cf(solid.kind))
        throw ContractError("validate_constraints: needs a closed-form CF");
    return validate_constraints(solid, cf_for(solid), tol);
}

ConstraintReport validate_constraints(SolidSpec const& solid,
                                      PiecewiseCF const& cf,
                                      ConstraintTolerances const& tol)
{
    ConstraintReport report;
    report.kind = solid.kind;
    report.rg2 = solid.rg2;
    report.rg2_stderr = solid.rg2_stderr;
    if (solid.rg2_stderr > 0)
    {
        report.rg2_samples = rg2_cache_samples;
        report.rg2_seed = rg2_cache_seed;
    }

    auto add = [&](std::string name, double expected, double actual, double tolerance) {
        double const err = std::abs(actual - expected);
        report.records.push_back(
            {std::move(name), expected, actual, err, tolerance, err <= tolerance});
    };

    double const dmax = cf.dmax();
    add("gamma_at_0", 1.0, cf(0.0), tol.gamma_at_0);
    add("slope_at_0", -solid.surface / (4 * solid.volume), initial_slope(cf),
        tol.slope_at_0);
    add("gamma_at_dmax", 0.0, cf.eval_piece(cf.num_pieces() - 1, dmax),
        tol.gamma_at_dmax);

    StencilSteps const steps;
    double const h = steps.first * dmax;
    add("slope_at_dmax", 0.0,
        cf_derivative(cf, dmax - 10 * h, 1, StencilSide::Left, steps),
        tol.slope_at_dmax);

    add("volume_moment", solid.volume, moment_integral(cf, 2),
        tol.volume_rel * solid.volume);

    double const gyration = 2 * solid.rg2 * solid.volume;
    double const gyration_tol
        = std::max(tol.gyration_rel * gyration,
                   tol.gyration_sigmas * 2 * solid.rg2_stderr * solid.volume);
    add("gyration_moment", gyration, moment_integral(cf, 4), gyration_tol);
    return report;
}

}  // namespace platocf
