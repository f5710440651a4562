#include "platocf/cf_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cf_helpers.hpp"
#include "platocf/mc_oracle.hpp"

namespace platocf
{
namespace
{
using namespace detail;
using std::atan;
using std::numbers::pi;

constexpr double half_pi = pi / 2;
constexpr double two_sqrt2 = 2 * sqrt2;   // 2^{3/2}
constexpr double four_sqrt2 = 4 * sqrt2;  // 2^{5/2}
double const sqrt6 = std::sqrt(6.0);
double const sqrt_3_2 = std::sqrt(1.5);
double const sqrt_2_3 = std::sqrt(2.0 / 3.0);

double const alpha_t = std::acos(1.0 / 3.0);
double const alpha_o = std::acos(-1.0 / 3.0);

std::array<double, 5> const tet_breaks{0, sqrt2 / 2, sqrt_2_3, sqrt3 / 2, 1};
std::array<double, 5> const oct_breaks{0, sqrt_2_3, sqrt3 / 2, 1, sqrt2};

//---------------------------------------------------------------------------//
// Tetrahedron, unit edge
//---------------------------------------------------------------------------//
double tet_a(double r)
{
    double const r2 = r * r;
    return 1 - 3 * sqrt_3_2 * r + 3 * (two_sqrt2 + pi - alpha_t) * r2 / pi
           - (6 + 5 * sqrt3 * pi) * r2 * r / (four_sqrt2 * pi);
}

double tet_b(double r)
{
    double const r2 = r * r;
    return 3 / (four_sqrt2 * r) - 2 - 3 * (sqrt3 - 3) * r / sqrt2
           + 3 * (two_sqrt2 - alpha_t - pi) * r2 / pi
           - (6 - 12 * pi + 5 * sqrt3 * pi) * r2 * r / (four_sqrt2 * pi);
}

double tet_c(double r)
{
    double const r2 = r * r;
    return (9 + 8 * sqrt3) / (12 * sqrt2 * r) - 6 + 3 * (3 + sqrt3) * r / sqrt2
           + 3 * (two_sqrt2 - alpha_t - 3 * pi) * r2 / pi
           + (12 * pi - 6 + sqrt3 * pi) * r2 * r / (four_sqrt2 * pi);
}

double tet_d(double r)
{
    double const d = delta34(r);
    if (d == 0)
    {
        // Left end of the piece: helpers have poles, use the neighbour
        return tet_c(r);
    }
    // Near r = 1 the helpers T1, T2, T5, T9, T11 diverge; the one-sided
    // limit from r -> 1- is taken via atan(T) = sign pi/2 - atan(1/T)
    bool const at_end = std::abs(r - 1) < singular_guard;
    double const at1 = at_end ? -half_pi - atan(inv_t1(r, d)) : atan(t1(r, d));
    double const at2 = at_end ? half_pi - atan(inv_t2(r, d)) : atan(t2(r, d));
    double const at5 = at_end ? half_pi - atan(inv_t5(r, d)) : atan(t5(r, d));
    double const at9 = at_end ? half_pi - atan(inv_t9(r, d)) : atan(t9(r, d));
    double const at11 = at_end ? -half_pi - atan(inv_t11(r, d)) : atan(t11(r, d));
    double const at4 = atan(t4(r, d));
    double const at4h = atan(t4(r, d) / 2);
    double const at6 = atan(t6(r, d));

    double const r2 = r * r;
    double const r3 = r2 * r;
    double result = (9 + 8 * sqrt3) / (24 * sqrt2 * r) + 3
                    + 9 * (4 + sqrt3) * r / four_sqrt2
                    + 3 * r2 * (two_sqrt2 - pi - alpha_t) / pi
                    - (3 - 12 * pi + sqrt3 * pi) * r3 / (two_sqrt2 * pi);
    result -= 21 * r * d / (two_sqrt2 * pi);
    result += 9 / (12 * sqrt2 * pi * r) * (at1 - 8 * sqrt3 / 9 * at2);
    result += 3 / pi * (atan(t3(r, d)) - 3 * at4 - 4 * at4h + at5 / 2);
    result -= 3 * r / (sqrt2 * pi)
              * (10 * atan(d) + 5 * sqrt3 * atan(sqrt3 * d) + at5
                 - 6 * sqrt3 * at6 + sqrt3 / 2 * atan(t7(r, d)));
    result += 6 * r2 / pi * (atan(t8(r, d)) + at9);
    result -= 3 * r3 / (2 * pi) * sqrt_3_2
              * (at2 - at6 + 2 * atan(t10(r, d)) - 8 / sqrt3 * at11);
    return result;
}

//---------------------------------------------------------------------------//
// Octahedron, unit edge
//---------------------------------------------------------------------------//
double oct_a(double r)
{
    double const r2 = r * r;
    return 1 - 1.5 * sqrt_3_2 * r
           + 3 * (alpha_o - pi + 2 * sqrt2) * r2 / (2 * pi)
           - (3 - 3 * pi + sqrt3 * pi) * r2 * r / (4 * sqrt2 * pi);
}

double oct_b(double r)
{
    double const r2 = r * r;
    return 2 / r * sqrt_2_3 - 3 - r / 2 * sqrt_3_2
           + 3 * r2 * (alpha_o + pi + 2 * sqrt2) / (2 * pi)
           - (3 - 3 * pi + 7 * sqrt3 * pi) * r2 * r / (4 * sqrt2 * pi);
}

double oct_c(double r)
{
    double const d = delta34(r);
    if (d == 0)
        return oct_b(r);

    double const r2 = r * r;
    double const r3 = r2 * r;
    double const s6 = t6(r, d);
    double result = 2 / r * sqrt_2_3 - 3 - r / 2 * sqrt_3_2
                    + 3 * r2 * (alpha_o + 2 * sqrt2) / (2 * pi)
                    - (36 * (1 - pi) + 5 * sqrt3 * pi) * r3 / (48 * sqrt2 * pi);
    result -= (17 * r2 + 3) * d / (2 * sqrt2 * pi * r);
    result += r / pi * sqrt_3_2 * (9 * atan(s6) + atan(3 * s6));
    result += 3 * r2 / pi * atan(t4(r, d) / 2);
    result -= r3 / (8 * sqrt6 * pi)
              * (18 * atan(s6) + 90 * atan(1 / (3 * s6)) + 24 * atan(t7(r, d))
                 - 8 * atan(t12(r, d)) - atan(t13(r, d))
                 - 6 * atan(t14(r, d)));
    return result;
}

double oct_d(double r)
{
    double const e = delta11(r);
    if (e == 0)
        return oct_c(r);

    // T17 and T18 diverge to -inf as r -> sqrt(2)-
    bool const at_end = std::abs(r - sqrt2) < singular_guard;
    double const at17 = at_end ? -half_pi - atan(inv_t17(r, e)) : atan(t17(r, e));
    double const at18 = at_end ? -half_pi - atan(inv_t18(r, e)) : atan(t18(r, e));
    double const at15 = atan(t15(r, e));

    double const r2 = r * r;
    double const r3 = r2 * r;
    double result = (4 * sqrt3 * pi - 3) / (3 * sqrt2 * pi * r) + 3
                    + (4 * sqrt3 * pi - 9) * r / (3 * sqrt2 * pi) + 3 * r2 / 4
                    - (6 - 3 * pi + 4 * sqrt3 * pi) * r3 / (8 * sqrt2 * pi);
    result += sqrt2 / (pi * r) * (1 + 2 * r2) * e;
    result -= 2 * sqrt6 / (pi * r) * at15;
    result -= 12 / pi * atan(t16(r, e));
    result -= 2 * sqrt6 * r / pi * at15;
    result += 3 * r2 / (2 * pi) * at17;
    result -= r3 / (2 * sqrt2 * pi) * (2 * sqrt3 * at18 + 3 * atan(t19(r, e)));
    return result;
}

using PieceFn = double (*)(double);
constexpr std::array<PieceFn, 4> tet_pieces{tet_a, tet_b, tet_c, tet_d};
constexpr std::array<PieceFn, 4> oct_pieces{oct_a, oct_b, oct_c, oct_d};

double sphere_piece(double r) { return 1 - 1.5 * r + 0.5 * r * r * r; }

void check_abscissa(double r, char const* who)
{
    if (!(r >= 0))
        throw DomainError(std::string(who) + ": r must be non-negative");
}

template<std::size_t N>
double eval_piecewise(std::array<double, N + 1> const& breaks,
                      std::array<PieceFn, N> const& pieces,
                      double r)
{
    if (r > breaks.back())
        return 0;
    auto it = std::upper_bound(breaks.begin(), breaks.end(), r);
    auto idx = static_cast<std::size_t>(it - breaks.begin());
    idx = std::clamp<std::size_t>(idx, 1, N) - 1;
    return pieces[idx](r);
}

}  // namespace

//---------------------------------------------------------------------------//
CFConstants const& cf_constants()
{
    static CFConstants const constants{alpha_t,
                                       alpha_o,
                                       sqrt3,
                                       1 / (6 * sqrt2),
                                       2 * sqrt3,
                                       sqrt2 / 3};
    return constants;
}

std::span<double const> tetrahedron_breakpoints() { return tet_breaks; }
std::span<double const> octahedron_breakpoints() { return oct_breaks; }

double tetrahedron_piece(std::size_t piece, double r)
{
    return tet_pieces.at(piece)(r);
}

double octahedron_piece(std::size_t piece, double r)
{
    return oct_pieces.at(piece)(r);
}

double cf_tetrahedron(double r)
{
    check_abscissa(r, "cf_tetrahedron");
    return eval_piecewise<4>(tet_breaks, tet_pieces, r);
}

double cf_octahedron(double r)
{
    check_abscissa(r, "cf_octahedron");
    return eval_piecewise<4>(oct_breaks, oct_pieces, r);
}

double cf_sphere(double r)
{
    check_abscissa(r, "cf_sphere");
    return r <= 1 ? sphere_piece(r) : 0.0;
}

//---------------------------------------------------------------------------//
PiecewiseCF::PiecewiseCF(SolidKind kind,
                         std::vector<double> breakpoints,
                         std::vector<Evaluator> pieces,
                         bool analytic)
    : kind_(kind)
    , breaks_(std::move(breakpoints))
    , pieces_(std::move(pieces))
    , analytic_(analytic)
{
    if (breaks_.size() != pieces_.size() + 1 || pieces_.empty())
        throw ContractError("PiecewiseCF: need one more breakpoint than pieces");
    if (breaks_.front() != 0)
        throw ContractError("PiecewiseCF: first breakpoint must be zero");
    if (!std::is_sorted(breaks_.begin(), breaks_.end())
        || std::adjacent_find(breaks_.begin(), breaks_.end()) != breaks_.end())
    {
        throw ContractError("PiecewiseCF: breakpoints must increase strictly");
    }
}

std::size_t PiecewiseCF::piece_index(double r) const
{
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), r);
    auto idx = static_cast<std::size_t>(it - breaks_.begin());
    return std::clamp<std::size_t>(idx, 1, pieces_.size()) - 1;
}

double PiecewiseCF::operator()(double r) const
{
    check_abscissa(r, "PiecewiseCF");
    if (r > dmax())
        return 0;
    return pieces_[piece_index(r)](r);
}

PiecewiseCF PiecewiseCF::scaled(double factor) const
{
    if (!(factor > 0))
        throw DomainError("PiecewiseCF::scaled: factor must be positive");
    std::vector<double> breaks(breaks_.size());
    std::transform(breaks_.begin(), breaks_.end(), breaks.begin(),
                   [factor](double b) { return b * factor; });
    std::vector<Evaluator> pieces;
    pieces.reserve(pieces_.size());
    for (auto const& piece : pieces_)
    {
        pieces.emplace_back(
            [piece, factor](double r) { return piece(r / factor); });
    }
    return {kind_, std::move(breaks), std::move(pieces), analytic_};
}

//---------------------------------------------------------------------------//
namespace
{
template<std::size_t N>
PiecewiseCF analytic_cf(SolidKind kind,
                        std::array<double, N + 1> const& breaks,
                        std::array<PieceFn, N> const& fns,
                        double size)
{
    std::vector<double> b(breaks.begin(), breaks.end());
    std::vector<PiecewiseCF::Evaluator> pieces(fns.begin(), fns.end());
    PiecewiseCF unit(kind, std::move(b), std::move(pieces));
    return size == 1 ? unit : unit.scaled(size);
}

PiecewiseCF tabulated_cf(SolidSpec const& solid, TabulationOptions const& mc)
{
    std::size_t const n = std::max<std::size_t>(mc.grid_points, 2);
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = solid.dmax * static_cast<double>(i) / static_cast<double>(n - 1);
    auto table = tabulate_cf(solid, grid, mc.samples_per_point, mc.seed);

    std::vector<double> values(n);
    std::transform(table.begin(), table.end(), values.begin(),
                   [](CurvePoint const& p) { return p.value; });
    double const step = solid.dmax / static_cast<double>(n - 1);
    auto interp = [values = std::move(values), step](double r) {
        double const t = r / step;
        auto i = static_cast<std::size_t>(std::floor(t));
        if (i + 1 >= values.size())
            return values.back();
        double const frac = t - static_cast<double>(i);
        return values[i] + frac * (values[i + 1] - values[i]);
    };
    return PiecewiseCF(solid.kind, {0.0, solid.dmax}, {std::move(interp)}, false);
}
}  // namespace

PiecewiseCF cf_for(SolidSpec const& solid, TabulationOptions const& mc)
{
    switch (solid.kind)
    {
        case SolidKind::Tetrahedron:
            return analytic_cf<4>(solid.kind, tet_breaks, tet_pieces, solid.edge);
        case SolidKind::Octahedron:
            return analytic_cf<4>(solid.kind, oct_breaks, oct_pieces, solid.edge);
        case SolidKind::Sphere: {
            std::array<double, 2> const breaks{0, 1};
            std::array<PieceFn, 1> const fns{sphere_piece};
            return analytic_cf<1>(solid.kind, breaks, fns, solid.edge);
        }
        case SolidKind::Cube:
        case SolidKind::Cylinder:
            return tabulated_cf(solid, mc);
    }
    throw ContractError("cf_for: unknown solid kind");
}

}  // namespace platocf
