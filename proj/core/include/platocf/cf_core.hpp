#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace platocf
{
//---------------------------------------------------------------------------//
//! Dihedral-angle constants and unit-edge metrics used by the closed forms.
struct CFConstants
{
    double alpha_t;  //!< arccos(1/3)
    double alpha_o;  //!< arccos(-1/3)
    double surface_t;
    double volume_t;
    double surface_o;
    double volume_o;
};

CFConstants const& cf_constants();

//---------------------------------------------------------------------------//
/*!
 * Auxiliary functions of the closed forms.
 *
 * T1..T19 are the rational and irrational helpers fed to arctan; Delta34 is
 * sqrt(4 r^2 - 3) and Delta11 is sqrt(r^2 - 1). T1..T14 are real for
 * r >= sqrt(3)/2, T15..T19 for r >= 1.
 */
enum class HelperId : int
{
    T1 = 1, T2, T3, T4, T5, T6, T7, T8, T9, T10,
    T11, T12, T13, T14, T15, T16, T17, T18, T19,
    Delta34,
    Delta11,
};

std::string to_string(HelperId id);

//! Raised when a helper is evaluated outside its real domain or at a pole.
class HelperDomainError : public DomainError
{
  public:
    HelperDomainError(HelperId id, double r);
    HelperId id() const { return id_; }

  private:
    HelperId id_;
};

// Evaluate one helper; throws HelperDomainError off-domain
double eval_helper(HelperId id, double r);

//---------------------------------------------------------------------------//
// Exact correlation functions at unit size (edge 1 or diameter 1)
//---------------------------------------------------------------------------//
double cf_tetrahedron(double r);
double cf_octahedron(double r);
double cf_sphere(double r);

//! Width of the band around r = dmax where singular arctan terms take their
//! one-sided limits.
inline constexpr double singular_guard = 1e-9;

//! Interior breakpoints of the unit-edge closed forms.
std::span<double const> tetrahedron_breakpoints();
std::span<double const> octahedron_breakpoints();

// Evaluate one branch (0-based) of the unit-edge closed form at r
double tetrahedron_piece(std::size_t piece, double r);
double octahedron_piece(std::size_t piece, double r);

//---------------------------------------------------------------------------//
/*!
 * Correlation function defined piece by piece on [0, dmax].
 *
 * Breakpoints include both endpoints. Piece \c i applies on the half-open
 * interval [b_i, b_{i+1}), with the last interval closed at dmax. Beyond
 * dmax the function is zero.
 */
class PiecewiseCF
{
  public:
    using Evaluator = std::function<double(double)>;

    PiecewiseCF(SolidKind kind,
                std::vector<double> breakpoints,
                std::vector<Evaluator> pieces,
                bool analytic = true);

    SolidKind kind() const { return kind_; }
    bool analytic() const { return analytic_; }
    double dmax() const { return breaks_.back(); }
    std::size_t num_pieces() const { return pieces_.size(); }

    //! All breakpoints, starting at 0 and ending at dmax.
    std::span<double const> breakpoints() const { return breaks_; }

    //! Index of the piece that owns r (r must lie in [0, dmax]).
    std::size_t piece_index(double r) const;

    double operator()(double r) const;

    //! Branch i evaluated at r; valid on the closed interval of the piece.
    double eval_piece(std::size_t i, double r) const { return pieces_[i](r); }

    //! gamma(r / factor): the same shape with every length times factor.
    PiecewiseCF scaled(double factor) const;

  private:
    SolidKind kind_;
    std::vector<double> breaks_;
    std::vector<Evaluator> pieces_;
    bool analytic_;
};

//! Monte Carlo settings for shapes without a closed-form CF.
struct TabulationOptions
{
    std::size_t grid_points{101};
    std::uint64_t samples_per_point{100'000};
    std::uint64_t seed{1};
};

/*!
 * Correlation function of a solid at its actual size.
 *
 * Tetrahedron, octahedron and sphere use the closed forms rescaled through
 * gamma_L(r) = gamma(r / L). Cube and cylinder are tabulated by Monte Carlo
 * on an even grid and linearly interpolated.
 */
PiecewiseCF cf_for(SolidSpec const& solid, TabulationOptions const& mc = {});

}  // namespace platocf
