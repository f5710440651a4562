#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cf_core.hpp"
#include "size_distribution.hpp"

namespace platocf
{
//---------------------------------------------------------------------------//
/*!
 * Panel Gauss configuration for the scattering transforms.
 *
 * Every CF piece is split into
 * max(min_panels, ceil(q * width * panels_per_period / (2 pi))) equal panels
 * of \c nodes_per_panel nodes, so panels never straddle a breakpoint and a
 * panel spans at most a quarter period of sin(q r) by default. The size
 * integral of the polydisperse intensity uses \c size_panels panels on
 * [0, d_truncation]; a zero truncation is replaced by the size at which the
 * d^6-weighted tail falls below \c size_tail_tolerance. The smeared radial
 * integrand is smooth on the panel scale, so it uses the smaller
 * \c smeared_nodes_per_panel.
 */
struct QuadratureSpec
{
    unsigned nodes_per_panel{64};
    unsigned min_panels{4};
    double panels_per_period{4};
    unsigned size_panels{200};
    unsigned size_nodes_per_panel{32};
    unsigned smeared_nodes_per_panel{32};
    double d_truncation{0};
    double size_tail_tolerance{1e-12};

    std::size_t panels_for(double q, double width) const;
};

//! Intensity (or transformed intensity) sampled on a q grid.
struct IntensityCurve
{
    std::vector<double> q;
    std::vector<double> values;
    bool normalized{false};
    bool porod{false};
    //! Points whose quadrature went negative beyond -1e-12 I(0) and were clamped.
    std::size_t clamped{0};
};

//---------------------------------------------------------------------------//
// INTENSITY
//---------------------------------------------------------------------------//
struct IntensityValue
{
    double value{0};
    bool clamped{false};
};

/*!
 * I(q) = 4 pi int_0^dmax r^2 gamma(r) sin(q r)/(q r) dr, so that I(0) = V.
 *
 * Tiny negative quadrature results (above -1e-12 I(0)) are set to zero;
 * anything more negative is also set to zero and flagged.
 */
IntensityValue intensity_value(PiecewiseCF const& cf,
                               double q,
                               QuadratureSpec const& quad = {});

double intensity(PiecewiseCF const& cf, double q, QuadratureSpec const& quad = {});

//! Intensity on a grid; points are evaluated on up to \c workers threads.
IntensityCurve intensity_curve(PiecewiseCF const& cf,
                               std::span<double const> q_grid,
                               QuadratureSpec const& quad = {},
                               unsigned workers = 0);

//---------------------------------------------------------------------------//
// POLYDISPERSITY
//---------------------------------------------------------------------------//
/*!
 * Size-averaged intensity
 *
 *   <I>(q) = int_0^inf p(d) d^6 I_1(q d) dd,
 *
 * where I_1 is the intensity of \c cf (the reference size). Discrete
 * distributions are summed atom by atom. For the continuous family the
 * order of integration is swapped: the size integral is evaluated at every
 * radial node as a kernel K(s) = int p(d) d^6 sinc(s d) dd over
 * [0, d_truncation].
 */
double polydisperse_intensity(PiecewiseCF const& cf,
                              SizeDistribution const& dist,
                              double q,
                              QuadratureSpec const& quad = {});

IntensityCurve polydisperse_curve(PiecewiseCF const& cf,
                                  SizeDistribution const& dist,
                                  std::span<double const> q_grid,
                                  QuadratureSpec const& quad = {},
                                  unsigned workers = 0);

//! Resolved size cutoff of the smearing integral.
double size_truncation(SizeDistribution const& dist, QuadratureSpec const& quad);

//---------------------------------------------------------------------------//
// CURVE TRANSFORMS
//---------------------------------------------------------------------------//
// q^4 I(q); throws ContractError on normalized input
IntensityCurve porod_curve(IntensityCurve const& curve);

// Divide by the value at the smallest q, which must be below 1e-6
IntensityCurve normalize_curve(IntensityCurve const& curve);

/*!
 * Mean q spacing of successive local maxima, located by parabolic
 * refinement. Throws EstimationError with fewer than three maxima.
 */
double oscillation_spacing(IntensityCurve const& curve);

//! Refined positions of local maxima of the curve values.
std::vector<double> local_maxima(IntensityCurve const& curve);

/*!
 * Mean of the curve over [q_lo, q_hi]. When at least two maxima fall in the
 * window the average runs from the first to the last maximum, i.e. over a
 * whole number of oscillation periods.
 */
double windowed_mean(IntensityCurve const& curve, double q_lo, double q_hi);

/*!
 * Peak-to-peak spread in [q_lo, q_hi] after removing a least-squares line.
 */
double oscillation_amplitude(IntensityCurve const& curve, double q_lo, double q_hi);

//! Evenly spaced grid of n points on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, std::size_t n);

//! Logarithmically spaced grid of n points on [lo, hi], lo > 0.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace platocf
