#pragma once

#include <cmath>
#include <numbers>

namespace platocf::detail
{
using std::numbers::sqrt2;
using std::numbers::sqrt3;

//! Rounding below zero by at most this much is treated as zero.
inline constexpr double sqrt_clamp = 1e-12;

inline double clamped_sqrt(double arg)
{
    if (arg < 0 && arg >= -sqrt_clamp)
        return 0;
    return std::sqrt(arg);
}

inline double delta34(double r) { return clamped_sqrt(4 * r * r - 3); }
inline double delta11(double r) { return clamped_sqrt(r * r - 1); }

// Helpers built on d = delta34(r)
inline double t1(double r, double d)
{
    double const r2 = r * r;
    return (4 * r2 * r2 - 12 * r2 + 7) / (4 * (1 - r2) * d);
}
inline double t2(double r, double d)
{
    double const r2 = r * r;
    return (9 * r2 - 7) / (3 * sqrt3 * (1 - r2) * d);
}
inline double t3(double r, double d) { return (2 * sqrt2 * r + 3) / d; }
inline double t4(double r, double d) { return sqrt2 * r / d; }
inline double t5(double r, double d) { return d / (2 * (1 - r * r)); }
inline double t6(double, double d) { return d / sqrt3; }
inline double t7(double r, double d) { return (6 * r * r - 5) / (sqrt3 * d); }
inline double t8(double r, double d)
{
    return r * (6 * r * r - 5) / (sqrt2 * d);
}
inline double t9(double r, double d)
{
    double const r2 = r * r;
    return (2 * r2 * r2 + r2 - 2) / (2 * sqrt2 * r * (1 - r2) * d);
}
inline double t10(double r, double d) { return sqrt3 * d / (2 * r * r - 3); }
inline double t11(double, double d) { return (d + 1) / (d - 1); }
inline double t12(double r, double d) { return (2 * r * r - 3) / (sqrt3 * d); }
inline double t13(double r, double d)
{
    double const r2 = r * r;
    return (-2 * r2 * r2 + 12 * r2 - 9) / (sqrt3 * (2 * r2 - 3) * d);
}
inline double t14(double r, double d)
{
    double const x = r * r;
    double const num = (((2 * x - 34) * x + 96) * x - 90) * x + 27;
    double const den = ((10 * x - 54) * x + 72) * x - 27;
    return sqrt3 * num / (den * d);
}

// Reciprocals of the helpers that diverge at r = 1, with 1 - r^2 formed as
// (1 - r)(1 + r) so they stay accurate as r -> 1
inline double one_minus_r2(double r) { return (1 - r) * (1 + r); }
inline double inv_t1(double r, double d)
{
    double const r2 = r * r;
    return 4 * one_minus_r2(r) * d / (4 * r2 * r2 - 12 * r2 + 7);
}
inline double inv_t2(double r, double d)
{
    return 3 * sqrt3 * one_minus_r2(r) * d / (9 * r * r - 7);
}
inline double inv_t5(double r, double d) { return 2 * one_minus_r2(r) / d; }
inline double inv_t9(double r, double d)
{
    double const r2 = r * r;
    return 2 * sqrt2 * r * one_minus_r2(r) * d / (2 * r2 * r2 + r2 - 2);
}
inline double inv_t11(double r, double d)
{
    // (d - 1)/(d + 1) with d^2 - 1 = -4 (1 - r^2)
    return -4 * one_minus_r2(r) / ((d + 1) * (d + 1));
}

// Helpers built on e = delta11(r)
inline double t15(double, double e) { return sqrt3 * e; }
inline double t16(double r, double e) { return r / (sqrt2 * e); }
inline double t17(double r, double e)
{
    double const r2 = r * r;
    return (7 * r2 * r2 - 4 * r2 - 4) / (4 * sqrt2 * r * (r2 - 2) * e);
}
inline double t18(double r, double e)
{
    double const r2 = r * r;
    return (9 * r2 - 10) / (3 * sqrt3 * (r2 - 2) * e);
}
// Reciprocals of the helpers that diverge at r = sqrt(2)
inline double r2_minus_2(double r) { return (r - sqrt2) * (r + sqrt2); }
inline double inv_t17(double r, double e)
{
    double const r2 = r * r;
    return 4 * sqrt2 * r * r2_minus_2(r) * e / (7 * r2 * r2 - 4 * r2 - 4);
}
inline double inv_t18(double r, double e)
{
    return 3 * sqrt3 * r2_minus_2(r) * e / (9 * r * r - 10);
}

inline double t19(double r, double e)
{
    double const r2 = r * r;
    return (r2 + 2 * e - 2) / (2 - r2 + 2 * e);
}

}  // namespace platocf::detail
