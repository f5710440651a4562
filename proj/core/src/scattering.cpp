#include "platocf/scattering.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "platocf/errors.hpp"
#include "platocf/quadrature.hpp"

namespace platocf
{
namespace
{
using std::numbers::pi;

constexpr double negative_tolerance = 1e-12;

double sinc(double x)
{
    if (std::abs(x) < 1e-4)
    {
        double const x2 = x * x;
        return 1 - x2 / 6 * (1 - x2 / 20);
    }
    return std::sin(x) / x;
}

void check_q(double q)
{
    if (!(q >= 0) || !std::isfinite(q))
        throw DomainError("scattering: q must be finite and non-negative");
}

/*!
 * Accumulate 4 pi int r^2 gamma(r) kernel(r) dr over all pieces along with
 * the same integral without the kernel (the q = 0 value).
 */
template<class Kernel>
std::pair<double, double>
radial_transform(PiecewiseCF const& cf,
                 double q,
                 QuadratureSpec const& quad,
                 unsigned nodes_per_panel,
                 Kernel&& kernel)
{
    auto const& rule = gauss_legendre(nodes_per_panel);
    auto const nodes = rule.nodes();
    auto const weights = rule.weights();
    auto const breaks = cf.breakpoints();

    double total = 0;
    double plain = 0;
    for (std::size_t i = 0; i < cf.num_pieces(); ++i)
    {
        double const lo = breaks[i];
        double const hi = breaks[i + 1];
        std::size_t const panels = quad.panels_for(q, hi - lo);
        double const width = (hi - lo) / static_cast<double>(panels);
        for (std::size_t p = 0; p < panels; ++p)
        {
            double const a = lo + width * static_cast<double>(p);
            double const b = p + 1 == panels ? hi : a + width;
            double const half = 0.5 * (b - a);
            double const mid = 0.5 * (a + b);
            double panel = 0;
            double panel_plain = 0;
            for (std::size_t k = 0; k < nodes.size(); ++k)
            {
                double const r = mid + half * nodes[k];
                double const f = weights[k] * r * r * cf.eval_piece(i, r);
                panel += f * kernel(r);
                panel_plain += f;
            }
            total += half * panel;
            plain += half * panel_plain;
        }
    }
    return {4 * pi * total, 4 * pi * plain};
}

IntensityValue clamp_negative(double value, double at_zero)
{
    if (value >= 0)
        return {value, false};
    return {0.0, value < -negative_tolerance * std::abs(at_zero)};
}

template<class Eval>
IntensityCurve evaluate_curve(std::span<double const> q_grid,
                              unsigned workers,
                              Eval&& eval)
{
    if (!std::is_sorted(q_grid.begin(), q_grid.end())
        || std::adjacent_find(q_grid.begin(), q_grid.end()) != q_grid.end())
    {
        throw DomainError("intensity curve: q grid must increase strictly");
    }
    IntensityCurve curve;
    curve.q.assign(q_grid.begin(), q_grid.end());
    curve.values.resize(q_grid.size());
    std::vector<char> flagged(q_grid.size(), 0);

    auto work = [&](std::size_t i) {
        IntensityValue v = eval(q_grid[i]);
        curve.values[i] = v.value;
        flagged[i] = v.clamped;
    };

    unsigned w = workers ? workers : std::thread::hardware_concurrency();
    w = static_cast<unsigned>(std::clamp<std::size_t>(w, 1, q_grid.size()));
    if (w <= 1)
    {
        for (std::size_t i = 0; i < q_grid.size(); ++i)
            work(i);
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(w);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < w; ++t)
            {
                pool.emplace_back([&, t] {
                    try
                    {
                        for (auto i = next++; i < q_grid.size(); i = next++)
                            work(i);
                    }
                    catch (...)
                    {
                        errors[t] = std::current_exception();
                    }
                });
            }
        }
        for (auto const& e : errors)
        {
            if (e)
                std::rethrow_exception(e);
        }
    }
    curve.clamped = static_cast<std::size_t>(
        std::count(flagged.begin(), flagged.end(), char{1}));
    return curve;
}

std::vector<std::size_t> peak_indices(std::span<double const> v)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
    {
        if (v[i] > v[i - 1] && v[i] >= v[i + 1])
            idx.push_back(i);
    }
    return idx;
}

std::pair<std::size_t, std::size_t>
window_range(IntensityCurve const& curve, double q_lo, double q_hi)
{
    if (!(q_lo < q_hi))
        throw DomainError("window: need q_lo < q_hi");
    auto first = std::lower_bound(curve.q.begin(), curve.q.end(), q_lo);
    auto last = std::upper_bound(curve.q.begin(), curve.q.end(), q_hi);
    auto const b = static_cast<std::size_t>(first - curve.q.begin());
    auto const e = static_cast<std::size_t>(last - curve.q.begin());
    if (e < b + 3)
        throw EstimationError("window: fewer than three samples in range");
    return {b, e};
}

double trapezoid(std::span<double const> x, std::span<double const> y)
{
    double sum = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
        sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return sum;
}

}  // namespace

//---------------------------------------------------------------------------//
std::size_t QuadratureSpec::panels_for(double q, double width) const
{
    double const wanted = std::ceil(q * width * panels_per_period / (2 * pi));
    return std::max<std::size_t>(min_panels, static_cast<std::size_t>(wanted));
}

//---------------------------------------------------------------------------//
IntensityValue
intensity_value(PiecewiseCF const& cf, double q, QuadratureSpec const& quad)
{
    check_q(q);
    auto [value, at_zero] = radial_transform(
        cf, q, quad, quad.nodes_per_panel, [q](double r) { return sinc(q * r); });
    return clamp_negative(value, at_zero);
}

double intensity(PiecewiseCF const& cf, double q, QuadratureSpec const& quad)
{
    return intensity_value(cf, q, quad).value;
}

IntensityCurve intensity_curve(PiecewiseCF const& cf,
                               std::span<double const> q_grid,
                               QuadratureSpec const& quad,
                               unsigned workers)
{
    return evaluate_curve(q_grid, workers, [&](double q) {
        return intensity_value(cf, q, quad);
    });
}

//---------------------------------------------------------------------------//
double size_truncation(SizeDistribution const& dist, QuadratureSpec const& quad)
{
    if (quad.d_truncation > 0)
        return quad.d_truncation;
    return dist.tail_cutoff(6, quad.size_tail_tolerance);
}

namespace
{
/*!
 * Gauss rule of the smearing integral on equally wide size panels.
 *
 * Node d = c_p + x_k sits at offset x_k from its panel center c_p, so
 * sin(s d) = sin(s c_p) cos(s x_k) + cos(s c_p) sin(s x_k) needs one sincos
 * per panel and per offset instead of one per node. \c scaled holds the
 * weights w p(d) d^6 / d, panel-major.
 */
struct SizeRule
{
    std::vector<double> centers;
    std::vector<double> offsets;
    std::vector<double> scaled;
    double moment{0};

    //! K(s) = sum_j w_j p(d_j) d_j^6 sin(s d_j) / (s d_j).
    double kernel(double s, std::vector<double>& cos_off, std::vector<double>& sin_off) const
    {
        if (s < 1e-12)
            return moment;
        for (std::size_t k = 0; k < offsets.size(); ++k)
        {
            cos_off[k] = std::cos(s * offsets[k]);
            sin_off[k] = std::sin(s * offsets[k]);
        }
        double total = 0;
        for (std::size_t p = 0; p < centers.size(); ++p)
        {
            double const* b = scaled.data() + p * offsets.size();
            double c_sum = 0;
            double s_sum = 0;
            for (std::size_t k = 0; k < offsets.size(); ++k)
            {
                c_sum += b[k] * cos_off[k];
                s_sum += b[k] * sin_off[k];
            }
            total += std::sin(s * centers[p]) * c_sum + std::cos(s * centers[p]) * s_sum;
        }
        return total / s;
    }
};

SizeRule size_rule(SizeDistribution const& dist, QuadratureSpec const& quad)
{
    SizeRule rule;
    if (dist.is_discrete())
        return rule;
    double const cutoff = size_truncation(dist, quad);
    auto const& gl = gauss_legendre(quad.size_nodes_per_panel);
    double const half = 0.5 * cutoff / quad.size_panels;
    for (double x : gl.nodes())
        rule.offsets.push_back(half * x);
    for (unsigned p = 0; p < quad.size_panels; ++p)
    {
        double const center = (2 * p + 1) * half;
        rule.centers.push_back(center);
        for (std::size_t k = 0; k < gl.size(); ++k)
        {
            double const d = center + rule.offsets[k];
            double const c = half * gl.weights()[k] * dist.density(d) * std::pow(d, 6);
            rule.scaled.push_back(c / d);
            rule.moment += c;
        }
    }
    return rule;
}

IntensityValue polydisperse_value(PiecewiseCF const& cf,
                                  SizeDistribution const& dist,
                                  double q,
                                  QuadratureSpec const& quad,
                                  SizeRule const& rule)
{
    check_q(q);
    if (dist.is_discrete())
    {
        double sum = 0;
        for (auto const& atom : dist.atoms())
        {
            double const d = atom.size;
            sum += atom.weight * std::pow(d, 6) * intensity(cf, q * d, quad);
        }
        return {sum, false};
    }
    std::vector<double> cos_off(rule.offsets.size());
    std::vector<double> sin_off(rule.offsets.size());
    auto kernel = [&](double r) { return rule.kernel(q * r, cos_off, sin_off); };
    auto [value, at_zero]
        = radial_transform(cf, q, quad, quad.smeared_nodes_per_panel, kernel);
    return clamp_negative(value, at_zero * rule.moment);
}
}  // namespace

double polydisperse_intensity(PiecewiseCF const& cf,
                              SizeDistribution const& dist,
                              double q,
                              QuadratureSpec const& quad)
{
    return polydisperse_value(cf, dist, q, quad, size_rule(dist, quad)).value;
}

IntensityCurve polydisperse_curve(PiecewiseCF const& cf,
                                  SizeDistribution const& dist,
                                  std::span<double const> q_grid,
                                  QuadratureSpec const& quad,
                                  unsigned workers)
{
    auto const rule = size_rule(dist, quad);
    return evaluate_curve(q_grid, workers, [&](double q) {
        return polydisperse_value(cf, dist, q, quad, rule);
    });
}

//---------------------------------------------------------------------------//
IntensityCurve porod_curve(IntensityCurve const& curve)
{
    if (curve.normalized)
    {
        throw ContractError(
            "porod_curve: Porod plots are defined on non-normalized intensities");
    }
    IntensityCurve out = curve;
    for (std::size_t i = 0; i < out.q.size(); ++i)
    {
        double const q2 = out.q[i] * out.q[i];
        out.values[i] *= q2 * q2;
    }
    out.porod = true;
    return out;
}

IntensityCurve normalize_curve(IntensityCurve const& curve)
{
    if (curve.q.empty())
        throw ContractError("normalize_curve: empty curve");
    if (curve.normalized)
        return curve;
    if (!(curve.q.front() < 1e-6))
        throw ContractError("normalize_curve: curve must start at q below 1e-6");
    double const ref = curve.values.front();
    if (!(ref > 0))
        throw ContractError("normalize_curve: non-positive value at q = 0");
    IntensityCurve out = curve;
    for (double& v : out.values)
        v /= ref;
    out.normalized = true;
    return out;
}

//---------------------------------------------------------------------------//
std::vector<double> local_maxima(IntensityCurve const& curve)
{
    std::vector<double> result;
    auto const& v = curve.values;
    for (std::size_t i : peak_indices(v))
    {
        double const den = v[i - 1] - 2 * v[i] + v[i + 1];
        double shift = 0;
        if (den < 0)
            shift = std::clamp(0.5 * (v[i - 1] - v[i + 1]) / den, -0.5, 0.5);
        double const step
            = shift < 0 ? curve.q[i] - curve.q[i - 1] : curve.q[i + 1] - curve.q[i];
        result.push_back(curve.q[i] + shift * step);
    }
    return result;
}

double oscillation_spacing(IntensityCurve const& curve)
{
    auto const peaks = local_maxima(curve);
    if (peaks.size() < 3)
    {
        throw EstimationError("oscillation_spacing: found "
                              + std::to_string(peaks.size())
                              + " maxima, need at least 3");
    }
    return (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
}

double windowed_mean(IntensityCurve const& curve, double q_lo, double q_hi)
{
    auto const [b, e] = window_range(curve, q_lo, q_hi);
    std::span<double const> q(curve.q.data() + b, e - b);
    std::span<double const> v(curve.values.data() + b, e - b);
    auto const peaks = peak_indices(v);
    std::size_t first = 0;
    std::size_t last = q.size() - 1;
    if (peaks.size() >= 2)
    {
        first = peaks.front();
        last = peaks.back();
    }
    auto const n = last - first + 1;
    return trapezoid(q.subspan(first, n), v.subspan(first, n))
           / (q[last] - q[first]);
}

double oscillation_amplitude(IntensityCurve const& curve, double q_lo, double q_hi)
{
    auto const [b, e] = window_range(curve, q_lo, q_hi);
    auto const n = static_cast<double>(e - b);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = b; i < e; ++i)
    {
        sx += curve.q[i];
        sy += curve.values[i];
        sxx += curve.q[i] * curve.q[i];
        sxy += curve.q[i] * curve.values[i];
    }
    double const slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double const icpt = (sy - slope * sx) / n;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = b; i < e; ++i)
    {
        double const res = curve.values[i] - (icpt + slope * curve.q[i]);
        lo = std::min(lo, res);
        hi = std::max(hi, res);
    }
    return hi - lo;
}

//---------------------------------------------------------------------------//
std::vector<double> linear_grid(double lo, double hi, std::size_t n)
{
    if (n < 2 || !(lo < hi))
        throw DomainError("linear_grid: need n >= 2 and lo < hi");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    g.back() = hi;
    return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n)
{
    if (n < 2 || !(lo > 0) || !(lo < hi))
        throw DomainError("log_grid: need n >= 2 and 0 < lo < hi");
    std::vector<double> g(n);
    double const ratio = std::log(hi / lo);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo * std::exp(ratio * static_cast<double>(i) / static_cast<double>(n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

}  // namespace platocf
