#include "platocf/size_distribution.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "platocf/errors.hpp"

namespace platocf
{
namespace
{
template<class T>
T parse_number(std::string_view text, std::string_view what)
{
    T value{};
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
    {
        throw DomainError("size distribution: malformed " + std::string(what)
                          + " '" + std::string(text) + "'");
    }
    return value;
}
}  // namespace

SizeDistribution SizeDistribution::poisson_gamma(int n, double lambda)
{
    if (n < 0 || !(lambda > 0) || !std::isfinite(lambda))
        throw DomainError("poisson_gamma: need n >= 0 and lambda > 0");
    SizeDistribution dist;
    dist.n_ = n;
    dist.lambda_ = lambda;
    return dist;
}

SizeDistribution SizeDistribution::point_mass(double size)
{
    return discrete({{size, 1.0}});
}

SizeDistribution SizeDistribution::discrete(std::vector<Atom> atoms)
{
    if (atoms.empty())
        throw DomainError("discrete size distribution: no atoms");
    double total = 0;
    for (auto const& a : atoms)
    {
        if (!(a.size > 0) || !(a.weight >= 0))
            throw DomainError("discrete size distribution: bad atom");
        total += a.weight;
    }
    if (std::abs(total - 1) > 1e-12)
        throw DomainError("discrete size distribution: weights must sum to 1");
    SizeDistribution dist;
    dist.atoms_ = std::move(atoms);
    return dist;
}

SizeDistribution SizeDistribution::parse(std::string_view text)
{
    auto const colon = text.find(':');
    if (colon == std::string_view::npos)
        throw DomainError("size distribution: expected 'family:params'");
    auto const family = text.substr(0, colon);
    auto const params = text.substr(colon + 1);
    if (family == "poisson")
    {
        auto const comma = params.find(',');
        if (comma == std::string_view::npos)
            throw DomainError("size distribution: expected poisson:n,lambda");
        int const n = parse_number<int>(params.substr(0, comma), "shape");
        double const lambda
            = parse_number<double>(params.substr(comma + 1), "rate");
        return poisson_gamma(n, lambda);
    }
    if (family == "point")
        return point_mass(parse_number<double>(params, "size"));
    throw DomainError("size distribution: unknown family '"
                      + std::string(family) + "'");
}

double SizeDistribution::density(double d) const
{
    if (is_discrete())
        throw ContractError("density: discrete distribution has no density");
    if (d < 0)
        return 0;
    // lambda^{n+1} d^n e^{-lambda d} / n! in log space
    double const log_p = (n_ + 1) * std::log(lambda_) - lambda_ * d
                         - std::lgamma(n_ + 1.0)
                         + (n_ == 0 ? 0.0 : n_ * std::log(d));
    return d == 0 && n_ > 0 ? 0.0 : std::exp(log_p);
}

double SizeDistribution::moment(int k) const
{
    if (is_discrete())
    {
        return std::accumulate(
            atoms_.begin(), atoms_.end(), 0.0, [k](double acc, Atom const& a) {
                return acc + a.weight * std::pow(a.size, k);
            });
    }
    if (n_ + 1 + k <= 0)
        throw DomainError("moment: order too negative for this shape");
    return std::exp(std::lgamma(n_ + 1.0 + k) - std::lgamma(n_ + 1.0))
           / std::pow(lambda_, k);
}

double SizeDistribution::tail_cutoff(int k, double rel_tol) const
{
    if (is_discrete())
    {
        double largest = 0;
        for (auto const& a : atoms_)
            largest = std::max(largest, a.size);
        return largest;
    }
    // p(d) d^k / moment(k) is a Gamma(n+1+k, lambda) density
    return boost::math::gamma_q_inv(n_ + 1.0 + k, rel_tol) / lambda_;
}

std::string SizeDistribution::describe() const
{
    std::ostringstream os;
    os.precision(17);
    if (!is_discrete())
    {
        os << "poisson:" << n_ << ',' << lambda_;
        return os.str();
    }
    os << "discrete:";
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        os << (i ? ";" : "") << atoms_[i].size << '@' << atoms_[i].weight;
    return os.str();
}

}  // namespace platocf
