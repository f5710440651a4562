#include "platocf/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>

#include <boost/math/special_functions/legendre.hpp>

#include "platocf/errors.hpp"

namespace platocf
{
GaussLegendre::GaussLegendre(unsigned n)
{
    if (n == 0)
        throw DomainError("GaussLegendre: need at least one node");
    // Non-negative zeros in ascending order; includes 0 when n is odd
    auto const zeros = boost::math::legendre_p_zeros<double>(static_cast<int>(n));
    nodes_.reserve(n);
    weights_.reserve(n);
    for (double x : zeros)
    {
        double const dp = boost::math::legendre_p_prime(static_cast<int>(n), x);
        double const w = 2 / ((1 - x * x) * dp * dp);
        nodes_.push_back(x);
        weights_.push_back(w);
        if (x != 0)
        {
            nodes_.push_back(-x);
            weights_.push_back(w);
        }
    }
}

GaussLegendre const& gauss_legendre(unsigned n)
{
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<GaussLegendre const>> rules;
    std::lock_guard lock(mutex);
    auto& rule = rules[n];
    if (!rule)
        rule = std::make_unique<GaussLegendre const>(n);
    return *rule;
}

}  // namespace platocf
