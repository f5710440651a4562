#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace platocf
{
//---------------------------------------------------------------------------//
/*!
 * Gauss-Legendre rule on [-1, 1] with a run-time node count.
 *
 * Exact for polynomials of degree up to 2n - 1.
 */
class GaussLegendre
{
  public:
    explicit GaussLegendre(unsigned n);

    unsigned size() const { return static_cast<unsigned>(nodes_.size()); }
    std::span<double const> nodes() const { return nodes_; }
    std::span<double const> weights() const { return weights_; }

    //! Integral of f over [a, b].
    template<class F>
    double integrate(F&& f, double a, double b) const
    {
        double const half = 0.5 * (b - a);
        double const mid = 0.5 * (b + a);
        double sum = 0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            sum += weights_[i] * f(mid + half * nodes_[i]);
        return half * sum;
    }

    //! Integral over [a, b] split into equal panels.
    template<class F>
    double integrate(F&& f, double a, double b, std::size_t panels) const
    {
        double const width = (b - a) / static_cast<double>(panels);
        double sum = 0;
        for (std::size_t p = 0; p < panels; ++p)
        {
            double const lo = a + width * static_cast<double>(p);
            double const hi = p + 1 == panels ? b : lo + width;
            sum += integrate(f, lo, hi);
        }
        return sum;
    }

  private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

// Shared rule for n nodes, built once per n
GaussLegendre const& gauss_legendre(unsigned n);

}  // namespace platocf
