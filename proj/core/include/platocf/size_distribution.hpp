#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace platocf
{
//---------------------------------------------------------------------------//
/*!
 * Number-weighted particle size density.
 *
 * The continuous family is the Poisson/Gamma density
 *
 *   p(d) = lambda^{n+1} d^n exp(-lambda d) / n!,
 *
 * whose moments are Gamma(n+1+k) / (lambda^k Gamma(n+1)). Discrete
 * distributions are finite sets of (size, weight) atoms with weights summing
 * to one; a single atom is a point mass.
 */
class SizeDistribution
{
  public:
    struct Atom
    {
        double size;
        double weight;
    };

    static SizeDistribution poisson_gamma(int n, double lambda);
    static SizeDistribution point_mass(double size);
    static SizeDistribution discrete(std::vector<Atom> atoms);

    //! Parse "poisson:n,lambda" or "point:d".
    static SizeDistribution parse(std::string_view text);

    bool is_discrete() const { return !atoms_.empty(); }
    int shape() const { return n_; }
    double rate() const { return lambda_; }
    std::span<Atom const> atoms() const { return atoms_; }

    //! Density of the continuous family; zero for d < 0.
    double density(double d) const;

    //! E[d^k].
    double moment(int k) const;

    /*!
     * Size beyond which the d^k-weighted tail holds less than rel_tol of
     * the total: the integral of p(d) d^k over [cutoff, inf) divided by
     * moment(k).
     */
    double tail_cutoff(int k, double rel_tol) const;

    std::string describe() const;

  private:
    SizeDistribution() = default;

    int n_{0};
    double lambda_{0};
    std::vector<Atom> atoms_;
};

}  // namespace platocf
