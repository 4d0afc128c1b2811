#pragma once

#include <cstdint>
#include <span>

namespace zhash::stats {

/// Upper tail Pr(X >= x) for X ~ chi-square(dof).
double chi_square_sf(double x, double dof);

struct ChiSquare {
    double statistic = 0.0;
    double dof = 0.0;
    double p_value = 1.0;
};

/// Pearson goodness-of-fit against the uniform distribution on counts.size()
/// cells.
ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts);

/// sqrt(p (1 - p) / trials).
double binomial_sigma(double p, std::uint64_t trials);

}  // namespace zhash::stats
