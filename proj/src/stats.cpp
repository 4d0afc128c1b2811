#include "zhash/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numeric>

#include "zhash/error.hpp"

namespace zhash::stats {

double chi_square_sf(double x, double dof) {
    if (x <= 0.0) return 1.0;
    const boost::math::chi_squared dist(dof);
    return boost::math::cdf(boost::math::complement(dist, x));
}

ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts) {
    if (counts.size() < 2) throw ParameterError("chi_square_uniform: need >= 2 cells");
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    const double expected = total / static_cast<double>(counts.size());
    ChiSquare out;
    out.dof = static_cast<double>(counts.size() - 1);
    if (expected <= 0.0) return out;
    for (auto c : counts) {
        const double diff = static_cast<double>(c) - expected;
        out.statistic += diff * diff / expected;
    }
    out.p_value = chi_square_sf(out.statistic, out.dof);
    return out;
}

double binomial_sigma(double p, std::uint64_t trials) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace zhash::stats
