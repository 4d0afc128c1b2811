#include "zhash/poly_hash.hpp"

#include <string>

#include "zhash/error.hpp"

namespace zhash {

PolyHash::PolyHash(std::vector<std::uint64_t> coefficients, std::uint64_t range)
    : coeffs_(std::move(coefficients)), range_(range) {
    if (range_ == 0) throw ParameterError("PolyHash: range must be >= 1");
    if (coeffs_.empty() || coeffs_.size() > kMaxKappa) {
        throw ParameterError("PolyHash: kappa must be in [1, 64], got " +
                             std::to_string(coeffs_.size()));
    }
    for (auto a : coeffs_) {
        if (a >= kPrime) throw ParameterError("PolyHash: coefficient not reduced mod p");
    }
}

std::uint64_t PolyHash::operator()(Key x) const {
    check_admissible(x);
    return eval_unchecked(x);
}

PolyHash draw_poly(Prng& prng, unsigned kappa, std::uint64_t range) {
    if (range == 0) throw ParameterError("draw_poly: range must be >= 1");
    if (kappa == 0 || kappa > kMaxKappa) {
        throw ParameterError("draw_poly: kappa must be in [1, 64]");
    }
    std::vector<std::uint64_t> coeffs(kappa);
    for (auto& a : coeffs) a = prng.below(kPrime);
    return PolyHash(std::move(coeffs), range);
}

void check_admissible(Key x) {
    if (x >= kPrime) {
        throw DomainError("key " + std::to_string(x) + " is not below 2^61-1");
    }
}

}  // namespace zhash
