#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zhash/prng.hpp"

namespace zhash {

using Key = std::uint64_t;

/// Artifact-wide prime modulus 2^61 - 1. Keys must be strictly below it.
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline constexpr unsigned kMaxKappa = 64;

/// (a * b) mod 2^61-1 for a, b < 2^61-1.
constexpr std::uint64_t mulmod_p(std::uint64_t a, std::uint64_t b) noexcept {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(prod) & kPrime;
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kPrime) s -= kPrime;
    return s;
}

constexpr std::uint64_t addmod_p(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t s = a + b;
    if (s >= kPrime) s -= kPrime;
    return s;
}

/// Random polynomial of degree < kappa over GF(2^61-1), reduced into [range].
///
/// Drawing the kappa coefficients uniformly gives a kappa-wise independent
/// family on [p]; the final "mod range" step adds a bias of at most range/p.
class PolyHash {
public:
    /// Coefficients are in ascending degree order: value = sum a_i x^i.
    PolyHash(std::vector<std::uint64_t> coefficients, std::uint64_t range);

    [[nodiscard]] std::uint64_t operator()(Key x) const;

    /// Evaluation without the admissibility check. x must be < kPrime.
    [[nodiscard]] std::uint64_t eval_unchecked(Key x) const noexcept {
        std::uint64_t acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = addmod_p(mulmod_p(acc, x), *it);
        }
        return acc % range_;
    }

    [[nodiscard]] std::span<const std::uint64_t> coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] unsigned kappa() const noexcept { return static_cast<unsigned>(coeffs_.size()); }
    [[nodiscard]] std::uint64_t range() const noexcept { return range_; }

    friend bool operator==(const PolyHash&, const PolyHash&) = default;

private:
    std::vector<std::uint64_t> coeffs_;
    std::uint64_t range_;
};

/// Draws kappa coefficients uniformly from [p]. The leading coefficient may be
/// zero, so the degree can degenerate.
PolyHash draw_poly(Prng& prng, unsigned kappa, std::uint64_t range);

/// Throws DomainError when x is not below the modulus.
void check_admissible(Key x);

}  // namespace zhash
