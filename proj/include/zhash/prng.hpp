#pragma once

#include <cstdint>
#include <limits>

namespace zhash {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based 64-bit generator (SplitMix64).
///
/// Not cryptographic. Every stream is a pure function of its seed, and
/// child(i) derives an independent-looking stream from (seed, i) so that
/// parallel trials stay reproducible regardless of scheduling.
/// Satisfies UniformRandomBitGenerator.
class Prng {
public:
    using result_type = std::uint64_t;

    explicit Prng(std::uint64_t seed = 0) noexcept : seed_(seed), state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept { return next(); }

    result_type next() noexcept {
        state_ += kGamma;
        return mix64(state_);
    }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) noexcept {
        // Lemire's multiply-shift with rejection: exact uniformity.
        std::uint64_t x = next();
        unsigned __int128 prod = static_cast<unsigned __int128>(x) * bound;
        auto low = static_cast<std::uint64_t>(prod);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                x = next();
                prod = static_cast<unsigned __int128>(x) * bound;
                low = static_cast<std::uint64_t>(prod);
            }
        }
        return static_cast<std::uint64_t>(prod >> 64);
    }

    /// Uniform double in [0, 1).
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Child stream i. Depends only on the construction seed and i, not on
    /// how far this stream has advanced.
    [[nodiscard]] Prng child(std::uint64_t i) const noexcept {
        return Prng(mix64(mix64(seed_ ^ 0x6a09e667f3bcc909ULL) + mix64(i + kGamma)));
    }

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    std::uint64_t seed_;
    std::uint64_t state_;
};

}  // namespace zhash
