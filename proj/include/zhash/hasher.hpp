#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <variant>

#include "zhash/poly_hash.hpp"
#include "zhash/prng.hpp"
#include "zhash/zfamily.hpp"

namespace zhash {

/// Anything that maps a key to d values in [range()].
template <typename H>
concept HashSequence = requires(const H& h, Key x, std::span<std::uint64_t> out) {
    { h.d() } -> std::convertible_to<unsigned>;
    { h.range() } -> std::convertible_to<std::uint64_t>;
    h.eval(x, out);
};

/// Fully random baseline: every (function, key) pair gets its own Prng draw.
/// Stands in for truly random hash functions in Z-vs-random comparisons.
class RandomOracle {
public:
    RandomOracle(unsigned d, std::uint64_t range, std::uint64_t seed);

    [[nodiscard]] unsigned d() const noexcept { return d_; }
    [[nodiscard]] std::uint64_t range() const noexcept { return range_; }

    void eval(Key x, std::span<std::uint64_t> out) const {
        for (unsigned i = 0; i < d_; ++i) {
            Prng p(mix64(seed_ + mix64(x ^ (std::uint64_t{i} << 61))));
            out[i] = p.below(range_);
        }
    }

private:
    unsigned d_;
    std::uint64_t range_;
    std::uint64_t seed_;
};

/// Runtime choice between a Z family and the random oracle.
class AnyHasher {
public:
    AnyHasher(ZFamily fam) : impl_(std::move(fam)) {}  // NOLINT(google-explicit-constructor)
    AnyHasher(RandomOracle oracle) : impl_(oracle) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] unsigned d() const noexcept {
        return std::visit([](const auto& h) { return h.d(); }, impl_);
    }
    [[nodiscard]] std::uint64_t range() const noexcept {
        return std::visit([](const auto& h) { return h.range(); }, impl_);
    }
    void eval(Key x, std::span<std::uint64_t> out) const {
        std::visit([&](const auto& h) { h.eval(x, out); }, impl_);
    }

    [[nodiscard]] const ZFamily* zfamily() const noexcept { return std::get_if<ZFamily>(&impl_); }

private:
    std::variant<ZFamily, RandomOracle> impl_;
};

static_assert(HashSequence<ZFamily>);
static_assert(HashSequence<RandomOracle>);
static_assert(HashSequence<AnyHasher>);

}  // namespace zhash
