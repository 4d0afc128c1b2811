#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zhash/prng.hpp"
#include "zhash/zfamily.hpp"

namespace zhash {

/// Perfect hash function S -> [2m] built from an acyclic G(S, h1, h2):
///
///   sigma(x) = h1(x)      if bit1[h1(x)] ^ bit2[h2(x)] == 0
///              m + h2(x)  otherwise
class Bpz {
public:
    Bpz(ZFamily fam, std::vector<bool> bit1, std::vector<bool> bit2);

    [[nodiscard]] std::uint64_t operator()(Key x) const;

    [[nodiscard]] std::uint64_t m() const noexcept { return fam_.range(); }
    [[nodiscard]] const ZFamily& family() const noexcept { return fam_; }
    [[nodiscard]] const std::vector<bool>& bit1() const noexcept { return bit1_; }
    [[nodiscard]] const std::vector<bool>& bit2() const noexcept { return bit2_; }

    friend bool operator==(const Bpz&, const Bpz&) = default;

private:
    ZFamily fam_;
    std::vector<bool> bit1_;
    std::vector<bool> bit2_;
};

struct MphfParams {
    double epsilon = 1.0;
    double delta = 0.5;
    unsigned c = 3;
    unsigned max_attempts = 64;
};

struct MphfBuild {
    Bpz ph;
    unsigned attempts;
    /// sigma value of every key of S (in sorted key order) as fixed by the
    /// peel order, kept for cross-checking eval.
    std::vector<std::uint64_t> assignment;
};

/// Redraws (h1, h2) until G(S, h1, h2) peels completely, then fixes the bits
/// in reverse peel order so every key lands on its peel vertex. Throws
/// ConstructionError after max_attempts draws.
MphfBuild build_mphf(Prng& prng, std::span<const Key> keys, const MphfParams& params);

struct AcyclicBounds {
    double exact_rate;   // sqrt(1 - (1/(1+eps))^2), fully random pair
    double lower_bound;  // 1 + 0.5 ln(1 - (1/(1+eps))^2)
};

/// Throws DomainError for eps <= 0.
AcyclicBounds acyclic_prob_bounds(double epsilon);

/// Blob: magic "BPZ1", family blob length + blob, m, packed bit arrays.
std::vector<std::uint8_t> serialize(const Bpz& ph);
Bpz deserialize_bpz(std::span<const std::uint8_t> blob);

}  // namespace zhash
