#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zhash/poly_hash.hpp"
#include "zhash/prng.hpp"
#include "zhash/zfamily.hpp"

namespace zhash {

struct UniformSimParams {
    std::size_t n = 1;
    double epsilon = 1.0;
    double delta = 0.5;
    unsigned c = 1;
    unsigned w = 64;  // group R = w-bit words under XOR
};

/// Simulated uniform hash function over R = {0,1}^w:
///
///   h(x) = t1[h1(x)] ^ t2[h2(x)] ^ f(x) ^ y_1[g_1(x)] ^ ... ^ y_c[g_c(x)]
///
/// with (h1, h2) from Z (m = ceil((1+eps) n), ell = ceil(n^delta)), sharing
/// the g-functions of that pair.
class UniformSimDS {
public:
    UniformSimDS(ZFamily fam, std::vector<std::uint64_t> t1, std::vector<std::uint64_t> t2,
                 std::vector<std::vector<std::uint64_t>> y, std::vector<PolyHash> f_parts,
                 unsigned w);

    [[nodiscard]] std::uint64_t operator()(Key x) const;

    [[nodiscard]] const ZFamily& family() const noexcept { return fam_; }
    [[nodiscard]] unsigned width() const noexcept { return w_; }
    [[nodiscard]] std::span<const std::uint64_t> t1() const noexcept { return t1_; }
    [[nodiscard]] std::span<const std::uint64_t> t2() const noexcept { return t2_; }
    [[nodiscard]] std::span<const std::uint64_t> y(unsigned j) const noexcept { return y_[j]; }
    [[nodiscard]] std::span<const PolyHash> f_parts() const noexcept { return f_parts_; }

    /// (2m + c * ell) * w: the random-table part of the description.
    [[nodiscard]] std::uint64_t table_bits() const noexcept;
    /// table_bits plus the stored polynomial coefficients and z tables.
    [[nodiscard]] std::uint64_t total_bits() const noexcept;

    /// Copy with t1, t2 replaced; everything else shared.
    [[nodiscard]] UniformSimDS with_tables(std::vector<std::uint64_t> t1,
                                           std::vector<std::uint64_t> t2) const;

private:
    ZFamily fam_;
    std::vector<std::uint64_t> t1_, t2_;
    std::vector<std::vector<std::uint64_t>> y_;
    std::vector<PolyHash> f_parts_;  // one part for w <= 32, two 32-bit halves above
    unsigned w_;
    std::uint64_t mask_;
};

UniformSimDS build_ds(Prng& prng, const UniformSimParams& params);

/// Uniform random w-bit word.
std::uint64_t draw_word(Prng& prng, unsigned w);

struct UniformityProbe {
    std::uint64_t trials = 0;
    std::size_t cells = 0;       // |R|^|S|
    std::vector<std::uint64_t> counts;
    double chi_square = 0.0;
    double p_value = 1.0;
};

/// Joint distribution of (h(x))_{x in S} over fresh data structures, one per
/// trial from Prng(seed).child(trial), tested against uniform on R^|S|.
/// Requires |S| <= 6 and w <= 2.
UniformityProbe uniformity_probe(const UniformSimParams& params, std::span<const Key> keys,
                                 std::uint64_t trials, std::uint64_t seed);

}  // namespace zhash
