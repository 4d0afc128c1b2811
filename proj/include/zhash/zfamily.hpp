#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zhash/poly_hash.hpp"
#include "zhash/prng.hpp"

namespace zhash {

struct ZParams {
    unsigned c = 1;       // number of g-functions
    unsigned d = 2;       // number of output functions
    unsigned kappa = 2;   // independence of every f_i and g_j
    std::uint64_t ell = 1;  // range of the g-functions
    std::uint64_t m = 1;    // output range

    /// Deficiency floor: kappa / 2.
    [[nodiscard]] unsigned k() const noexcept { return kappa / 2; }

    /// Throws ParameterError unless c >= 1, d >= 2, kappa even in [2, 64],
    /// ell >= 1, m >= 1.
    void validate() const;

    friend bool operator==(const ZParams&, const ZParams&) = default;
};

/// ceil(n^delta), at least 1.
std::uint64_t ell_from_delta(std::uint64_t n, double delta);

/// A drawn hash-function sequence (h_1, ..., h_d) from class Z.
///
///   h_i(x) = (f_i(x) + sum_j z_i[j][g_j(x)]) mod m
///
/// The z tables are stored row-major: z_i[j][v] at z(i)[j * ell + v].
class ZFamily {
public:
    ZFamily(ZParams params, std::vector<PolyHash> f, std::vector<PolyHash> g,
            std::vector<std::vector<std::uint64_t>> z);

    [[nodiscard]] const ZParams& params() const noexcept { return params_; }
    [[nodiscard]] unsigned d() const noexcept { return params_.d; }
    [[nodiscard]] std::uint64_t range() const noexcept { return params_.m; }

    [[nodiscard]] std::span<const PolyHash> f() const noexcept { return f_; }
    [[nodiscard]] std::span<const PolyHash> g() const noexcept { return g_; }
    [[nodiscard]] std::span<const std::uint64_t> z(unsigned i) const noexcept { return z_[i]; }

    /// Writes (h_1(x), ..., h_d(x)) into out (size d). Throws DomainError on
    /// an inadmissible key.
    void eval(Key x, std::span<std::uint64_t> out) const;
    [[nodiscard]] std::vector<std::uint64_t> eval(Key x) const;

    /// Single coordinate h_i(x), i in [0, d).
    [[nodiscard]] std::uint64_t eval_one(Key x, unsigned i) const;

    /// Raw g_j(x) values (size c).
    void eval_g(Key x, std::span<std::uint64_t> out) const;

    friend bool operator==(const ZFamily&, const ZFamily&) = default;

private:
    ZParams params_;
    std::vector<PolyHash> f_;
    std::vector<PolyHash> g_;
    std::vector<std::vector<std::uint64_t>> z_;
};

/// Draws every component uniformly: f_i and g_j as kappa-wise independent
/// polynomials, then all z entries uniform in [m].
ZFamily draw_z(Prng& prng, const ZParams& params);

enum class Deficiency { good, critical, bad };

const char* to_string(Deficiency cls) noexcept;

struct DeficiencyReport {
    std::uint64_t d_T = 0;
    Deficiency cls = Deficiency::good;
    std::vector<std::uint64_t> per_g_distinct;

    /// good_T in the sense of the deficiency definition: d_T <= k. Note that
    /// critical sets are also good.
    [[nodiscard]] bool is_good() const noexcept { return cls != Deficiency::bad; }
};

/// d_T = |T| - max{k, |g_1(T)|, ..., |g_c(T)|}, clipped at 0; bad iff d_T > k,
/// critical iff d_T == k. Depends only on the g components.
DeficiencyReport classify_deficiency(const ZFamily& fam, std::span<const Key> keys);

struct BadRateEstimate {
    std::uint64_t trials = 0;
    std::uint64_t not_good_strict = 0;  // trials with class != good, i.e. crit or bad
    double rate = 0.0;
    double bound = 0.0;  // (|T|^2 / ell)^(c k), capped at 1
    double sigma = 0.0;  // binomial standard deviation at the bound
};

/// Empirical Pr(bad_T or crit_T) over fresh families. Each trial draws its
/// family and its key set T (distinct random keys) from prng.child(trial).
BadRateEstimate estimate_bad_rate(const ZParams& params, std::size_t t_size,
                                  std::uint64_t trials, std::uint64_t seed);

/// Self-describing little-endian blob: magic "ZFAM", version, params,
/// coefficient arrays, z tables.
std::vector<std::uint8_t> serialize(const ZFamily& fam);
ZFamily deserialize_zfamily(std::span<const std::uint8_t> blob);

}  // namespace zhash
