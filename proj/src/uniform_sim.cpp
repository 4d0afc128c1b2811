#include "zhash/uniform_sim.hpp"

#include <cmath>

#include "zhash/error.hpp"
#include "zhash/stats.hpp"

namespace zhash {

namespace {

std::uint64_t width_mask(unsigned w) {
    return w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
}

}  // namespace

std::uint64_t draw_word(Prng& prng, unsigned w) { return prng.next() & width_mask(w); }

UniformSimDS::UniformSimDS(ZFamily fam, std::vector<std::uint64_t> t1,
                           std::vector<std::uint64_t> t2,
                           std::vector<std::vector<std::uint64_t>> y,
                           std::vector<PolyHash> f_parts, unsigned w)
    : fam_(std::move(fam)),
      t1_(std::move(t1)),
      t2_(std::move(t2)),
      y_(std::move(y)),
      f_parts_(std::move(f_parts)),
      w_(w),
      mask_(width_mask(w)) {
    const auto& p = fam_.params();
    if (w_ < 1 || w_ > 64) throw ParameterError("UniformSimDS: w must be in [1, 64]");
    if (p.d != 2) throw ParameterError("UniformSimDS: needs a hash pair (d = 2)");
    if (t1_.size() != p.m || t2_.size() != p.m) throw ParameterError("UniformSimDS: |t| != m");
    if (y_.size() != p.c) throw ParameterError("UniformSimDS: need c y-tables");
    for (const auto& yj : y_) {
        if (yj.size() != p.ell) throw ParameterError("UniformSimDS: |y_j| != ell");
    }
    if (f_parts_.empty() || f_parts_.size() > 2) throw ParameterError("UniformSimDS: bad f");
    auto in_group = [&](const std::vector<std::uint64_t>& v) {
        for (auto e : v) {
            if ((e & ~mask_) != 0) throw ParameterError("UniformSimDS: element wider than w");
        }
    };
    in_group(t1_);
    in_group(t2_);
    for (const auto& yj : y_) in_group(yj);
}

std::uint64_t UniformSimDS::operator()(Key x) const {
    check_admissible(x);
    std::uint64_t hv[2];
    fam_.eval(x, hv);
    std::uint64_t value = t1_[hv[0]] ^ t2_[hv[1]];
    value ^= f_parts_[0].eval_unchecked(x);
    if (f_parts_.size() == 2) value ^= f_parts_[1].eval_unchecked(x) << 32;
    const auto g = fam_.g();
    for (unsigned j = 0; j < g.size(); ++j) value ^= y_[j][g[j].eval_unchecked(x)];
    return value & mask_;
}

std::uint64_t UniformSimDS::table_bits() const noexcept {
    const auto& p = fam_.params();
    return (2 * p.m + p.c * p.ell) * w_;
}

std::uint64_t UniformSimDS::total_bits() const noexcept {
    const auto& p = fam_.params();
    const std::uint64_t coeff_words = (p.d + p.c) * p.kappa + f_parts_.size() * 2;
    const std::uint64_t z_words = p.d * p.c * p.ell;
    // Coefficients are residues mod 2^61-1, z entries are in [m].
    const auto m_bits = static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(p.m))));
    return table_bits() + coeff_words * 61 + z_words * m_bits;
}

UniformSimDS UniformSimDS::with_tables(std::vector<std::uint64_t> t1,
                                       std::vector<std::uint64_t> t2) const {
    return UniformSimDS(fam_, std::move(t1), std::move(t2), y_, f_parts_, w_);
}

UniformSimDS build_ds(Prng& prng, const UniformSimParams& params) {
    if (params.n < 1) throw ParameterError("build_ds: n must be >= 1");
    if (!(params.epsilon > 0.0)) throw ParameterError("build_ds: epsilon must be > 0");
    if (!(params.delta > 0.0 && params.delta < 1.0)) {
        throw ParameterError("build_ds: delta must lie in (0, 1)");
    }
    if (params.c < 1) throw ParameterError("build_ds: c must be >= 1");
    if (params.w < 1 || params.w > 64) throw ParameterError("build_ds: w must be in [1, 64]");

    ZParams zp;
    zp.c = params.c;
    zp.d = 2;
    zp.kappa = 2;
    zp.m = static_cast<std::uint64_t>(
        std::ceil((1.0 + params.epsilon) * static_cast<double>(params.n) - 1e-9));
    zp.ell = ell_from_delta(params.n, params.delta);
    ZFamily fam = draw_z(prng, zp);

    const unsigned w = params.w;
    std::vector<std::uint64_t> t1(zp.m), t2(zp.m);
    for (auto& v : t1) v = draw_word(prng, w);
    for (auto& v : t2) v = draw_word(prng, w);
    std::vector<std::vector<std::uint64_t>> y(zp.c, std::vector<std::uint64_t>(zp.ell));
    for (auto& yj : y) {
        for (auto& v : yj) v = draw_word(prng, w);
    }
    std::vector<PolyHash> f;
    if (w <= 32) {
        f.push_back(draw_poly(prng, 2, std::uint64_t{1} << w));
    } else {
        f.push_back(draw_poly(prng, 2, std::uint64_t{1} << 32));
        f.push_back(draw_poly(prng, 2, std::uint64_t{1} << (w - 32)));
    }
    return UniformSimDS(std::move(fam), std::move(t1), std::move(t2), std::move(y), std::move(f), w);
}

UniformityProbe uniformity_probe(const UniformSimParams& params, std::span<const Key> keys,
                                 std::uint64_t trials, std::uint64_t seed) {
    if (keys.empty() || keys.size() > 6) throw ParameterError("uniformity_probe: need 1..6 keys");
    if (params.w > 2) throw ParameterError("uniformity_probe: w must be <= 2");
    if (trials == 0) throw ParameterError("uniformity_probe: trials must be >= 1");
    UniformityProbe probe;
    probe.trials = trials;
    probe.cells = std::size_t{1} << (params.w * keys.size());
    probe.counts.assign(probe.cells, 0);
    const Prng root(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Prng prng = root.child(t);
        const UniformSimDS ds = build_ds(prng, params);
        std::size_t index = 0;
        for (Key x : keys) index = (index << params.w) | ds(x);
        ++probe.counts[index];
    }
    const auto chi = stats::chi_square_uniform(probe.counts);
    probe.chi_square = chi.statistic;
    probe.p_value = chi.p_value;
    return probe;
}

}  // namespace zhash
