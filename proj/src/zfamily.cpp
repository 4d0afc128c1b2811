#include "zhash/zfamily.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zhash/detail/bytes.hpp"
#include "zhash/error.hpp"

namespace zhash {

void ZParams::validate() const {
    if (c < 1) throw ParameterError("ZParams: c must be >= 1");
    if (d < 2) throw ParameterError("ZParams: d must be >= 2");
    if (kappa < 2 || kappa > kMaxKappa || kappa % 2 != 0) {
        throw ParameterError("ZParams: kappa must be even and in [2, 64], got " +
                             std::to_string(kappa));
    }
    if (ell < 1) throw ParameterError("ZParams: ell must be >= 1");
    if (m < 1) throw ParameterError("ZParams: m must be >= 1");
}

std::uint64_t ell_from_delta(std::uint64_t n, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
    const double v = std::ceil(std::pow(static_cast<double>(n), delta) - 1e-9);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(v));
}

ZFamily::ZFamily(ZParams params, std::vector<PolyHash> f, std::vector<PolyHash> g,
                 std::vector<std::vector<std::uint64_t>> z)
    : params_(params), f_(std::move(f)), g_(std::move(g)), z_(std::move(z)) {
    params_.validate();
    if (f_.size() != params_.d || g_.size() != params_.c || z_.size() != params_.d) {
        throw ParameterError("ZFamily: component counts do not match (c, d)");
    }
    for (const auto& fi : f_) {
        if (fi.range() != params_.m) throw ParameterError("ZFamily: f range must be m");
    }
    for (const auto& gj : g_) {
        if (gj.range() != params_.ell) throw ParameterError("ZFamily: g range must be ell");
    }
    for (const auto& table : z_) {
        if (table.size() != params_.c * params_.ell) {
            throw ParameterError("ZFamily: z table must have c * ell entries");
        }
        for (auto v : table) {
            if (v >= params_.m) throw ParameterError("ZFamily: z entry out of range");
        }
    }
}

void ZFamily::eval_g(Key x, std::span<std::uint64_t> out) const {
    check_admissible(x);
    for (unsigned j = 0; j < params_.c; ++j) out[j] = g_[j].eval_unchecked(x);
}

void ZFamily::eval(Key x, std::span<std::uint64_t> out) const {
    check_admissible(x);
    const unsigned c = params_.c;
    const std::uint64_t m = params_.m;
    // c is small; the fixed buffer covers every practical configuration.
    std::uint64_t gbuf[32];
    std::vector<std::uint64_t> gheap;
    std::uint64_t* gv = gbuf;
    if (c > 32) {
        gheap.resize(c);
        gv = gheap.data();
    }
    for (unsigned j = 0; j < c; ++j) gv[j] = g_[j].eval_unchecked(x);
    for (unsigned i = 0; i < params_.d; ++i) {
        const auto& table = z_[i];
        // acc < m and every entry < m, so one subtraction per step suffices.
        std::uint64_t acc = f_[i].eval_unchecked(x);
        for (unsigned j = 0; j < c; ++j) {
            acc += table[j * params_.ell + gv[j]];
            if (acc >= m) acc -= m;
        }
        out[i] = acc;
    }
}

std::vector<std::uint64_t> ZFamily::eval(Key x) const {
    std::vector<std::uint64_t> out(params_.d);
    eval(x, out);
    return out;
}

std::uint64_t ZFamily::eval_one(Key x, unsigned i) const {
    if (i >= params_.d) throw ParameterError("eval_one: coordinate out of range");
    check_admissible(x);
    std::uint64_t acc = f_[i].eval_unchecked(x);
    for (unsigned j = 0; j < params_.c; ++j) {
        acc += z_[i][j * params_.ell + g_[j].eval_unchecked(x)];
        if (acc >= params_.m) acc -= params_.m;
    }
    return acc;
}

ZFamily draw_z(Prng& prng, const ZParams& params) {
    params.validate();
    std::vector<PolyHash> f;
    std::vector<PolyHash> g;
    f.reserve(params.d);
    g.reserve(params.c);
    for (unsigned i = 0; i < params.d; ++i) f.push_back(draw_poly(prng, params.kappa, params.m));
    for (unsigned j = 0; j < params.c; ++j) g.push_back(draw_poly(prng, params.kappa, params.ell));
    std::vector<std::vector<std::uint64_t>> z(params.d,
                                              std::vector<std::uint64_t>(params.c * params.ell));
    for (auto& table : z) {
        for (auto& v : table) v = prng.below(params.m);
    }
    return ZFamily(params, std::move(f), std::move(g), std::move(z));
}

const char* to_string(Deficiency cls) noexcept {
    switch (cls) {
        case Deficiency::good: return "good";
        case Deficiency::critical: return "critical";
        case Deficiency::bad: return "bad";
    }
    return "?";
}

DeficiencyReport classify_deficiency(const ZFamily& fam, std::span<const Key> keys) {
    const auto& p = fam.params();
    DeficiencyReport report;
    report.per_g_distinct.assign(p.c, 0);
    std::vector<std::uint64_t> values(keys.size());
    std::uint64_t best = p.k();
    for (unsigned j = 0; j < p.c; ++j) {
        for (std::size_t t = 0; t < keys.size(); ++t) values[t] = fam.g()[j](keys[t]);
        std::sort(values.begin(), values.end());
        const auto distinct =
            static_cast<std::uint64_t>(std::unique(values.begin(), values.end()) - values.begin());
        report.per_g_distinct[j] = distinct;
        best = std::max(best, distinct);
    }
    const std::uint64_t size = keys.size();
    report.d_T = size > best ? size - best : 0;
    if (report.d_T > p.k()) {
        report.cls = Deficiency::bad;
    } else if (report.d_T == p.k()) {
        report.cls = Deficiency::critical;
    } else {
        report.cls = Deficiency::good;
    }
    return report;
}

BadRateEstimate estimate_bad_rate(const ZParams& params, std::size_t t_size,
                                  std::uint64_t trials, std::uint64_t seed) {
    params.validate();
    if (trials == 0) throw ParameterError("estimate_bad_rate: trials must be >= 1");
    BadRateEstimate est;
    est.trials = trials;
    const Prng root(seed);
    std::vector<Key> keys;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Prng prng = root.child(t);
        keys.clear();
        while (keys.size() < t_size) {
            const Key x = prng.below(kPrime);
            if (std::find(keys.begin(), keys.end(), x) == keys.end()) keys.push_back(x);
        }
        const ZFamily fam = draw_z(prng, params);
        if (classify_deficiency(fam, keys).cls != Deficiency::good) ++est.not_good_strict;
    }
    est.rate = static_cast<double>(est.not_good_strict) / static_cast<double>(trials);
    const double ratio = static_cast<double>(t_size) * static_cast<double>(t_size) /
                         static_cast<double>(params.ell);
    est.bound = std::min(1.0, std::pow(ratio, static_cast<double>(params.c * params.k())));
    est.sigma = std::sqrt(est.bound * (1.0 - est.bound) / static_cast<double>(trials));
    return est;
}

namespace {
constexpr std::uint32_t kZFamilyVersion = 1;
}

std::vector<std::uint8_t> serialize(const ZFamily& fam) {
    detail::ByteWriter w;
    const auto& p = fam.params();
    w.magic("ZFAM");
    w.u32(kZFamilyVersion);
    w.u32(p.c);
    w.u32(p.d);
    w.u32(p.kappa);
    w.u64(p.ell);
    w.u64(p.m);
    for (const auto& fi : fam.f()) {
        for (auto a : fi.coefficients()) w.u64(a);
    }
    for (const auto& gj : fam.g()) {
        for (auto a : gj.coefficients()) w.u64(a);
    }
    for (unsigned i = 0; i < p.d; ++i) {
        for (auto v : fam.z(i)) w.u64(v);
    }
    return std::move(w).take();
}

ZFamily deserialize_zfamily(std::span<const std::uint8_t> blob) {
    detail::ByteReader r(blob);
    r.expect_magic("ZFAM");
    if (r.u32() != kZFamilyVersion) throw InputError("ZFamily blob: unsupported version");
    ZParams p;
    p.c = r.u32();
    p.d = r.u32();
    p.kappa = r.u32();
    p.ell = r.u64();
    p.m = r.u64();
    p.validate();
    // Size check before allocating anything proportional to the header.
    const unsigned __int128 words =
        static_cast<unsigned __int128>(p.d + p.c) * p.kappa +
        static_cast<unsigned __int128>(p.d) * p.c * p.ell;
    if (words * 8 != r.remaining()) throw InputError("ZFamily blob: size mismatch");
    auto read_poly = [&](std::uint64_t range) {
        std::vector<std::uint64_t> coeffs(p.kappa);
        for (auto& a : coeffs) a = r.u64();
        return PolyHash(std::move(coeffs), range);
    };
    std::vector<PolyHash> f;
    std::vector<PolyHash> g;
    for (unsigned i = 0; i < p.d; ++i) f.push_back(read_poly(p.m));
    for (unsigned j = 0; j < p.c; ++j) g.push_back(read_poly(p.ell));
    std::vector<std::vector<std::uint64_t>> z(p.d, std::vector<std::uint64_t>(p.c * p.ell));
    for (auto& table : z) {
        for (auto& v : table) v = r.u64();
    }
    return ZFamily(p, std::move(f), std::move(g), std::move(z));
}

}  // namespace zhash
