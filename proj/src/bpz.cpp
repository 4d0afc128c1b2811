#include "zhash/bpz.hpp"

#include <algorithm>
#include <cmath>

#include "zhash/detail/bytes.hpp"
#include "zhash/error.hpp"
#include "zhash/hypergraph.hpp"

namespace zhash {

Bpz::Bpz(ZFamily fam, std::vector<bool> bit1, std::vector<bool> bit2)
    : fam_(std::move(fam)), bit1_(std::move(bit1)), bit2_(std::move(bit2)) {
    if (fam_.d() != 2) throw ParameterError("Bpz: needs a hash pair (d = 2)");
    if (bit1_.size() != fam_.range() || bit2_.size() != fam_.range()) {
        throw ParameterError("Bpz: bit arrays must have length m");
    }
}

std::uint64_t Bpz::operator()(Key x) const {
    std::uint64_t hv[2];
    fam_.eval(x, hv);
    return (bit1_[hv[0]] != bit2_[hv[1]]) ? m() + hv[1] : hv[0];
}

MphfBuild build_mphf(Prng& prng, std::span<const Key> keys, const MphfParams& params) {
    if (keys.empty()) throw ParameterError("build_mphf: S must be nonempty");
    if (params.epsilon < 0.08) throw ParameterError("build_mphf: epsilon must be >= 0.08");
    if (params.max_attempts < 1) throw ParameterError("build_mphf: max_attempts must be >= 1");
    const std::size_t n = keys.size();
    ZParams zp;
    zp.c = params.c;
    zp.d = 2;
    zp.kappa = 2;
    zp.m = static_cast<std::uint64_t>(std::ceil((1.0 + params.epsilon) * static_cast<double>(n) - 1e-9));
    zp.ell = ell_from_delta(n, params.delta);

    for (unsigned attempt = 1; attempt <= params.max_attempts; ++attempt) {
        ZFamily fam = draw_z(prng, zp);
        const LabeledHypergraph g = build(fam, keys);
        const PeelResult peel = peel_2core(g);
        if (!peel.core_empty()) continue;

        const std::uint64_t m = zp.m;
        std::vector<bool> bit1(m, false), bit2(m, false);
        std::vector<std::uint64_t> assignment(n);
        // Reverse peel order: the peel vertex of each edge is untouched by
        // every edge handled before it here.
        for (auto it = peel.order.rbegin(); it != peel.order.rend(); ++it) {
            auto vs = g.edge(it->edge);
            const std::uint64_t a = g.local_of(vs[0]);
            const std::uint64_t b = g.local_of(vs[1]);
            if (g.part_of(it->vertex) == 0) {
                bit1[a] = bit2[b];  // xor 0 selects side 1
                assignment[it->edge] = a;
            } else {
                bit2[b] = !bit1[a];  // xor 1 selects side 2
                assignment[it->edge] = m + b;
            }
        }
        return {Bpz(std::move(fam), std::move(bit1), std::move(bit2)), attempt,
                std::move(assignment)};
    }
    throw ConstructionError("build_mphf: no acyclic graph within the attempt cap");
}

AcyclicBounds acyclic_prob_bounds(double epsilon) {
    if (!(epsilon > 0.0)) throw DomainError("acyclic_prob_bounds: epsilon must be > 0");
    const double q = 1.0 / (1.0 + epsilon);
    const double inner = 1.0 - q * q;
    return {std::sqrt(inner), 1.0 + 0.5 * std::log(inner)};
}

namespace {

void put_bits(detail::ByteWriter& w, const std::vector<bool>& bits) {
    std::vector<std::uint8_t> packed((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) packed[i / 8] |= static_cast<std::uint8_t>(1U << (i % 8));
    }
    w.bytes(packed);
}

std::vector<bool> get_bits(detail::ByteReader& r, std::uint64_t count) {
    auto packed = r.bytes((count + 7) / 8);
    std::vector<bool> bits(count);
    for (std::uint64_t i = 0; i < count; ++i) bits[i] = ((packed[i / 8] >> (i % 8)) & 1U) != 0;
    return bits;
}

}  // namespace

std::vector<std::uint8_t> serialize(const Bpz& ph) {
    detail::ByteWriter w;
    w.magic("BPZ1");
    const auto fam_blob = serialize(ph.family());
    w.u64(fam_blob.size());
    w.bytes(fam_blob);
    w.u64(ph.m());
    put_bits(w, ph.bit1());
    put_bits(w, ph.bit2());
    return std::move(w).take();
}

Bpz deserialize_bpz(std::span<const std::uint8_t> blob) {
    detail::ByteReader r(blob);
    r.expect_magic("BPZ1");
    const std::uint64_t fam_len = r.u64();
    if (fam_len > r.remaining()) throw InputError("Bpz blob: truncated family");
    ZFamily fam = deserialize_zfamily(r.bytes(fam_len));
    const std::uint64_t m = r.u64();
    if (m != fam.range()) throw InputError("Bpz blob: m does not match the family");
    auto bit1 = get_bits(r, m);
    auto bit2 = get_bits(r, m);
    if (!r.at_end()) throw InputError("Bpz blob: trailing bytes");
    return Bpz(std::move(fam), std::move(bit1), std::move(bit2));
}

}  // namespace zhash
