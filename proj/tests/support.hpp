#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "zhash/hypergraph.hpp"
#include "zhash/prng.hpp"
#include "zhash/zfamily.hpp"

namespace zhash::test {

/// n distinct admissible keys.
inline std::vector<Key> random_keys(Prng& prng, std::size_t n) {
    std::vector<Key> keys;
    std::unordered_set<Key> seen;
    while (keys.size() < n) {
        const Key x = prng.below(kPrime);
        if (seen.insert(x).second) keys.push_back(x);
    }
    return keys;
}

/// Random d-uniform multi-hypergraph with the given edge count over m
/// vertices per part.
inline LabeledHypergraph random_graph(Prng& prng, unsigned d, std::uint64_t m, std::size_t edges) {
    LabeledHypergraph g(d, m);
    std::vector<std::uint64_t> e(d);
    for (std::size_t i = 0; i < edges; ++i) {
        for (auto& v : e) v = prng.below(m);
        g.add_edge(e);
    }
    return g;
}

/// Constant polynomial with value v.
inline PolyHash constant(std::uint64_t v, std::uint64_t range) { return PolyHash({v}, range); }

/// Family whose g_1 values on the listed keys are prescribed. Uses g_1 = the
/// identity polynomial, so key x has g-value x mod ell.
inline ZFamily identity_g_family(unsigned kappa, std::uint64_t ell, std::uint64_t m) {
    ZParams p{1, 2, kappa, ell, m};
    std::vector<PolyHash> f(2, constant(0, m));
    std::vector<PolyHash> g{PolyHash({0, 1}, ell)};
    std::vector<std::vector<std::uint64_t>> z(2, std::vector<std::uint64_t>(ell, 0));
    return ZFamily(p, f, g, z);
}

}  // namespace zhash::test
