#pragma once

// Brute-force reference implementations. Test-only: nothing in the library
// links against these.

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "zhash/gcuckoo.hpp"
#include "zhash/hypergraph.hpp"
#include "zhash/poly_hash.hpp"
#include "zhash/uniform_sim.hpp"
#include "zhash/zfamily.hpp"

namespace zhash::oracles {

struct OracleBudget {
    static constexpr std::size_t max_edges = 12;          // exhaustive subset searches
    static constexpr std::size_t max_matching_edges = 1000;
    static constexpr std::size_t max_keys = 10000;        // shadow models
};

class OracleRefusal : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Minimum number of edges to delete so that every component has at most
/// one cycle, by trying all edge subsets in order of size.
std::int64_t excess_bruteforce(const LabeledHypergraph& g);

/// Does some edge subset induce a component with cyclomatic number >= 2?
bool has_mog_bruteforce(const LabeledHypergraph& g);

/// Maximum matching edges -> incident vertices (Kuhn's augmenting paths);
/// true iff every edge is matched.
bool orientability_matching(const LabeledHypergraph& g);

/// 2-core by repeated full scans: drop any edge with a vertex of degree 1
/// until nothing changes. Returns the surviving edge ids.
std::vector<EdgeId> two_core_rescan(const LabeledHypergraph& g);

/// sum a_i x^i with arbitrary-precision integers, then mod p, then mod range.
std::uint64_t poly_eval_wide(std::span<const std::uint64_t> coefficients, Key x,
                             std::uint64_t range);

/// h_i(x) recomputed from the family's raw components with wide arithmetic.
std::vector<std::uint64_t> z_eval_direct(const ZFamily& fam, Key x);

/// d_T recomputed with std::set distinct counts.
std::uint64_t deficiency_recount(const ZFamily& fam, std::span<const Key> keys);

/// XOR of the constituent terms, each recomputed independently.
std::uint64_t uniform_eval_direct(const UniformSimDS& ds, Key x);

/// BFS distance from every cell to the nearest free cell in the cuckoo
/// allocation graph (cells -> the d-1 alternatives of their occupant).
/// Unreachable cells get UINT32_MAX. Index: j * m + i.
std::vector<std::uint32_t> free_distances(const GCuckooTable& table);

/// Reference dictionary for operation traces.
class ShadowDictionary {
public:
    bool insert(Key x);
    bool remove(Key x);
    [[nodiscard]] bool contains(Key x) const { return keys_.count(x) != 0; }
    [[nodiscard]] std::size_t size() const noexcept { return keys_.size(); }

private:
    std::set<Key> keys_;
};

}  // namespace zhash::oracles
