#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zhash/hasher.hpp"
#include "zhash/hypergraph.hpp"

namespace zhash {

/// ceil(3 * log_{1+eps} n) + 16.
std::size_t default_max_loop(std::size_t n, double epsilon);

enum class InsertOutcome { placed, placed_via_stash, rehash_needed };

struct InsertResult {
    InsertOutcome outcome;
    /// Set when outcome == rehash_needed: the key left without a slot. It
    /// need not be the key passed to insert().
    std::optional<Key> homeless;
};

/// Two-table cuckoo hashing with a stash of capacity s.
///
/// Insertion places the key in T1, evicting the occupant to its T2 cell, and
/// so on alternately. After max_loop displacements the key in hand goes to
/// the stash; if the stash is full the caller must rehash.
class CuckooTable {
public:
    CuckooTable(AnyHasher hasher, std::size_t stash_capacity, std::size_t max_loop);

    InsertResult insert(Key x);
    [[nodiscard]] bool lookup(Key x) const;
    bool remove(Key x);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::uint64_t m() const noexcept { return hasher_.range(); }
    [[nodiscard]] std::span<const std::optional<Key>> table(unsigned i) const noexcept {
        return tables_[i];
    }
    [[nodiscard]] std::span<const Key> stash() const noexcept { return stash_; }
    [[nodiscard]] std::size_t stash_capacity() const noexcept { return stash_capacity_; }

    /// Full scan of the placement invariants: every key sits in its own cell
    /// or in the stash, no key twice, stash within capacity.
    [[nodiscard]] bool check_invariants() const;

private:
    std::pair<std::uint64_t, std::uint64_t> cells(Key x) const;

    AnyHasher hasher_;
    std::size_t stash_capacity_;
    std::size_t max_loop_;
    std::vector<std::optional<Key>> tables_[2];
    std::vector<Key> stash_;
    std::size_t size_ = 0;
};

/// True iff ex(G(S, h1, h2)) <= s.
template <HashSequence H>
bool suitable(std::span<const Key> keys, const H& hasher, std::size_t s) {
    if (hasher.d() != 2) throw ParameterError("suitable: needs d = 2");
    return excess(build(hasher, keys)) <= static_cast<std::int64_t>(s);
}

}  // namespace zhash
