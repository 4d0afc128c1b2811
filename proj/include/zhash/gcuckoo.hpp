#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "zhash/hasher.hpp"
#include "zhash/hypergraph.hpp"

namespace zhash {

enum class LabelMode {
    khosla,    // label = lower bound on eviction distance to a free cell
    eppstein,  // label = number of overwrites of the cell
};

/// 4 log2 n for Khosla, log2 log2 n + 10 for Eppstein.
std::uint32_t default_max_label(LabelMode mode, std::size_t n);

enum class LabeledOutcome { ok, aborted };

struct LabeledInsertResult {
    LabeledOutcome outcome;
    std::size_t moves = 0;        // cell writes performed
    std::optional<Key> homeless;  // key in hand when aborted
};

/// Generalized cuckoo hashing with d >= 2 tables of m cells and
/// labeling-based insertion.
///
/// Each cell (j, i) holds at most one key and a label l(j, i), initially 0.
/// A key goes to the cell of smallest label among its d choices (smallest j
/// on ties); if that cell is occupied the occupant is evicted, the label is
/// updated per mode, and the occupant is inserted the same way. Insertion
/// aborts once a label reaches max_label.
class GCuckooTable {
public:
    GCuckooTable(AnyHasher hasher, LabelMode mode, std::uint32_t max_label);

    /// Observer invoked after every cell write.
    using MoveObserver = std::function<void(const GCuckooTable&)>;

    LabeledInsertResult insert(Key x, const MoveObserver& observer = {});
    [[nodiscard]] bool lookup(Key x) const;

    [[nodiscard]] unsigned d() const noexcept { return hasher_.d(); }
    [[nodiscard]] std::uint64_t m() const noexcept { return hasher_.range(); }
    [[nodiscard]] LabelMode mode() const noexcept { return mode_; }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    [[nodiscard]] const std::optional<Key>& occupant(unsigned j, std::uint64_t i) const noexcept {
        return cells_[j * m() + i];
    }
    [[nodiscard]] std::uint32_t label(unsigned j, std::uint64_t i) const noexcept {
        return labels_[j * m() + i];
    }
    [[nodiscard]] std::uint32_t max_label() const noexcept;

    /// Cell choices (h_1(x), ..., h_d(x)).
    void choices(Key x, std::span<std::uint64_t> out) const { hasher_.eval(x, out); }

    /// Every occupant of (j, i) hashes to i under h_j.
    [[nodiscard]] bool check_invariants() const;

    /// Test hook: overwrite a label.
    void set_label(unsigned j, std::uint64_t i, std::uint32_t value) { labels_[j * m() + i] = value; }

private:
    AnyHasher hasher_;
    LabelMode mode_;
    std::uint32_t label_cap_;
    std::vector<std::optional<Key>> cells_;
    std::vector<std::uint32_t> labels_;
    std::size_t size_ = 0;
};

/// True iff G(S, h) is 1-orientable, i.e. S fits with one key per cell.
template <HashSequence H>
bool static_suitable(std::span<const Key> keys, const H& hasher) {
    return one_orientation(build(hasher, keys)).has_value();
}

}  // namespace zhash
