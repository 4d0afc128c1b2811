#include "zhash/cuckoo.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace zhash {

std::size_t default_max_loop(std::size_t n, double epsilon) {
    if (!(epsilon > 0.0)) throw ParameterError("default_max_loop: epsilon must be > 0");
    const double logn = std::log(std::max<double>(2.0, static_cast<double>(n)));
    return static_cast<std::size_t>(std::ceil(3.0 * logn / std::log1p(epsilon))) + 16;
}

CuckooTable::CuckooTable(AnyHasher hasher, std::size_t stash_capacity, std::size_t max_loop)
    : hasher_(std::move(hasher)), stash_capacity_(stash_capacity), max_loop_(max_loop) {
    if (hasher_.d() != 2) throw ParameterError("CuckooTable: needs a hash pair (d = 2)");
    for (auto& t : tables_) t.assign(hasher_.range(), std::nullopt);
}

std::pair<std::uint64_t, std::uint64_t> CuckooTable::cells(Key x) const {
    std::uint64_t hv[2];
    hasher_.eval(x, hv);
    return {hv[0], hv[1]};
}

InsertResult CuckooTable::insert(Key x) {
    if (lookup(x)) throw InputError("CuckooTable::insert: key already present");
    Key hand = x;
    unsigned side = 0;
    for (std::size_t step = 0; step <= max_loop_; ++step) {
        const auto [c0, c1] = cells(hand);
        auto& slot = tables_[side][side == 0 ? c0 : c1];
        if (!slot) {
            slot = hand;
            ++size_;
            return {InsertOutcome::placed, std::nullopt};
        }
        std::swap(hand, *slot);
        side ^= 1U;
    }
    if (stash_.size() < stash_capacity_) {
        stash_.push_back(hand);
        ++size_;
        return {InsertOutcome::placed_via_stash, std::nullopt};
    }
    // Either x or a displaced key is out; the stored count is unchanged.
    return {InsertOutcome::rehash_needed, hand};
}

bool CuckooTable::lookup(Key x) const {
    const auto [c0, c1] = cells(x);
    if (tables_[0][c0] == x || tables_[1][c1] == x) return true;
    return std::find(stash_.begin(), stash_.end(), x) != stash_.end();
}

bool CuckooTable::remove(Key x) {
    const auto [c0, c1] = cells(x);
    for (auto* slot : {&tables_[0][c0], &tables_[1][c1]}) {
        if (*slot == x) {
            slot->reset();
            --size_;
            return true;
        }
    }
    if (auto it = std::find(stash_.begin(), stash_.end(), x); it != stash_.end()) {
        stash_.erase(it);
        --size_;
        return true;
    }
    return false;
}

bool CuckooTable::check_invariants() const {
    if (stash_.size() > stash_capacity_) return false;
    std::unordered_set<Key> seen;
    std::size_t count = 0;
    for (unsigned side = 0; side < 2; ++side) {
        for (std::uint64_t i = 0; i < tables_[side].size(); ++i) {
            const auto& slot = tables_[side][i];
            if (!slot) continue;
            const auto [c0, c1] = cells(*slot);
            if ((side == 0 ? c0 : c1) != i) return false;
            if (!seen.insert(*slot).second) return false;
            ++count;
        }
    }
    for (Key k : stash_) {
        if (!seen.insert(k).second) return false;
        ++count;
    }
    return count == size_;
}

}  // namespace zhash
