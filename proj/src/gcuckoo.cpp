#include "zhash/gcuckoo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zhash {

std::uint32_t default_max_label(LabelMode mode, std::size_t n) {
    const double log2n = std::log2(std::max<double>(4.0, static_cast<double>(n)));
    const double v = mode == LabelMode::khosla ? 4.0 * log2n : std::log2(log2n) + 10.0;
    return static_cast<std::uint32_t>(std::floor(v));
}

GCuckooTable::GCuckooTable(AnyHasher hasher, LabelMode mode, std::uint32_t max_label)
    : hasher_(std::move(hasher)), mode_(mode), label_cap_(max_label) {
    if (hasher_.d() < 2) throw ParameterError("GCuckooTable: needs d >= 2");
    if (label_cap_ < 1) throw ParameterError("GCuckooTable: max_label must be >= 1");
    cells_.assign(hasher_.d() * hasher_.range(), std::nullopt);
    labels_.assign(cells_.size(), 0);
}

LabeledInsertResult GCuckooTable::insert(Key x, const MoveObserver& observer) {
    if (lookup(x)) throw InputError("GCuckooTable::insert: key already present");
    const unsigned d = hasher_.d();
    const std::uint64_t m = hasher_.range();
    std::vector<std::uint64_t> hv(d);
    LabeledInsertResult result{LabeledOutcome::ok, 0, std::nullopt};
    Key hand = x;
    while (true) {
        hasher_.eval(hand, hv);
        unsigned best = 0;
        for (unsigned j = 1; j < d; ++j) {
            if (labels_[j * m + hv[j]] < labels_[best * m + hv[best]]) best = j;
        }
        const std::size_t cell = best * m + hv[best];
        ++result.moves;
        if (!cells_[cell]) {
            cells_[cell] = hand;
            ++size_;
            if (observer) observer(*this);
            return result;
        }
        std::swap(hand, *cells_[cell]);
        if (mode_ == LabelMode::khosla) {
            std::uint32_t others = std::numeric_limits<std::uint32_t>::max();
            for (unsigned j = 0; j < d; ++j) {
                if (j != best) others = std::min(others, labels_[j * m + hv[j]]);
            }
            labels_[cell] = others + 1;
        } else {
            labels_[cell] += 1;
        }
        if (observer) observer(*this);
        if (labels_[cell] >= label_cap_) {
            // Either x or a displaced key is out; the stored count is unchanged.
            result.outcome = LabeledOutcome::aborted;
            result.homeless = hand;
            return result;
        }
    }
}

bool GCuckooTable::lookup(Key x) const {
    std::vector<std::uint64_t> hv(hasher_.d());
    hasher_.eval(x, hv);
    for (unsigned j = 0; j < hasher_.d(); ++j) {
        if (cells_[j * m() + hv[j]] == x) return true;
    }
    return false;
}

std::uint32_t GCuckooTable::max_label() const noexcept {
    return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

bool GCuckooTable::check_invariants() const {
    std::vector<std::uint64_t> hv(hasher_.d());
    std::size_t count = 0;
    for (unsigned j = 0; j < hasher_.d(); ++j) {
        for (std::uint64_t i = 0; i < m(); ++i) {
            const auto& occ = cells_[j * m() + i];
            if (!occ) continue;
            hasher_.eval(*occ, hv);
            if (hv[j] != i) return false;
            ++count;
        }
    }
    return count == size_;
}

}  // namespace zhash
