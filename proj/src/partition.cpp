#include "qmb/partition.hpp"

#include <algorithm>

namespace qmb {

Partition::Partition(std::size_t ground_size, std::vector<Bitset> parts)
    : n_(ground_size), parts_(std::move(parts)) {
    if (parts_.size() < 2)
        throw std::invalid_argument("partition needs at least two parts");
    Bitset seen(n_);
    std::size_t total = 0;
    for (const auto& part : parts_) {
        if (part.width() != n_)
            throw std::invalid_argument("part width does not match ground size");
        if (part.none())
            throw std::invalid_argument("empty part");
        if (part.intersects(seen))
            throw std::invalid_argument("parts are not disjoint");
        seen |= part;
        total += part.count();
    }
    if (total != n_)
        throw std::invalid_argument("parts do not cover the ground set");

    // Canonical order: ascending smallest member.
    std::sort(parts_.begin(), parts_.end(),
              [](const Bitset& a, const Bitset& b) { return a.lowest() < b.lowest(); });

    element_part_.assign(n_, -1);
    for (std::size_t pi = 0; pi < parts_.size(); ++pi)
        for (int e : parts_[pi].indices())
            element_part_[static_cast<std::size_t>(e)] = static_cast<int>(pi);
}

}  // namespace qmb
