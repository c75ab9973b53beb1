#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmb/bitset.hpp"

namespace qmb {

/// The ground set: an ordered list of distinct element names
/// (typically sequence identifiers). Indices 0..n-1 are stable
/// for the lifetime of a dataset.
class GroundSet {
public:
    GroundSet() = default;

    explicit GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw std::invalid_argument("ground set must be non-empty");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw std::invalid_argument("empty element name");
            auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
            if (!fresh) throw std::invalid_argument("duplicate element name: " + names_[i]);
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a named element, or -1 when absent.
    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

/// A partition of the ground set into at least two disjoint, non-empty
/// parts covering every element. Parts are kept in canonical order
/// (ascending smallest member), so two partitions built from permuted
/// part lists compare equal.
class Partition {
public:
    Partition(std::size_t ground_size, std::vector<Bitset> parts);

    std::size_t ground_size() const { return n_; }
    std::size_t part_count() const { return parts_.size(); }
    const std::vector<Bitset>& parts() const { return parts_; }

    /// Index of the unique part containing the element.
    int part_index_of(std::size_t element) const {
        if (element >= n_) throw std::out_of_range("element out of range");
        return element_part_[element];
    }

    /// The unique part containing the element.
    const Bitset& part_of(std::size_t element) const {
        return parts_[static_cast<std::size_t>(part_index_of(element))];
    }

    bool operator==(const Partition& o) const {
        return n_ == o.n_ && parts_ == o.parts_;
    }

    std::size_t hash() const {
        std::size_t h = n_;
        for (const auto& p : parts_) h = h * 0x100000001b3ull ^ p.hash();
        return h;
    }

private:
    std::size_t n_ = 0;
    std::vector<Bitset> parts_;
    std::vector<int> element_part_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const { return p.hash(); }
};

/// An ordered collection of distinct partitions of one ground set,
/// with per-partition multiplicity and source-column provenance.
/// Partition ids are dense indices 0..m-1 in insertion order.
class PartitionSystem {
public:
    explicit PartitionSystem(GroundSet ground) : ground_(std::move(ground)) {}

    /// Adds a partition, merging with an equal existing one (multiplicity
    /// is incremented). Returns the partition id.
    int add(Partition p, int source_column = -1) {
        if (p.ground_size() != ground_.size())
            throw std::invalid_argument("partition ground size does not match system");
        auto it = index_.find(p);
        int id;
        if (it != index_.end()) {
            id = it->second;
            multiplicity_[static_cast<std::size_t>(id)] += 1;
        } else {
            id = static_cast<int>(partitions_.size());
            index_.emplace(p, id);
            partitions_.push_back(std::move(p));
            multiplicity_.push_back(1);
            sources_.emplace_back();
        }
        if (source_column >= 0) sources_[static_cast<std::size_t>(id)].push_back(source_column);
        return id;
    }

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return partitions_.size(); }
    const Partition& partition(int id) const { return partitions_.at(static_cast<std::size_t>(id)); }
    int multiplicity(int id) const { return multiplicity_.at(static_cast<std::size_t>(id)); }
    const std::vector<int>& source_columns(int id) const { return sources_.at(static_cast<std::size_t>(id)); }

private:
    GroundSet ground_;
    std::vector<Partition> partitions_;
    std::vector<int> multiplicity_;
    std::vector<std::vector<int>> sources_;
    std::unordered_map<Partition, int, PartitionHash> index_;
};

}  // namespace qmb
