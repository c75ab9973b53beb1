#pragma once

#include <string>
#include <vector>

#include "qmb/decomposition.hpp"
#include "qmb/oracle.hpp"

namespace qmb {

/// Canonical, name-free view of one block: partition ids, ground
/// elements, extra vertices keyed by the partition sets of their incident
/// blocks, and the induced partitions with extras renamed canonically
/// (token n+j = j-th extra in key order). Two decompositions are equal up
/// to extra-vertex renaming iff their canonical forms are equal.
struct CanonicalBlock {
    std::vector<int> parts;
    std::vector<int> x_elements;
    std::vector<std::vector<std::vector<int>>> extras;            // sorted keys
    std::vector<std::vector<std::vector<int>>> induced;           // per partition: sorted parts of tokens
    auto operator<=>(const CanonicalBlock&) const = default;
};

struct CanonicalDecomposition {
    std::vector<CanonicalBlock> blocks;  // sorted by parts
    bool operator==(const CanonicalDecomposition&) const = default;
};

CanonicalDecomposition canonicalize(const DecompositionState& state);
CanonicalDecomposition canonicalize(const QuasiMedianGraph& graph,
                                    const OracleDecomposition& oracle,
                                    std::size_t ground_size);

/// Human-readable structural difference; empty when equal.
std::string structural_diff(const CanonicalDecomposition& fast,
                            const CanonicalDecomposition& oracle);

struct MatchReport {
    bool match = false;
    std::string details;
};

/// Full equivalence check of the fast decomposition against the explicit
/// graph: canonical block records, direction-element soundness (path
/// predicate on the graph), and per-block isomorphism of the induced
/// systems' quasi-median graphs with the graph's blocks.
MatchReport verify_against_oracle(const PartitionSystem& system, std::size_t budget = 200000);

}  // namespace qmb
