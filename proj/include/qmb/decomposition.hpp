#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qmb/compat.hpp"
#include "qmb/partition.hpp"

namespace qmb {

using BlockId = int;
using ExtraId = int;

/// One block B of the quasi-median graph, represented without the graph:
/// the ground elements labelling its vertices (X(B)), the unlabelled cut
/// vertices it contains (S(B)), the partitions labelling its edges, and
/// for each extra vertex v a direction element x(v,B) — a ground element
/// every path from which to v uses an edge of B.
struct BlockRecord {
    BlockId id = -1;
    Bitset members_x;                    // X(B)
    std::set<ExtraId> members_s;         // S(B)
    std::set<int> parts;                 // partition ids
    std::map<ExtraId, int> directions;   // v -> ground element index, x(v,B)
};

/// An unlabelled cut vertex shared by two or more blocks.
struct ExtraVertex {
    ExtraId id = -1;
    std::set<BlockId> incident_blocks;   // B(v)
};

/// Result of checking a candidate partition P against one block:
/// compatible iff every partition of the block is strongly compatible
/// with P. When compatible, restriction = ⋂ B(Q,P) over the block's
/// partitions (what the caller intersects into the new block's X), and
/// block_side = the part B(P,Q) of P, identical for every Q in the block.
struct BlockCompatibility {
    bool compatible = false;
    Bitset restriction;
    Bitset block_side;
};

/// Element of an induced ground set: either a ground element or an
/// extra vertex.
struct InducedElement {
    bool is_extra = false;
    int index = -1;  // ground element index, or ExtraId
    bool operator==(const InducedElement&) const = default;
};

/// The per-block partition system: each partition of the block restricted
/// to X(B) ∪ S(B), with every extra vertex placed via its direction
/// element into a neighbouring block. The quasi-median graph of this
/// system is isomorphic to the block.
struct InducedSystem {
    BlockId block = -1;
    std::vector<InducedElement> elements;       // X(B) ascending, then extras by id
    std::vector<int> partition_ids;             // original ids, ascending
    std::vector<Partition> partitions;          // over `elements` indices
};

/// The block decomposition of the quasi-median graph of a growing
/// partition system, maintained incrementally one partition at a time.
/// Single-writer; immutable once construction is complete.
class DecompositionState {
public:
    explicit DecompositionState(const PartitionSystem& system) : system_(&system) {}

    /// Adds one unprocessed partition and restores all invariants
    /// (the incremental step; blocks incompatible with the new partition
    /// are merged into the block created for it).
    void add_partition(int partition_id);

    BlockCompatibility is_compatible(int partition_id, const BlockRecord& block) const;

    const PartitionSystem& system() const { return *system_; }
    const std::map<BlockId, BlockRecord>& blocks() const { return blocks_; }
    const std::map<ExtraId, ExtraVertex>& extra_vertices() const { return extras_; }
    const std::vector<int>& processed() const { return processed_; }

    InducedSystem induced_partitions(BlockId block) const;

    /// Structural self-check: block/extra cross-indices agree, X∪S and
    /// part sets non-empty, processed partitions partitioned by blocks.
    void check_invariants() const;

private:
    std::optional<int> choose_direction(ExtraId v, const BlockRecord& b) const;
    int attach_extra(ExtraId v, BlockId block);

    const PartitionSystem* system_;
    std::map<BlockId, BlockRecord> blocks_;
    std::map<ExtraId, ExtraVertex> extras_;
    std::vector<int> processed_;
    std::set<int> processed_set_;
    BlockId next_block_ = 0;
    ExtraId next_extra_ = 0;
};

/// Folds add_partition over the distinct partitions in ascending id order.
DecompositionState decompose(const PartitionSystem& system);

/// Same, with an explicit insertion order (a permutation of 0..m-1).
DecompositionState decompose(const PartitionSystem& system, const std::vector<int>& order);

}  // namespace qmb
