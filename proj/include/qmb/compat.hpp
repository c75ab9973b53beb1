#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qmb/partition.hpp"

namespace qmb {

/// Whether a kernel runs single-threaded or on the OpenMP thread pool.
/// Both produce identical results; the serial path is the reference.
enum class Execution { serial, parallel };

/// Result of a strong-compatibility check between partitions P and Q.
/// For distinct strongly compatible partitions the covering pair is
/// unique: b_pq is the part of P and b_qp the part of Q with
/// b_pq ∪ b_qp = X. For P == Q the flag is set and the B-sets absent.
struct CompatibilityResult {
    bool compatible = false;
    std::optional<Bitset> b_pq;
    std::optional<Bitset> b_qp;
};

/// Strong compatibility: P == Q, or some part A of P and B of Q cover X.
/// Scans all part pairs; O(k1 * k2 * n) bit operations.
CompatibilityResult strongly_compatible(const Partition& p, const Partition& q);

/// Diagnostic for the B-set identity: given distinct P, Q not strongly
/// compatible and R strongly compatible with both, returns whether
/// B(R,P) == B(R,Q). Always true on valid inputs; preconditions are
/// checked and violations throw std::invalid_argument.
bool b_equal_check(const Partition& p, const Partition& q, const Partition& r);

/// Graph on partition ids with an edge for every pair that is not
/// strongly compatible.
struct NscGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted
};

NscGraph nsc_graph(const PartitionSystem& system, Execution exec = Execution::parallel);

/// Connected components of the graph, each sorted ascending, the list
/// ordered by smallest member.
std::vector<std::vector<int>> nsc_components(const NscGraph& graph);

}  // namespace qmb
