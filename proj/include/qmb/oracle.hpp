#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "qmb/compat.hpp"
#include "qmb/partition.hpp"

namespace qmb {

/// A choice of one part per partition of a system; a candidate vertex of
/// the explicit quasi-median graph. Part indices follow each partition's
/// canonical part order.
struct PMap {
    std::vector<std::uint16_t> parts;
    bool operator==(const PMap&) const = default;
    auto operator<=>(const PMap&) const = default;
};

struct PMapHash {
    std::size_t operator()(const PMap& v) const {
        std::size_t h = v.parts.size();
        for (auto p : v.parts) h = h * 0x9e3779b97f4a7c15ull + p + 1;
        return h;
    }
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The map pi: element x -> the PMap sending every partition to the part
/// containing x.
PMap pi_map(const PartitionSystem& system, int element);

/// Coordinate-wise quasi-median: picks v2's part where v2 and v3 agree,
/// v1's part otherwise. Not symmetric in its arguments.
PMap quasi_median(const PMap& v1, const PMap& v2, const PMap& v3);

/// Smallest superset of the seed closed under quasi-medians. Throws
/// BudgetExceeded when the closure grows past the vertex budget.
/// Result is sorted; independent of seed order.
std::vector<PMap> hull(const std::vector<PMap>& seed, std::size_t budget = 200000);

/// All PMaps satisfying the pairwise vertex condition: for every pair of
/// distinct strongly compatible partitions, the map picks the covering
/// part on at least one side. Equals hull(pi(X)). Enumerates the full
/// product space; throws BudgetExceeded when it is larger than budget.
std::vector<PMap> characterized_vertices(const PartitionSystem& system,
                                         std::size_t budget = 200000,
                                         Execution exec = Execution::serial);

/// The explicit quasi-median graph: vertices are the hull of pi(X), each
/// edge joins maps differing on exactly one partition and is labelled by
/// that partition.
struct QuasiMedianGraph {
    struct Edge {
        int u = -1, v = -1;
        int label = -1;  // partition id
    };
    std::vector<PMap> vertices;                         // sorted
    std::vector<Edge> edges;
    std::vector<std::vector<int>> labels;               // vertex -> ground elements with pi(x) = vertex
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbour, edge index)

    int vertex_of(const PMap& v) const;
};

/// Builds the labelled graph over a closed vertex set (a valid hull).
QuasiMedianGraph build_graph(std::vector<PMap> vertices, const PartitionSystem& system);

/// Hull of pi(X) plus build_graph. Vertices come from the pairwise
/// characterization; the hull/characterization equivalence is itself
/// tested separately.
QuasiMedianGraph oracle_graph(const PartitionSystem& system, std::size_t budget = 200000);

/// A block of the explicit graph together with the data mirrored by the
/// fast decomposition.
struct OracleBlock {
    std::vector<int> vertex_ids;
    std::vector<int> edge_ids;
    std::set<int> parts;           // edge labels
    std::vector<int> x_elements;   // sorted ground elements labelling block vertices
    std::vector<int> s_vertices;   // unlabelled cut vertices in the block (graph vertex ids)
};

struct OracleDecomposition {
    std::vector<OracleBlock> blocks;
    std::vector<char> is_cut_vertex;                 // per graph vertex
    std::vector<std::vector<int>> blocks_of_vertex;  // per graph vertex, block indices
};

/// Classical articulation-point / biconnected-component pass.
OracleDecomposition blocks_and_cut_vertices(const QuasiMedianGraph& g);

/// True iff every path from the labelled vertex of `element` to `vertex`
/// uses an edge of the block, i.e. the two are disconnected once the
/// block's edges are removed.
bool in_direction_of(const QuasiMedianGraph& g, const OracleBlock& block, int vertex,
                     int element);

/// Cut-vertex test via the auxiliary graph on partitions with an edge
/// {P,Q} whenever v(P) ∪ v(Q) != X: the vertex is a cut vertex iff that
/// graph is disconnected. Requires a non-empty system.
bool gv_cut_test(const QuasiMedianGraph& g, int vertex, const PartitionSystem& system);

/// The partitions of X(B) ∪ S(B) induced on a block by deleting, per
/// partition, the block edges it labels. Elements are returned in the
/// order: x_elements, then s_vertices; partitions follow the block's
/// sorted part ids.
std::vector<Partition> oracle_induced_partitions(const QuasiMedianGraph& g,
                                                 const OracleBlock& block);

}  // namespace qmb
