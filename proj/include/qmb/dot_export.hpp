#pragma once

#include <string>

#include "qmb/compat.hpp"
#include "qmb/oracle.hpp"

namespace qmb {

/// Non-strong-compatibility graph in DOT; vertices named P1..Pm.
std::string nsc_to_dot(const PartitionSystem& system, const NscGraph& graph);

/// Explicit quasi-median graph in DOT; vertices named by their sorted
/// ground labels, or e<i> when unlabelled; edges carry the partition name.
std::string qm_graph_to_dot(const QuasiMedianGraph& graph, const PartitionSystem& system);

}  // namespace qmb
