#pragma once

#include <json.hpp>

#include "qmb/alignment.hpp"
#include "qmb/decomposition.hpp"

namespace qmb {

/// Stable JSON document for a finished decomposition: ground set,
/// partitions with multiplicity and provenance, blocks with X(B), S(B),
/// directions and induced partitions, extra vertices with incidences.
/// Extra vertices carry synthetic names "e1", "e2", ... in creation
/// order; all sets are emitted sorted, so output is byte-stable.
nlohmann::json decomposition_to_json(const DecompositionState& state,
                                     const RecodingReport* report = nullptr);

}  // namespace qmb
