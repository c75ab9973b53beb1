#pragma once

#include <cstdint>

#include "qmb/alignment.hpp"
#include "qmb/partition.hpp"

namespace qmb {

/// Parameters for seeded random partition systems used by the fuzz
/// corpus. `mode` constrains pairwise strong compatibility.
struct RandomSystemParams {
    int max_n = 7;
    int max_m = 6;
    int max_parts = 3;
    enum class Mode { any, compatible, incompatible } mode = Mode::any;
};

/// Deterministic per seed. For the constrained modes, candidates are
/// rejection-sampled until the pairwise property holds, so the resulting
/// m may be smaller than max_m.
PartitionSystem random_system(std::uint64_t seed, const RandomSystemParams& params = {});

/// Random alignment over the first `alphabet` letters of A,C,G,T,...
Alignment random_alignment(std::uint64_t seed, int rows, int cols, int alphabet);

}  // namespace qmb
