#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "qmb/alignment.hpp"
#include "qmb/partition.hpp"

namespace qmb::test {

inline std::string data_path(const std::string& file) {
    return std::string(QMB_TEST_DATA_DIR) + "/" + file;
}

inline Alignment load_fig1(AlignmentFormat format = AlignmentFormat::fasta) {
    const std::string file = format == AlignmentFormat::fasta ? "fig1.fasta" : "fig1.tsv";
    std::ifstream in(data_path(file));
    return parse_alignment(in, format);
}

inline PartitionSystem fig1_system() {
    return alignment_to_partition_system(load_fig1()).first;
}

/// Builds a partition from 1-based element lists, matching the paper-style
/// ground naming s1..sn.
inline Partition make_partition(std::size_t n, const std::vector<std::vector<int>>& parts) {
    std::vector<Bitset> bits;
    for (const auto& part : parts) {
        Bitset b(n);
        for (int e : part) b.set(static_cast<std::size_t>(e - 1));
        bits.push_back(std::move(b));
    }
    return Partition(n, std::move(bits));
}

inline Bitset make_set(std::size_t n, const std::vector<int>& elements) {
    Bitset b(n);
    for (int e : elements) b.set(static_cast<std::size_t>(e - 1));
    return b;
}

}  // namespace qmb::test
