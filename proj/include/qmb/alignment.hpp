#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmb/partition.hpp"

namespace qmb {

/// A multiple sequence alignment: named rows of equal length over an
/// arbitrary alphabet. Characters are case-folded to upper case on parse.
struct Alignment {
    std::vector<std::string> names;
    std::vector<std::string> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t length() const { return rows.empty() ? 0 : rows.front().size(); }
};

enum class AlignmentFormat { fasta, table };

/// How to treat gap/unknown characters ('-', '.', '?') when recoding:
/// as ordinary alphabet letters, or by dropping any column containing one.
enum class GapPolicy { letter, drop_column };

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
};

/// FASTA: '>'-headers, sequence lines concatenated, whitespace ignored.
/// Table: one row per line, name<TAB>sequence.
Alignment parse_alignment(std::istream& in, AlignmentFormat format);

/// Bookkeeping from recoding: which columns survived, which were dropped,
/// and which columns merged into each partition.
struct RecodingReport {
    std::vector<int> kept_columns;
    std::vector<int> dropped_constant_columns;
    std::vector<int> dropped_gap_columns;  // only under GapPolicy::drop_column
    std::map<int, std::vector<int>> column_groups;  // partition id -> source columns
};

/// One partition per kept non-constant column, grouping rows that share
/// the column character; equal columns merge with multiplicity kept.
std::pair<PartitionSystem, RecodingReport>
alignment_to_partition_system(const Alignment& a, GapPolicy policy = GapPolicy::letter);

}  // namespace qmb
