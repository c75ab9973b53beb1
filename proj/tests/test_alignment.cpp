#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "helpers.hpp"

using namespace qmb;
using namespace qmb::test;

TEST_CASE("fasta parsing") {
    const auto a = load_fig1();
    CHECK(a.row_count() == 10);
    CHECK(a.length() == 12);
    CHECK(a.names.front() == "s1");
    CHECK(a.rows.front() == "GTATCAGTATAT");

    std::istringstream one(">a\nacgt\n");
    const auto single = parse_alignment(one, AlignmentFormat::fasta);
    CHECK(single.row_count() == 1);
    CHECK(single.length() == 4);
    CHECK(single.rows.front() == "ACGT");  // case folded

    std::istringstream multiline(">a\nAC\nGT\n>b\nACGT\n");
    CHECK(parse_alignment(multiline, AlignmentFormat::fasta).rows.front() == "ACGT");
}

TEST_CASE("parse errors carry line information") {
    std::istringstream ragged(">a\nACGT\n>b\nAC\n");
    CHECK_THROWS_AS(parse_alignment(ragged, AlignmentFormat::fasta), ParseError);

    std::istringstream dup(">a\nAC\n>a\nGT\n");
    CHECK_THROWS_AS(parse_alignment(dup, AlignmentFormat::fasta), ParseError);

    std::istringstream empty("");
    CHECK_THROWS_AS(parse_alignment(empty, AlignmentFormat::fasta), ParseError);

    std::istringstream headerless("ACGT\n");
    CHECK_THROWS_AS(parse_alignment(headerless, AlignmentFormat::fasta), ParseError);

    std::istringstream no_tab("a ACGT\n");
    CHECK_THROWS_AS(parse_alignment(no_tab, AlignmentFormat::table), ParseError);
}

TEST_CASE("table format matches fasta") {
    const auto a = load_fig1(AlignmentFormat::fasta);
    const auto b = load_fig1(AlignmentFormat::table);
    CHECK(a.names == b.names);
    CHECK(a.rows == b.rows);
}

TEST_CASE("recoding the worked alignment") {
    const auto [system, report] = alignment_to_partition_system(load_fig1());
    REQUIRE(system.size() == 12);
    for (std::size_t i = 0; i < 12; ++i) CHECK(system.multiplicity(static_cast<int>(i)) == 1);
    CHECK(report.kept_columns.size() == 12);
    CHECK(report.dropped_constant_columns.empty());

    CHECK(system.partition(0) == make_partition(10, {{1, 2, 7, 8}, {3, 4, 5, 6, 9, 10}}));
    CHECK(system.partition(5) == make_partition(10, {{1, 2, 3, 4, 7, 8, 9}, {5}, {6, 10}}));
    CHECK(system.partition(6).part_of(5) == make_set(10, {1, 2, 5, 6, 7, 8, 10}));

    for (std::size_t i = 0; i < system.size(); ++i) {
        const auto& p = system.partition(static_cast<int>(i));
        CHECK(p.part_count() <= 4);  // alphabet size
        for (const auto& part : p.parts()) CHECK_FALSE(part.none());
    }
}

TEST_CASE("constant and duplicate columns") {
    Alignment a;
    a.names = {"a", "b", "c"};
    a.rows = {"AAGA", "AAGA", "ATCA"};
    const auto [system, report] = alignment_to_partition_system(a);
    // columns 0 and 3 constant; columns 1 and 2 encode the same split
    CHECK(system.size() == 1);
    CHECK(system.multiplicity(0) == 2);
    CHECK(system.source_columns(0) == std::vector<int>{1, 2});
    CHECK(report.dropped_constant_columns == std::vector<int>{0, 3});
    int kept_total = 0;
    for (std::size_t i = 0; i < system.size(); ++i) kept_total += system.multiplicity(static_cast<int>(i));
    CHECK(kept_total == static_cast<int>(report.kept_columns.size()));

    Alignment constant;
    constant.names = {"a", "b"};
    constant.rows = {"AAA", "AAA"};
    const auto [empty_sys, empty_report] = alignment_to_partition_system(constant);
    CHECK(empty_sys.size() == 0);
    CHECK(empty_report.dropped_constant_columns.size() == 3);
}

TEST_CASE("gap policy") {
    Alignment a;
    a.names = {"a", "b", "c"};
    a.rows = {"A-C", "AGA", "TGC"};
    const auto [letters, lr] = alignment_to_partition_system(a, GapPolicy::letter);
    CHECK(letters.size() == 3);  // '-' is an ordinary letter
    CHECK(lr.dropped_gap_columns.empty());

    const auto [dropped, dr] = alignment_to_partition_system(a, GapPolicy::drop_column);
    CHECK(dropped.size() == 2);
    CHECK(dr.dropped_gap_columns == std::vector<int>{1});
}

TEST_CASE("recoding commutes with row permutation") {
    const auto a = load_fig1();
    const std::vector<std::size_t> perm = {4, 0, 9, 2, 6, 1, 8, 3, 7, 5};
    Alignment shuffled;
    for (std::size_t i : perm) {
        shuffled.names.push_back(a.names[i]);
        shuffled.rows.push_back(a.rows[i]);
    }
    const auto [orig, r1] = alignment_to_partition_system(a);
    const auto [moved, r2] = alignment_to_partition_system(shuffled);
    REQUIRE(orig.size() == moved.size());

    // inverse map: new index of original row i
    std::vector<std::size_t> new_index(perm.size());
    for (std::size_t pos = 0; pos < perm.size(); ++pos) new_index[perm[pos]] = pos;

    for (std::size_t i = 0; i < orig.size(); ++i) {
        std::vector<Bitset> mapped;
        for (const auto& part : orig.partition(static_cast<int>(i)).parts()) {
            Bitset b(perm.size());
            for (int e : part.indices()) b.set(new_index[static_cast<std::size_t>(e)]);
            mapped.push_back(std::move(b));
        }
        const Partition expected(perm.size(), std::move(mapped));
        bool found = false;
        for (std::size_t j = 0; j < moved.size(); ++j)
            if (moved.partition(static_cast<int>(j)) == expected) found = true;
        CHECK(found);
    }
}
