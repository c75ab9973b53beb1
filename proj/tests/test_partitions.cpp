#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "qmb/compat.hpp"
#include "qmb/random_system.hpp"

using namespace qmb;
using namespace qmb::test;

TEST_CASE("partition canonical form and validation") {
    const auto p = make_partition(4, {{3, 4}, {1, 2}});
    const auto q = make_partition(4, {{1, 2}, {4, 3}});
    CHECK(p == q);
    CHECK(p.hash() == q.hash());
    CHECK(p.parts().front().test(0));  // part with s1 sorted first

    CHECK_THROWS_AS(make_partition(4, {{1, 2, 3, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(make_partition(4, {{1, 2}, {2, 3, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(make_partition(4, {{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(GroundSet(std::vector<std::string>({"a", "a"})), std::invalid_argument);
}

TEST_CASE("strong compatibility on the worked alignment") {
    const auto system = fig1_system();
    REQUIRE(system.size() == 12);
    const auto& p1 = system.partition(0);
    const auto& p5 = system.partition(4);

    const auto res = strongly_compatible(p1, p5);
    REQUIRE(res.compatible);
    CHECK(*res.b_pq == make_set(10, {3, 4, 5, 6, 9, 10}));
    CHECK(*res.b_qp == make_set(10, {1, 2, 3, 4, 7, 8, 9, 10}));

    CHECK_FALSE(strongly_compatible(system.partition(2), system.partition(7)).compatible);

    const auto self = strongly_compatible(p1, p1);
    CHECK(self.compatible);
    CHECK_FALSE(self.b_pq.has_value());
    CHECK_FALSE(self.b_qp.has_value());

    const auto other = make_partition(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(strongly_compatible(p1, other), std::invalid_argument);
}

TEST_CASE("covering pair is unique and symmetric") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        RandomSystemParams params;
        params.max_n = 12;
        params.max_parts = 4;
        const auto system = random_system(seed, params);
        for (std::size_t i = 0; i < system.size(); ++i) {
            for (std::size_t j = i + 1; j < system.size(); ++j) {
                const auto& p = system.partition(static_cast<int>(i));
                const auto& q = system.partition(static_cast<int>(j));
                const auto pq = strongly_compatible(p, q);
                const auto qp = strongly_compatible(q, p);
                CHECK(pq.compatible == qp.compatible);
                if (!pq.compatible) continue;
                CHECK(*pq.b_pq == *qp.b_qp);
                CHECK(*pq.b_qp == *qp.b_pq);
                // independent full scan: exactly one covering pair
                int covering = 0;
                for (const auto& a : p.parts())
                    for (const auto& b : q.parts())
                        if (a.union_is_full(b)) ++covering;
                CHECK(covering == 1);
            }
        }
    }
}

TEST_CASE("B-set identity") {
    const auto system = fig1_system();
    CHECK(b_equal_check(system.partition(4), system.partition(5), system.partition(0)));
    CHECK(*strongly_compatible(system.partition(0), system.partition(5)).b_pq ==
          make_set(10, {3, 4, 5, 6, 9, 10}));

    CHECK_THROWS_AS(b_equal_check(system.partition(4), system.partition(4), system.partition(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(b_equal_check(system.partition(0), system.partition(4), system.partition(1)),
                    std::invalid_argument);

    // Any sampled triple meeting the preconditions satisfies the identity.
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto sys = random_system(seed);
        const std::size_t m = sys.size();
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (std::size_t r = 0; r < m; ++r) {
                    if (r == a || r == b) continue;
                    const auto& pa = sys.partition(static_cast<int>(a));
                    const auto& pb = sys.partition(static_cast<int>(b));
                    const auto& pr = sys.partition(static_cast<int>(r));
                    if (strongly_compatible(pa, pb).compatible) continue;
                    if (!strongly_compatible(pr, pa).compatible) continue;
                    if (!strongly_compatible(pr, pb).compatible) continue;
                    CHECK(b_equal_check(pa, pb, pr));
                    ++checked;
                }
    }
    CHECK(checked > 50);
}

TEST_CASE("non-strong-compatibility graph of the worked alignment") {
    const auto system = fig1_system();
    const auto graph = nsc_graph(system);
    CHECK(std::count(graph.edges.begin(), graph.edges.end(), std::make_pair(2, 7)) == 1);

    const auto comps = nsc_components(graph);
    REQUIRE(comps.size() == 8);
    CHECK(comps[0] == std::vector<int>{0, 1, 2, 7});
    CHECK(comps[1] == std::vector<int>{3});
    CHECK(comps[2] == std::vector<int>{4, 5});
    CHECK(comps[3] == std::vector<int>{6});
    CHECK(comps[4] == std::vector<int>{8});
    CHECK(comps[5] == std::vector<int>{9});
    CHECK(comps[6] == std::vector<int>{10});
    CHECK(comps[7] == std::vector<int>{11});
}

TEST_CASE("nsc graph degenerate cases") {
    PartitionSystem one{GroundSet{{"a", "b"}}};
    one.add(make_partition(2, {{1}, {2}}));
    const auto g = nsc_graph(one);
    CHECK(g.vertex_count == 1);
    CHECK(g.edges.empty());
    CHECK(nsc_components(g).size() == 1);

    RandomSystemParams compat;
    compat.mode = RandomSystemParams::Mode::compatible;
    compat.max_n = 9;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto sys = random_system(seed, compat);
        const auto cg = nsc_graph(sys);
        CHECK(cg.edges.empty());
        CHECK(nsc_components(cg).size() == sys.size());
        // strongly compatible systems obey the cardinality bound
        if (sys.ground().size() >= 2)
            CHECK(sys.size() <= 3 * sys.ground().size() - 5);
    }
}

TEST_CASE("parallel nsc kernel matches the serial reference") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RandomSystemParams params;
        params.max_n = 10;
        params.max_m = 40;
        params.max_parts = 4;
        const auto system = random_system(seed, params);
        const auto serial = nsc_graph(system, Execution::serial);
        const auto parallel = nsc_graph(system, Execution::parallel);
        CHECK(serial.edges == parallel.edges);
    }
}
