#include "qmb/compat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmb {

CompatibilityResult strongly_compatible(const Partition& p, const Partition& q) {
    if (p.ground_size() != q.ground_size())
        throw std::invalid_argument("partitions are over different ground sets");
    CompatibilityResult res;
    if (p == q) {
        res.compatible = true;
        return res;
    }
    for (const auto& a : p.parts()) {
        for (const auto& b : q.parts()) {
            if (a.union_is_full(b)) {
                res.compatible = true;
                res.b_pq = a;
                res.b_qp = b;
                return res;
            }
        }
    }
    return res;
}

bool b_equal_check(const Partition& p, const Partition& q, const Partition& r) {
    if (p == q || p == r || q == r)
        throw std::invalid_argument("b_equal_check requires three distinct partitions");
    if (strongly_compatible(p, q).compatible)
        throw std::invalid_argument("b_equal_check requires P, Q not strongly compatible");
    const auto rp = strongly_compatible(r, p);
    const auto rq = strongly_compatible(r, q);
    if (!rp.compatible || !rq.compatible)
        throw std::invalid_argument("b_equal_check requires R strongly compatible with P and Q");
    return *rp.b_pq == *rq.b_pq;
}

NscGraph nsc_graph(const PartitionSystem& system, Execution exec) {
    NscGraph g;
    const std::size_t m = system.size();
    g.vertex_count = m;
    if (m < 2) return g;

    const std::size_t npairs = m * (m - 1) / 2;
    std::vector<std::uint8_t> incompatible(npairs, 0);

    // Pair index -> (i, j), i < j, in lexicographic order.
    auto pair_at = [m](std::size_t idx) {
        std::size_t i = 0, row = m - 1;
        while (idx >= row) {
            idx -= row;
            ++i;
            --row;
        }
        return std::pair<std::size_t, std::size_t>{i, i + 1 + idx};
    };

    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long long k = 0; k < static_cast<long long>(npairs); ++k) {
            const auto [i, j] = pair_at(static_cast<std::size_t>(k));
            if (!strongly_compatible(system.partition(static_cast<int>(i)),
                                     system.partition(static_cast<int>(j)))
                     .compatible)
                incompatible[static_cast<std::size_t>(k)] = 1;
        }
    } else {
        for (std::size_t k = 0; k < npairs; ++k) {
            const auto [i, j] = pair_at(k);
            if (!strongly_compatible(system.partition(static_cast<int>(i)),
                                     system.partition(static_cast<int>(j)))
                     .compatible)
                incompatible[k] = 1;
        }
    }

    for (std::size_t k = 0; k < npairs; ++k) {
        if (incompatible[k]) {
            const auto [i, j] = pair_at(k);
            g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return g;
}

std::vector<std::vector<int>> nsc_components(const NscGraph& graph) {
    const std::size_t m = graph.vertex_count;
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> rank(m, 0);

    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        if (rank[static_cast<std::size_t>(a)] == rank[static_cast<std::size_t>(b)])
            ++rank[static_cast<std::size_t>(a)];
    };

    for (const auto& [i, j] : graph.edges) unite(i, j);

    std::vector<std::vector<int>> by_root(m);
    for (std::size_t v = 0; v < m; ++v)
        by_root[static_cast<std::size_t>(find(static_cast<int>(v)))].push_back(static_cast<int>(v));

    std::vector<std::vector<int>> components;
    for (auto& comp : by_root)
        if (!comp.empty()) components.push_back(std::move(comp));
    // Members are ascending by construction; order components by smallest member.
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

}  // namespace qmb
