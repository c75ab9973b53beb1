#include "qmb/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace qmb {

PMap pi_map(const PartitionSystem& system, int element) {
    PMap v;
    v.parts.reserve(system.size());
    for (std::size_t i = 0; i < system.size(); ++i)
        v.parts.push_back(static_cast<std::uint16_t>(
            system.partition(static_cast<int>(i)).part_index_of(static_cast<std::size_t>(element))));
    return v;
}

PMap quasi_median(const PMap& v1, const PMap& v2, const PMap& v3) {
    PMap q;
    q.parts.resize(v1.parts.size());
    for (std::size_t i = 0; i < v1.parts.size(); ++i)
        q.parts[i] = (v2.parts[i] == v3.parts[i]) ? v2.parts[i] : v1.parts[i];
    return q;
}

std::vector<PMap> hull(const std::vector<PMap>& seed, std::size_t budget) {
    if (seed.empty()) throw std::invalid_argument("hull of an empty seed");
    std::unordered_set<PMap, PMapHash> members(seed.begin(), seed.end());
    if (members.size() > budget)
        throw BudgetExceeded("quasi-median hull exceeds vertex budget");
    std::vector<PMap> all(members.begin(), members.end());
    std::size_t old_size = 0;
    while (old_size < all.size()) {
        const std::size_t cur = all.size();
        for (std::size_t i = 0; i < cur; ++i) {
            for (std::size_t j = 0; j < cur; ++j) {
                for (std::size_t k = 0; k < cur; ++k) {
                    if (i < old_size && j < old_size && k < old_size) continue;
                    PMap q = quasi_median(all[i], all[j], all[k]);
                    if (members.insert(q).second) {
                        all.push_back(std::move(q));
                        if (all.size() > budget)
                            throw BudgetExceeded("quasi-median hull exceeds vertex budget");
                    }
                }
            }
        }
        old_size = cur;
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<PMap> characterized_vertices(const PartitionSystem& system, std::size_t budget,
                                         Execution exec) {
    const std::size_t m = system.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t k = system.partition(static_cast<int>(i)).part_count();
        if (total > budget / k)
            throw BudgetExceeded("PMap product space exceeds vertex budget");
        total *= k;
    }

    // Per strongly compatible distinct pair: the covering part index on
    // each side. The vertex condition requires one of the two choices.
    struct PairRule {
        int i, j;
        std::uint16_t part_i, part_j;
    };
    std::vector<PairRule> rules;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto res = strongly_compatible(system.partition(static_cast<int>(i)),
                                                 system.partition(static_cast<int>(j)));
            if (!res.compatible) continue;
            const auto& pi = system.partition(static_cast<int>(i)).parts();
            const auto& pj = system.partition(static_cast<int>(j)).parts();
            PairRule r{static_cast<int>(i), static_cast<int>(j), 0, 0};
            r.part_i = static_cast<std::uint16_t>(
                std::find(pi.begin(), pi.end(), *res.b_pq) - pi.begin());
            r.part_j = static_cast<std::uint16_t>(
                std::find(pj.begin(), pj.end(), *res.b_qp) - pj.begin());
            rules.push_back(r);
        }
    }

    auto decode = [&](std::size_t idx) {
        PMap v;
        v.parts.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t k = system.partition(static_cast<int>(i)).part_count();
            v.parts[i] = static_cast<std::uint16_t>(idx % k);
            idx /= k;
        }
        return v;
    };
    auto accepted = [&](const PMap& v) {
        for (const auto& r : rules)
            if (v.parts[static_cast<std::size_t>(r.i)] != r.part_i &&
                v.parts[static_cast<std::size_t>(r.j)] != r.part_j)
                return false;
        return true;
    };

    std::vector<std::uint8_t> keep(total, 0);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (long long idx = 0; idx < static_cast<long long>(total); ++idx)
            if (accepted(decode(static_cast<std::size_t>(idx)))) keep[static_cast<std::size_t>(idx)] = 1;
    } else {
        for (std::size_t idx = 0; idx < total; ++idx)
            if (accepted(decode(idx))) keep[idx] = 1;
    }

    std::vector<PMap> out;
    for (std::size_t idx = 0; idx < total; ++idx)
        if (keep[idx]) out.push_back(decode(idx));
    std::sort(out.begin(), out.end());
    return out;
}

int QuasiMedianGraph::vertex_of(const PMap& v) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v)) return -1;
    return static_cast<int>(it - vertices.begin());
}

QuasiMedianGraph build_graph(std::vector<PMap> vertices, const PartitionSystem& system) {
    QuasiMedianGraph g;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    g.vertices = std::move(vertices);
    const std::size_t nv = g.vertices.size();
    const std::size_t m = system.size();

    // Bucket by the PMap with one coordinate wildcarded: two vertices in
    // one bucket are identical off that coordinate, hence adjacent.
    for (std::size_t p = 0; p < m; ++p) {
        std::unordered_map<PMap, std::vector<int>, PMapHash> buckets;
        for (std::size_t v = 0; v < nv; ++v) {
            PMap key = g.vertices[v];
            key.parts[p] = 0xFFFF;
            buckets[key].push_back(static_cast<int>(v));
        }
        for (const auto& [key, members] : buckets)
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    g.edges.push_back({members[a], members[b], static_cast<int>(p)});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.u, a.v, a.label) < std::tie(b.u, b.v, b.label);
    });

    g.labels.assign(nv, {});
    for (std::size_t x = 0; x < system.ground().size(); ++x) {
        const int v = g.vertex_of(pi_map(system, static_cast<int>(x)));
        if (v < 0) throw std::logic_error("pi(x) missing from the vertex set");
        g.labels[static_cast<std::size_t>(v)].push_back(static_cast<int>(x));
    }

    g.adj.assign(nv, {});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        g.adj[static_cast<std::size_t>(g.edges[e].u)].emplace_back(g.edges[e].v, static_cast<int>(e));
        g.adj[static_cast<std::size_t>(g.edges[e].v)].emplace_back(g.edges[e].u, static_cast<int>(e));
    }
    return g;
}

QuasiMedianGraph oracle_graph(const PartitionSystem& system, std::size_t budget) {
    return build_graph(characterized_vertices(system, budget), system);
}

OracleDecomposition blocks_and_cut_vertices(const QuasiMedianGraph& g) {
    const std::size_t nv = g.vertices.size();
    OracleDecomposition out;
    out.is_cut_vertex.assign(nv, 0);
    out.blocks_of_vertex.assign(nv, {});

    std::vector<int> disc(nv, -1), low(nv, 0);
    std::vector<int> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };

    auto emit_block = [&](int up_to_edge) {
        OracleBlock b;
        std::unordered_set<int> vset;
        while (true) {
            const int eid = edge_stack.back();
            edge_stack.pop_back();
            b.edge_ids.push_back(eid);
            b.parts.insert(g.edges[static_cast<std::size_t>(eid)].label);
            vset.insert(g.edges[static_cast<std::size_t>(eid)].u);
            vset.insert(g.edges[static_cast<std::size_t>(eid)].v);
            if (eid == up_to_edge) break;
        }
        b.vertex_ids.assign(vset.begin(), vset.end());
        std::sort(b.vertex_ids.begin(), b.vertex_ids.end());
        std::sort(b.edge_ids.begin(), b.edge_ids.end());
        const int bi = static_cast<int>(out.blocks.size());
        for (int v : b.vertex_ids) out.blocks_of_vertex[static_cast<std::size_t>(v)].push_back(bi);
        out.blocks.push_back(std::move(b));
    };

    for (std::size_t root = 0; root < nv; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> frames;
        disc[root] = low[root] = timer++;
        frames.push_back({static_cast<int>(root), -1, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& nbrs = g.adj[static_cast<std::size_t>(f.v)];
            if (f.next < nbrs.size()) {
                const auto [to, eid] = nbrs[f.next++];
                if (eid == f.parent_edge) continue;
                if (disc[static_cast<std::size_t>(to)] == -1) {
                    edge_stack.push_back(eid);
                    disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] = timer++;
                    frames.push_back({to, eid, 0});
                } else if (disc[static_cast<std::size_t>(to)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.push_back(eid);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(to)]);
                }
            } else {
                const Frame done = f;
                frames.pop_back();
                if (frames.empty()) continue;
                Frame& parent = frames.back();
                low[static_cast<std::size_t>(parent.v)] =
                    std::min(low[static_cast<std::size_t>(parent.v)], low[static_cast<std::size_t>(done.v)]);
                if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(parent.v)])
                    emit_block(done.parent_edge);
            }
        }
    }

    for (std::size_t v = 0; v < nv; ++v)
        out.is_cut_vertex[v] = out.blocks_of_vertex[v].size() >= 2 ? 1 : 0;

    for (auto& b : out.blocks) {
        for (int v : b.vertex_ids) {
            const auto& labels = g.labels[static_cast<std::size_t>(v)];
            if (!labels.empty())
                b.x_elements.insert(b.x_elements.end(), labels.begin(), labels.end());
            else if (out.is_cut_vertex[static_cast<std::size_t>(v)])
                b.s_vertices.push_back(v);
        }
        std::sort(b.x_elements.begin(), b.x_elements.end());
        std::sort(b.s_vertices.begin(), b.s_vertices.end());
    }
    return out;
}

bool in_direction_of(const QuasiMedianGraph& g, const OracleBlock& block, int vertex,
                     int element) {
    std::unordered_set<int> blocked(block.edge_ids.begin(), block.edge_ids.end());
    int target = -1;
    for (std::size_t v = 0; v < g.labels.size(); ++v)
        if (std::find(g.labels[v].begin(), g.labels[v].end(), element) != g.labels[v].end())
            target = static_cast<int>(v);
    if (target < 0) throw std::invalid_argument("element not labelled in graph");

    // BFS from `vertex` avoiding the block's edges; the element is in the
    // direction of the block iff its vertex is unreachable.
    std::vector<char> seen(g.vertices.size(), 0);
    std::vector<int> queue{vertex};
    seen[static_cast<std::size_t>(vertex)] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        if (v == target) return false;
        for (const auto& [to, eid] : g.adj[static_cast<std::size_t>(v)]) {
            if (blocked.count(eid) || seen[static_cast<std::size_t>(to)]) continue;
            seen[static_cast<std::size_t>(to)] = 1;
            queue.push_back(to);
        }
    }
    return true;
}

bool gv_cut_test(const QuasiMedianGraph& g, int vertex, const PartitionSystem& system) {
    const std::size_t m = system.size();
    if (m == 0) throw std::invalid_argument("gv_cut_test requires a non-empty system");
    const PMap& v = g.vertices.at(static_cast<std::size_t>(vertex));

    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<std::size_t>(x)] == x
                   ? x
                   : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    for (std::size_t i = 0; i < m; ++i) {
        const Bitset& vi = system.partition(static_cast<int>(i)).parts()[v.parts[i]];
        for (std::size_t j = i + 1; j < m; ++j) {
            const Bitset& vj = system.partition(static_cast<int>(j)).parts()[v.parts[j]];
            if (!vi.union_is_full(vj)) parent[static_cast<std::size_t>(find(static_cast<int>(j)))] =
                find(static_cast<int>(i));
        }
    }
    for (std::size_t i = 1; i < m; ++i)
        if (find(static_cast<int>(i)) != find(0)) return true;
    return false;
}

std::vector<Partition> oracle_induced_partitions(const QuasiMedianGraph& g,
                                                 const OracleBlock& block) {
    // Element order: x_elements then s_vertices.
    const std::size_t k = block.x_elements.size() + block.s_vertices.size();
    std::vector<int> element_vertex;
    for (int x : block.x_elements) {
        int vx = -1;
        for (std::size_t v = 0; v < g.labels.size(); ++v)
            if (std::find(g.labels[v].begin(), g.labels[v].end(), x) != g.labels[v].end())
                vx = static_cast<int>(v);
        element_vertex.push_back(vx);
    }
    for (int v : block.s_vertices) element_vertex.push_back(v);

    std::vector<Partition> out;
    for (int pid : block.parts) {
        // Components of the block with the edges labelled pid removed.
        std::map<int, int> comp;  // block vertex -> component id
        int ncomp = 0;
        std::unordered_set<int> in_block(block.vertex_ids.begin(), block.vertex_ids.end());
        std::unordered_set<int> block_edges(block.edge_ids.begin(), block.edge_ids.end());
        for (int start : block.vertex_ids) {
            if (comp.count(start)) continue;
            const int c = ncomp++;
            std::vector<int> queue{start};
            comp[start] = c;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                for (const auto& [to, eid] : g.adj[static_cast<std::size_t>(queue[qi])]) {
                    if (!block_edges.count(eid)) continue;
                    if (g.edges[static_cast<std::size_t>(eid)].label == pid) continue;
                    if (!in_block.count(to) || comp.count(to)) continue;
                    comp[to] = c;
                    queue.push_back(to);
                }
            }
        }
        std::map<int, Bitset> parts;
        for (std::size_t i = 0; i < k; ++i) {
            auto [it, fresh] = parts.try_emplace(comp.at(element_vertex[i]), Bitset(k));
            (void)fresh;
            it->second.set(i);
        }
        std::vector<Bitset> part_list;
        for (auto& [c, bits] : parts) part_list.push_back(std::move(bits));
        out.emplace_back(k, std::move(part_list));
    }
    return out;
}

}  // namespace qmb
