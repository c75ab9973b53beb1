#include "qmb/match.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qmb {

namespace {

using PartsKey = std::vector<int>;
using ExtraKey = std::vector<PartsKey>;

std::string ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

std::vector<std::vector<std::vector<int>>> canonical_induced(
    const std::vector<Partition>& partitions,
    const std::vector<int>& element_tokens) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& p : partitions) {
        std::vector<std::vector<int>> parts;
        for (const auto& part : p.parts()) {
            std::vector<int> tokens;
            for (int i : part.indices()) tokens.push_back(element_tokens[static_cast<std::size_t>(i)]);
            std::sort(tokens.begin(), tokens.end());
            parts.push_back(std::move(tokens));
        }
        std::sort(parts.begin(), parts.end());
        out.push_back(std::move(parts));
    }
    return out;
}

}  // namespace

CanonicalDecomposition canonicalize(const DecompositionState& state) {
    const std::size_t n = state.system().ground().size();
    CanonicalDecomposition out;
    for (const auto& [bid, b] : state.blocks()) {
        CanonicalBlock cb;
        cb.parts.assign(b.parts.begin(), b.parts.end());
        cb.x_elements = b.members_x.indices();

        std::vector<std::pair<ExtraKey, ExtraId>> keyed;
        for (ExtraId v : b.members_s) {
            ExtraKey key;
            for (BlockId inc : state.extra_vertices().at(v).incident_blocks) {
                const auto& parts = state.blocks().at(inc).parts;
                key.emplace_back(parts.begin(), parts.end());
            }
            std::sort(key.begin(), key.end());
            keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::map<ExtraId, int> token_of;
        for (std::size_t j = 0; j < keyed.size(); ++j) {
            cb.extras.push_back(keyed[j].first);
            token_of[keyed[j].second] = static_cast<int>(n + j);
        }

        const InducedSystem ind = state.induced_partitions(bid);
        std::vector<int> tokens;
        for (const auto& el : ind.elements)
            tokens.push_back(el.is_extra ? token_of.at(el.index) : el.index);
        cb.induced = canonical_induced(ind.partitions, tokens);
        out.blocks.push_back(std::move(cb));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

CanonicalDecomposition canonicalize(const QuasiMedianGraph& graph,
                                    const OracleDecomposition& oracle,
                                    std::size_t ground_size) {
    CanonicalDecomposition out;
    for (const auto& b : oracle.blocks) {
        CanonicalBlock cb;
        cb.parts.assign(b.parts.begin(), b.parts.end());
        cb.x_elements = b.x_elements;

        std::vector<std::pair<ExtraKey, int>> keyed;
        for (int v : b.s_vertices) {
            ExtraKey key;
            for (int bi : oracle.blocks_of_vertex[static_cast<std::size_t>(v)]) {
                const auto& parts = oracle.blocks[static_cast<std::size_t>(bi)].parts;
                key.emplace_back(parts.begin(), parts.end());
            }
            std::sort(key.begin(), key.end());
            keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::map<int, int> token_of;
        for (std::size_t j = 0; j < keyed.size(); ++j) {
            cb.extras.push_back(keyed[j].first);
            token_of[keyed[j].second] = static_cast<int>(ground_size + j);
        }

        std::vector<int> tokens;
        for (int x : b.x_elements) tokens.push_back(x);
        for (int v : b.s_vertices) tokens.push_back(token_of.at(v));
        cb.induced = canonical_induced(oracle_induced_partitions(graph, b), tokens);
        out.blocks.push_back(std::move(cb));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

std::string structural_diff(const CanonicalDecomposition& fast,
                            const CanonicalDecomposition& oracle) {
    if (fast == oracle) return {};
    std::ostringstream os;
    std::map<PartsKey, const CanonicalBlock*> fm, om;
    for (const auto& b : fast.blocks) fm[b.parts] = &b;
    for (const auto& b : oracle.blocks) om[b.parts] = &b;
    for (const auto& [key, b] : fm)
        if (!om.count(key)) os << "block " << ints(key) << " only in fast decomposition\n";
    for (const auto& [key, b] : om)
        if (!fm.count(key)) os << "block " << ints(key) << " only in oracle decomposition\n";
    for (const auto& [key, fb] : fm) {
        auto it = om.find(key);
        if (it == om.end()) continue;
        const CanonicalBlock* ob = it->second;
        if (fb->x_elements != ob->x_elements)
            os << "block " << ints(key) << ": X fast=" << ints(fb->x_elements)
               << " oracle=" << ints(ob->x_elements) << "\n";
        if (fb->extras != ob->extras)
            os << "block " << ints(key) << ": extra vertices differ (fast " << fb->extras.size()
               << ", oracle " << ob->extras.size() << ")\n";
        if (fb->induced != ob->induced)
            os << "block " << ints(key) << ": induced partitions differ\n";
    }
    if (os.str().empty()) os << "decompositions differ\n";
    return os.str();
}

MatchReport verify_against_oracle(const PartitionSystem& system, std::size_t budget) {
    const std::size_t n = system.ground().size();
    DecompositionState fast = decompose(system);
    fast.check_invariants();
    const QuasiMedianGraph graph = oracle_graph(system, budget);
    const OracleDecomposition od = blocks_and_cut_vertices(graph);

    const CanonicalDecomposition cf = canonicalize(fast);
    const CanonicalDecomposition co = canonicalize(graph, od, n);
    if (!(cf == co)) return {false, structural_diff(cf, co)};

    std::map<PartsKey, int> oracle_block_of;
    for (std::size_t i = 0; i < od.blocks.size(); ++i)
        oracle_block_of[PartsKey(od.blocks[i].parts.begin(), od.blocks[i].parts.end())] =
            static_cast<int>(i);

    auto extra_key = [&](ExtraId v, const DecompositionState& st) {
        ExtraKey key;
        for (BlockId inc : st.extra_vertices().at(v).incident_blocks) {
            const auto& parts = st.blocks().at(inc).parts;
            key.emplace_back(parts.begin(), parts.end());
        }
        std::sort(key.begin(), key.end());
        return key;
    };
    auto oracle_extra_key = [&](int v) {
        ExtraKey key;
        for (int bi : od.blocks_of_vertex[static_cast<std::size_t>(v)])
            key.emplace_back(od.blocks[static_cast<std::size_t>(bi)].parts.begin(),
                             od.blocks[static_cast<std::size_t>(bi)].parts.end());
        std::sort(key.begin(), key.end());
        return key;
    };

    for (const auto& [bid, b] : fast.blocks()) {
        const PartsKey key(b.parts.begin(), b.parts.end());
        const OracleBlock& ob = od.blocks[static_cast<std::size_t>(oracle_block_of.at(key))];

        // Direction soundness: the stored x(v,B) must be separated from v
        // by the block's edges in the explicit graph.
        for (ExtraId v : b.members_s) {
            const ExtraKey vkey = extra_key(v, fast);
            int graph_vertex = -1;
            for (int sv : ob.s_vertices)
                if (oracle_extra_key(sv) == vkey) graph_vertex = sv;
            if (graph_vertex < 0)
                return {false, "no oracle cut vertex matches an extra vertex of block " + ints(key)};
            if (!in_direction_of(graph, ob, graph_vertex, b.directions.at(v)))
                return {false, "direction element " +
                                   system.ground().name(static_cast<std::size_t>(b.directions.at(v))) +
                                   " is not in the direction of block " + ints(key)};
        }

        // The induced system's quasi-median graph must be isomorphic to
        // the block, via the part-correspondence map on block vertices.
        const InducedSystem ind = fast.induced_partitions(bid);
        const std::size_t k = ind.elements.size();
        std::vector<int> rep(k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& el = ind.elements[i];
            if (!el.is_extra) {
                rep[i] = el.index;
            } else {
                BlockId other = -1;
                for (BlockId inc : fast.extra_vertices().at(el.index).incident_blocks)
                    if (inc != bid) { other = inc; break; }
                rep[i] = fast.blocks().at(other).directions.at(el.index);
            }
        }
        std::vector<std::map<int, int>> part_map(ind.partition_ids.size());
        for (std::size_t t = 0; t < ind.partition_ids.size(); ++t) {
            const Partition& orig = system.partition(ind.partition_ids[t]);
            for (std::size_t i = 0; i < k; ++i) {
                const int a = orig.part_index_of(static_cast<std::size_t>(rep[i]));
                const int pb = ind.partitions[t].part_index_of(i);
                auto [it, fresh] = part_map[t].emplace(a, pb);
                if (!fresh && it->second != pb)
                    return {false, "inconsistent part correspondence in block " + ints(key)};
            }
        }

        PartitionSystem indsys{[&] {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < k; ++i) names.push_back("v" + std::to_string(i));
            return GroundSet{names};
        }()};
        for (const auto& p : ind.partitions) indsys.add(p);
        const std::vector<PMap> ivs = characterized_vertices(indsys, budget);

        std::set<PMap> mapped;
        std::vector<PMap> mapped_of(graph.vertices.size());
        for (int vid : ob.vertex_ids) {
            const PMap& w = graph.vertices[static_cast<std::size_t>(vid)];
            PMap w2;
            w2.parts.resize(ind.partition_ids.size());
            for (std::size_t t = 0; t < ind.partition_ids.size(); ++t) {
                const auto it = part_map[t].find(
                    static_cast<int>(w.parts[static_cast<std::size_t>(ind.partition_ids[t])]));
                if (it == part_map[t].end())
                    return {false, "block vertex uses a part with empty restriction in block " +
                                       ints(key)};
                w2.parts[t] = static_cast<std::uint16_t>(it->second);
            }
            if (!std::binary_search(ivs.begin(), ivs.end(), w2))
                return {false, "mapped block vertex missing from induced graph of block " + ints(key)};
            if (!mapped.insert(w2).second)
                return {false, "block-to-induced vertex map not injective in block " + ints(key)};
            mapped_of[static_cast<std::size_t>(vid)] = std::move(w2);
        }
        if (mapped.size() != ivs.size())
            return {false, "induced graph of block " + ints(key) + " has extra vertices"};

        const QuasiMedianGraph ig = build_graph(ivs, indsys);
        if (ig.edges.size() != ob.edge_ids.size())
            return {false, "edge count differs for block " + ints(key)};
        for (int eid : ob.edge_ids) {
            const auto& e = graph.edges[static_cast<std::size_t>(eid)];
            const std::size_t t =
                static_cast<std::size_t>(std::lower_bound(ind.partition_ids.begin(),
                                                          ind.partition_ids.end(), e.label) -
                                         ind.partition_ids.begin());
            const PMap& a = mapped_of[static_cast<std::size_t>(e.u)];
            const PMap& bm = mapped_of[static_cast<std::size_t>(e.v)];
            for (std::size_t c = 0; c < a.parts.size(); ++c) {
                if ((a.parts[c] == bm.parts[c]) != (c != t))
                    return {false, "edge label mismatch in induced graph of block " + ints(key)};
            }
        }
    }
    return {true, {}};
}

}  // namespace qmb
