#include "qmb/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmb {

BlockCompatibility DecompositionState::is_compatible(int partition_id,
                                                     const BlockRecord& block) const {
    const Partition& p = system_->partition(partition_id);
    const std::size_t n = system_->ground().size();
    BlockCompatibility out;
    out.restriction = Bitset::full(n);
    bool first = true;
    bool side_mismatch = false;
    for (int qid : block.parts) {
        const auto res = strongly_compatible(p, system_->partition(qid));
        if (!res.compatible) return out;  // compatible == false
        out.restriction &= *res.b_qp;
        if (first) {
            out.block_side = *res.b_pq;
            first = false;
        } else if (out.block_side != *res.b_pq) {
            side_mismatch = true;
        }
    }
    // When P is strongly compatible with the whole block, B(P,Q) is the
    // same part of P for every Q: along any path of the block's (connected)
    // non-strong-compatibility graph, two distinct parts of P covering with
    // non-strongly-compatible partitions would cover X themselves.
    if (side_mismatch)
        throw std::logic_error("B(P,Q) differs across partitions of one block");
    out.compatible = true;
    return out;
}

std::optional<int> DecompositionState::choose_direction(ExtraId v, const BlockRecord& b) const {
    const auto it = extras_.find(v);
    if (it == extras_.end()) return std::nullopt;
    for (BlockId other : it->second.incident_blocks) {
        if (other == b.id) continue;
        return blocks_.at(other).directions.at(v);
    }
    return std::nullopt;
}

int DecompositionState::attach_extra(ExtraId v, BlockId block_id) {
    BlockRecord& b = blocks_.at(block_id);
    if (auto it = b.directions.find(v); it != b.directions.end()) return it->second;

    b.members_s.insert(v);
    auto [eit, fresh] = extras_.try_emplace(v);
    if (fresh) eit->second.id = v;
    eit->second.incident_blocks.insert(block_id);

    int dir = -1;
    if (!b.members_x.none()) {
        dir = b.members_x.lowest();
    } else {
        for (ExtraId w : b.members_s) {
            if (w == v) continue;
            if (auto d = choose_direction(w, b); d) {
                dir = *d;
                break;
            }
        }
    }
    if (dir >= 0) b.directions[v] = dir;
    return dir;  // -1: caller must resolve later
}

void DecompositionState::add_partition(int partition_id) {
    if (partition_id < 0 || static_cast<std::size_t>(partition_id) >= system_->size())
        throw std::invalid_argument("unknown partition id");
    if (processed_set_.count(partition_id))
        throw std::invalid_argument("partition already processed");
    const Partition& p = system_->partition(partition_id);
    const std::size_t n = system_->ground().size();

    // Pass 1: classify every block against P and accumulate the new
    // block's element set as the intersection of all restrictions.
    std::vector<BlockId> incompatible_blocks, compatible_blocks;
    std::map<BlockId, Bitset> block_side;
    Bitset new_x = Bitset::full(n);
    for (const auto& [bid, block] : blocks_) {
        auto res = is_compatible(partition_id, block);
        if (res.compatible) {
            compatible_blocks.push_back(bid);
            new_x &= res.restriction;
            block_side.emplace(bid, std::move(res.block_side));
        } else {
            incompatible_blocks.push_back(bid);
        }
    }

    const BlockId cid = next_block_++;
    {
        BlockRecord c;
        c.id = cid;
        c.members_x = std::move(new_x);
        c.parts.insert(partition_id);
        blocks_.emplace(cid, std::move(c));
    }

    // Merge every block containing a partition not strongly compatible
    // with P into the new block. The merged block's element set is the
    // union of the absorbed ones; extra vertices left incident to the
    // new block alone stop being cut vertices and are deleted.
    const bool merged = !incompatible_blocks.empty();
    if (merged) {
        BlockRecord& c = blocks_.at(cid);
        c.members_x = Bitset(n);
        for (BlockId bid : incompatible_blocks) {
            BlockRecord& b = blocks_.at(bid);
            c.members_x |= b.members_x;
            c.parts.insert(b.parts.begin(), b.parts.end());
            for (ExtraId w : b.members_s) {
                c.members_s.insert(w);
                auto& inc = extras_.at(w).incident_blocks;
                inc.erase(bid);
                inc.insert(cid);
            }
            blocks_.erase(bid);
        }
        for (auto it = c.members_s.begin(); it != c.members_s.end();) {
            const ExtraId w = *it;
            if (extras_.at(w).incident_blocks.size() <= 1) {
                extras_.erase(w);
                it = c.members_s.erase(it);
            } else {
                ++it;
            }
        }
    }

    // An existing cut vertex crossed by P joins the new block and splits:
    // the surviving blocks around it fall into parts of P, and each part
    // keeps its own copy (they are no longer pairwise connected except
    // through C). With a single part the vertex is untouched.
    // attach_point records, per part of P, the vertex of C sitting there.
    std::map<int, ExtraId> attach_point;
    {
        std::vector<ExtraId> existing;
        for (const auto& [vid, extra] : extras_) existing.push_back(vid);
        for (ExtraId w : existing) {
            std::map<int, std::vector<BlockId>> groups;
            for (BlockId bid : extras_.at(w).incident_blocks) {
                if (bid == cid) continue;
                const int part = p.part_index_of(
                    static_cast<std::size_t>(block_side.at(bid).lowest()));
                groups[part].push_back(bid);
            }
            if (groups.size() < 2) continue;
            BlockRecord& c = blocks_.at(cid);
            c.members_s.insert(w);
            extras_.at(w).incident_blocks.insert(cid);
            bool first = true;
            for (const auto& [part, members] : groups) {
                if (first) {
                    first = false;
                    attach_point.emplace(part, w);
                    continue;
                }
                const ExtraId w2 = next_extra_++;
                auto& rec = extras_[w2];
                rec.id = w2;
                rec.incident_blocks.insert(cid);
                c.members_s.insert(w2);
                attach_point.emplace(part, w2);
                for (BlockId bid : members) {
                    BlockRecord& b = blocks_.at(bid);
                    b.members_s.erase(w);
                    b.directions.emplace(w2, b.directions.at(w));
                    b.directions.erase(w);
                    b.members_s.insert(w2);
                    extras_.at(w).incident_blocks.erase(bid);
                    rec.incident_blocks.insert(bid);
                }
            }
        }
    }

    // Directions for C are computed fresh: any element of X(C) works for
    // every cut vertex of C; with X(C) empty, borrow through a sibling
    // cut vertex once the pass is complete.
    std::vector<std::pair<ExtraId, BlockId>> unresolved;
    {
        BlockRecord& c = blocks_.at(cid);
        c.directions.clear();
        for (ExtraId w : c.members_s) {
            if (!c.members_x.none())
                c.directions[w] = c.members_x.lowest();
            else
                unresolved.emplace_back(w, cid);
        }
    }

    // Pass 2: update the surviving blocks' element sets and attach extra
    // vertices where a block borders the new block without sharing a
    // vertex already. When C consists of the edges of P alone it has one
    // vertex per part of P, so blocks attaching at the same part share
    // one cut vertex; a merged C has no such coincidences left (they all
    // pass through previously existing cut vertices, handled above).
    for (BlockId bid : compatible_blocks) {
        BlockRecord& b = blocks_.at(bid);
        BlockRecord& c = blocks_.at(cid);
        const Bitset& side = block_side.at(bid);
        const bool lost_element = !b.members_x.is_subset_of(side);
        b.members_x &= side;
        if (!lost_element) continue;
        if (c.members_x.intersects(b.members_x)) continue;

        bool shares_extra = false;
        for (ExtraId w : b.members_s)
            if (c.members_s.count(w)) { shares_extra = true; break; }
        if (shares_extra) continue;

        const int x_part = p.part_index_of(static_cast<std::size_t>(side.lowest()));
        ExtraId w = -1;
        if (!merged) {
            if (auto it = attach_point.find(x_part); it != attach_point.end()) w = it->second;
        }
        if (w < 0) {
            w = next_extra_++;
            if (!merged) attach_point.emplace(x_part, w);
        }
        if (attach_extra(w, bid) < 0) unresolved.emplace_back(w, bid);
        if (attach_extra(w, cid) < 0) unresolved.emplace_back(w, cid);
    }

    // A direction can be unresolvable mid-pass when a block's element set
    // is still empty and it has no other attached vertex yet; by the end
    // of the pass some sibling vertex exists to borrow from.
    for (bool progress = true; progress && !unresolved.empty();) {
        progress = false;
        for (auto it = unresolved.begin(); it != unresolved.end();) {
            BlockRecord& b = blocks_.at(it->second);
            std::optional<int> d;
            for (ExtraId w : b.members_s) {
                if (w == it->first) continue;
                if ((d = choose_direction(w, b))) break;
            }
            if (d) {
                b.directions[it->first] = *d;
                it = unresolved.erase(it);
                progress = true;
            } else {
                ++it;
            }
        }
    }
    if (!unresolved.empty())
        throw std::logic_error("unresolvable direction element; invalid state");

    processed_.push_back(partition_id);
    processed_set_.insert(partition_id);
}

InducedSystem DecompositionState::induced_partitions(BlockId block) const {
    const BlockRecord& b = blocks_.at(block);
    InducedSystem out;
    out.block = block;
    for (int e : b.members_x.indices()) out.elements.push_back({false, e});
    std::map<ExtraId, int> rep;
    for (ExtraId v : b.members_s) {
        out.elements.push_back({true, v});
        const auto d = choose_direction(v, b);
        if (!d) throw std::logic_error("extra vertex with no neighbouring block");
        rep[v] = *d;
    }

    const std::size_t k = out.elements.size();
    for (int pid : b.parts) {
        const Partition& p = system_->partition(pid);
        std::map<int, Bitset> parts;
        for (std::size_t i = 0; i < k; ++i) {
            const auto& el = out.elements[i];
            const int g = el.is_extra ? rep.at(el.index) : el.index;
            auto [it, fresh] = parts.try_emplace(p.part_index_of(static_cast<std::size_t>(g)), Bitset(k));
            (void)fresh;
            it->second.set(i);
        }
        std::vector<Bitset> part_list;
        part_list.reserve(parts.size());
        for (auto& [idx, bits] : parts) part_list.push_back(std::move(bits));
        out.partition_ids.push_back(pid);
        out.partitions.emplace_back(k, std::move(part_list));
    }
    return out;
}

void DecompositionState::check_invariants() const {
    const std::size_t n = system_->ground().size();
    std::set<int> seen_parts;
    Bitset covered(n);
    for (const auto& [bid, b] : blocks_) {
        if (b.parts.empty()) throw std::logic_error("block with empty partition set");
        if (b.members_x.none() && b.members_s.empty())
            throw std::logic_error("block with empty X(B) and S(B)");
        if (b.directions.size() != b.members_s.size())
            throw std::logic_error("directions out of sync with S(B)");
        for (ExtraId v : b.members_s) {
            if (!b.directions.count(v)) throw std::logic_error("missing direction element");
            if (!extras_.at(v).incident_blocks.count(bid))
                throw std::logic_error("extra vertex incidence out of sync");
        }
        for (int pid : b.parts)
            if (!seen_parts.insert(pid).second)
                throw std::logic_error("partition appears in two blocks");
        covered |= b.members_x;
    }
    if (seen_parts != processed_set_)
        throw std::logic_error("block partition sets do not cover processed partitions");
    for (const auto& [vid, extra] : extras_) {
        if (extra.incident_blocks.size() < 2)
            throw std::logic_error("extra vertex in fewer than two blocks");
        for (BlockId bid : extra.incident_blocks)
            if (!blocks_.at(bid).members_s.count(vid))
                throw std::logic_error("block membership out of sync");
    }
    if (!processed_.empty() && !covered.all())
        throw std::logic_error("ground element in no block");
    if (n >= 2) {
        if (blocks_.size() > 3 * n - 5) throw std::logic_error("block count exceeds 3n-5");
        if (extras_.size() > 3 * n - 6) throw std::logic_error("extra vertex count exceeds 3n-6");
    }
}

DecompositionState decompose(const PartitionSystem& system) {
    std::vector<int> order(system.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return decompose(system, order);
}

DecompositionState decompose(const PartitionSystem& system, const std::vector<int>& order) {
    DecompositionState state(system);
    for (int pid : order) state.add_partition(pid);
    return state;
}

}  // namespace qmb
