#include "qmb/json_io.hpp"

#include <algorithm>

namespace qmb {

namespace {

std::string extra_name(ExtraId v) { return "e" + std::to_string(v + 1); }

nlohmann::json part_names(const Bitset& part, const GroundSet& ground) {
    nlohmann::json arr = nlohmann::json::array();
    for (int e : part.indices()) arr.push_back(ground.name(static_cast<std::size_t>(e)));
    return arr;
}

}  // namespace

nlohmann::json decomposition_to_json(const DecompositionState& state,
                                     const RecodingReport* report) {
    const PartitionSystem& sys = state.system();
    const GroundSet& ground = sys.ground();
    nlohmann::json doc;

    doc["ground"] = ground.names();

    doc["partitions"] = nlohmann::json::array();
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const int id = static_cast<int>(i);
        nlohmann::json p;
        p["id"] = id;
        p["parts"] = nlohmann::json::array();
        for (const auto& part : sys.partition(id).parts()) p["parts"].push_back(part_names(part, ground));
        p["multiplicity"] = sys.multiplicity(id);
        p["source_columns"] = sys.source_columns(id);
        doc["partitions"].push_back(std::move(p));
    }

    doc["blocks"] = nlohmann::json::array();
    for (const auto& [bid, b] : state.blocks()) {
        nlohmann::json jb;
        jb["id"] = bid;
        jb["partitions"] = std::vector<int>(b.parts.begin(), b.parts.end());
        jb["x"] = part_names(b.members_x, ground);
        jb["s"] = nlohmann::json::array();
        for (ExtraId v : b.members_s) jb["s"].push_back(extra_name(v));
        jb["directions"] = nlohmann::json::object();
        for (const auto& [v, x] : b.directions)
            jb["directions"][extra_name(v)] = ground.name(static_cast<std::size_t>(x));

        const InducedSystem ind = state.induced_partitions(bid);
        jb["induced_partitions"] = nlohmann::json::array();
        for (std::size_t t = 0; t < ind.partitions.size(); ++t) {
            nlohmann::json jp;
            jp["partition"] = ind.partition_ids[t];
            std::vector<std::vector<std::string>> parts;
            for (const auto& part : ind.partitions[t].parts()) {
                std::vector<std::string> names;
                for (int i : part.indices()) {
                    const auto& el = ind.elements[static_cast<std::size_t>(i)];
                    names.push_back(el.is_extra ? extra_name(el.index)
                                                : ground.name(static_cast<std::size_t>(el.index)));
                }
                std::sort(names.begin(), names.end());
                parts.push_back(std::move(names));
            }
            std::sort(parts.begin(), parts.end());
            jp["parts"] = parts;
            jb["induced_partitions"].push_back(std::move(jp));
        }
        doc["blocks"].push_back(std::move(jb));
    }

    doc["extra_vertices"] = nlohmann::json::array();
    for (const auto& [vid, extra] : state.extra_vertices()) {
        nlohmann::json je;
        je["name"] = extra_name(vid);
        je["blocks"] = std::vector<int>(extra.incident_blocks.begin(), extra.incident_blocks.end());
        doc["extra_vertices"].push_back(std::move(je));
    }

    doc["report"] = nlohmann::json::object();
    if (report) {
        doc["report"]["kept_columns"] = report->kept_columns;
        doc["report"]["dropped_constant_columns"] = report->dropped_constant_columns;
        doc["report"]["dropped_gap_columns"] = report->dropped_gap_columns;
    }
    return doc;
}

}  // namespace qmb
