#include "qmb/dot_export.hpp"

#include <sstream>

namespace qmb {

std::string nsc_to_dot(const PartitionSystem& system, const NscGraph& graph) {
    std::ostringstream os;
    os << "graph nsc {\n";
    for (std::size_t i = 0; i < system.size(); ++i) os << "  P" << i + 1 << ";\n";
    for (const auto& [a, b] : graph.edges) os << "  P" << a + 1 << " -- P" << b + 1 << ";\n";
    os << "}\n";
    return os.str();
}

std::string qm_graph_to_dot(const QuasiMedianGraph& graph, const PartitionSystem& system) {
    std::ostringstream os;
    os << "graph qmgraph {\n";
    std::vector<std::string> names(graph.vertices.size());
    int next_extra = 1;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        if (graph.labels[v].empty()) {
            names[v] = "e" + std::to_string(next_extra++);
        } else {
            std::string name;
            for (int x : graph.labels[v]) {
                if (!name.empty()) name += "+";
                name += system.ground().name(static_cast<std::size_t>(x));
            }
            names[v] = name;
        }
        os << "  \"" << names[v] << "\";\n";
    }
    for (const auto& e : graph.edges)
        os << "  \"" << names[static_cast<std::size_t>(e.u)] << "\" -- \""
           << names[static_cast<std::size_t>(e.v)] << "\" [label=\"P" << e.label + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace qmb
