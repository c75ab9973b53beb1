#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qmb/alignment.hpp"
#include "qmb/compat.hpp"
#include "qmb/decomposition.hpp"
#include "qmb/dot_export.hpp"
#include "qmb/json_io.hpp"
#include "qmb/match.hpp"
#include "qmb/oracle.hpp"
#include "qmb/random_system.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;

struct Options {
    std::string input;
    std::string output;
    std::string format = "fasta";
    std::string gap_policy = "letter";
    std::string what = "nsc";
    std::string seeds;
    std::size_t budget = 200000;
    int max_n = 7;
    int max_m = 6;
    int max_parts = 3;
};

qmb::Alignment load_alignment(const Options& opt) {
    std::ifstream in(opt.input);
    if (!in) throw qmb::ParseError("cannot open " + opt.input, 0);
    return qmb::parse_alignment(
        in, opt.format == "table" ? qmb::AlignmentFormat::table : qmb::AlignmentFormat::fasta);
}

std::pair<qmb::PartitionSystem, qmb::RecodingReport> load_system(const Options& opt) {
    const auto a = load_alignment(opt);
    return qmb::alignment_to_partition_system(
        a, opt.gap_policy == "drop-column" ? qmb::GapPolicy::drop_column : qmb::GapPolicy::letter);
}

void write_out(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opt.output);
    out << text;
}

int cmd_decompose(const Options& opt) {
    const auto [system, report] = load_system(opt);
    const auto state = qmb::decompose(system);
    auto doc = qmb::decomposition_to_json(state, &report);
    if (system.size() == 0)
        doc["report"]["warnings"] = {"no informative columns; decomposition is empty"};
    write_out(opt, doc.dump(2) + "\n");
    return kExitOk;
}

int oracle_one(const qmb::PartitionSystem& system, std::size_t budget, const std::string& tag) {
    const auto report = qmb::verify_against_oracle(system, budget);
    if (report.match) {
        std::cout << tag << "MATCH\n";
        return kExitOk;
    }
    std::cout << tag << "MISMATCH\n" << report.details;
    return kExitMismatch;
}

int cmd_oracle(const Options& opt) {
    if (!opt.seeds.empty()) {
        const auto sep = opt.seeds.find("..");
        if (sep == std::string::npos) {
            std::cerr << "--seeds expects A..B\n";
            return kExitUsage;
        }
        const std::uint64_t lo = std::stoull(opt.seeds.substr(0, sep));
        const std::uint64_t hi = std::stoull(opt.seeds.substr(sep + 2));
        qmb::RandomSystemParams params;
        params.max_n = opt.max_n;
        params.max_m = opt.max_m;
        params.max_parts = opt.max_parts;
        int mismatches = 0;
        for (std::uint64_t seed = lo; seed <= hi; ++seed) {
            const auto system = qmb::random_system(seed, params);
            if (oracle_one(system, opt.budget, "seed " + std::to_string(seed) + ": ") != kExitOk)
                ++mismatches;
        }
        std::cout << (hi - lo + 1 - static_cast<std::uint64_t>(mismatches)) << "/" << (hi - lo + 1)
                  << " MATCH\n";
        return mismatches == 0 ? kExitOk : kExitMismatch;
    }
    const auto [system, report] = load_system(opt);
    (void)report;
    return oracle_one(system, opt.budget, "");
}

int cmd_export_dot(const Options& opt) {
    const auto [system, report] = load_system(opt);
    (void)report;
    if (opt.what == "nsc") {
        write_out(opt, qmb::nsc_to_dot(system, qmb::nsc_graph(system)));
    } else {
        const auto graph = qmb::oracle_graph(system, opt.budget);
        write_out(opt, qmb::qm_graph_to_dot(graph, system));
    }
    return kExitOk;
}

int cmd_stats(const Options& opt) {
    const auto [system, report] = load_system(opt);
    (void)report;
    const auto state = qmb::decompose(system);
    const std::size_t n = system.ground().size();
    std::size_t k = 0;
    for (std::size_t i = 0; i < system.size(); ++i)
        k = std::max(k, system.partition(static_cast<int>(i)).part_count());
    std::cout << "n=" << n << "\n";
    std::cout << "m=" << system.size() << "\n";
    std::cout << "k=" << k << "\n";
    std::cout << "blocks=" << state.blocks().size() << "\n";
    std::cout << "extra_vertices=" << state.extra_vertices().size() << "\n";
    std::cout << "block_bound=" << (n >= 2 ? 3 * n - 5 : 0) << "\n";
    std::cout << "extra_vertex_bound=" << (n >= 2 ? 3 * n - 6 : 0) << "\n";
    for (const auto& [bid, b] : state.blocks())
        std::cout << "block " << bid << ": partitions=" << b.parts.size()
                  << " x=" << b.members_x.count() << " s=" << b.members_s.size() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block decomposition of the quasi-median graph of a sequence alignment"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* in = cmd->add_option("--input", opt.input, "alignment file");
        if (needs_input) in->required();
        cmd->add_option("--format", opt.format, "fasta|table")
            ->check(CLI::IsMember({"fasta", "table"}));
        cmd->add_option("--gap-policy", opt.gap_policy, "letter|drop-column")
            ->check(CLI::IsMember({"letter", "drop-column"}));
        cmd->add_option("--output", opt.output, "output file (default stdout)");
        cmd->add_option("--budget", opt.budget, "oracle vertex budget")
            ->check(CLI::PositiveNumber);
    };

    auto* decompose_cmd = app.add_subcommand("decompose", "compute the block decomposition (JSON)");
    add_common(decompose_cmd, true);

    auto* oracle_cmd =
        app.add_subcommand("oracle", "compare the fast decomposition with the explicit graph");
    add_common(oracle_cmd, false);
    oracle_cmd->add_option("--seeds", opt.seeds, "fuzz seed range A..B");
    oracle_cmd->add_option("--max-n", opt.max_n, "fuzz: max ground-set size");
    oracle_cmd->add_option("--max-m", opt.max_m, "fuzz: max partition count");
    oracle_cmd->add_option("--max-parts", opt.max_parts, "fuzz: max parts per partition");

    auto* dot_cmd = app.add_subcommand("export-dot", "export a graph in DOT format");
    add_common(dot_cmd, true);
    dot_cmd->add_option("--what", opt.what, "nsc|qmgraph")
        ->check(CLI::IsMember({"nsc", "qmgraph"}));

    auto* stats_cmd = app.add_subcommand("stats", "print sizes and bounds");
    add_common(stats_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(decompose_cmd)) return cmd_decompose(opt);
        if (app.got_subcommand(oracle_cmd)) {
            if (opt.seeds.empty() && opt.input.empty()) {
                std::cerr << "oracle requires --input or --seeds\n";
                return kExitUsage;
            }
            return cmd_oracle(opt);
        }
        if (app.got_subcommand(dot_cmd)) return cmd_export_dot(opt);
        if (app.got_subcommand(stats_cmd)) return cmd_stats(opt);
    } catch (const qmb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qmb::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
