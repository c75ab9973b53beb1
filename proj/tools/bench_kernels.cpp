// Compares the serial reference kernels with their OpenMP versions:
// the pairwise non-strong-compatibility grid and the brute-force vertex
// characterization. Results must agree; timings are printed per kernel.

#include <chrono>
#include <iostream>

#include "qmb/alignment.hpp"
#include "qmb/compat.hpp"
#include "qmb/oracle.hpp"
#include "qmb/random_system.hpp"

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
    using namespace qmb;

    {
        const auto alignment = random_alignment(1, 120, 3000, 4);
        const auto [system, report] = alignment_to_partition_system(alignment);
        (void)report;
        NscGraph serial, parallel;
        const double ts = time_ms([&] { serial = nsc_graph(system, Execution::serial); });
        const double tp = time_ms([&] { parallel = nsc_graph(system, Execution::parallel); });
        std::cout << "nsc_graph  m=" << system.size() << "  serial " << ts << " ms, parallel "
                  << tp << " ms, speedup " << ts / tp << "  edges "
                  << serial.edges.size() << (serial.edges == parallel.edges ? " (agree)" : " (DISAGREE)")
                  << "\n";
        if (!(serial.edges == parallel.edges)) return 1;
    }

    {
        RandomSystemParams params;
        params.max_n = 12;
        params.max_m = 11;
        params.max_parts = 3;
        params.mode = RandomSystemParams::Mode::incompatible;
        const auto system = random_system(3, params);
        std::vector<PMap> serial, parallel;
        const double ts =
            time_ms([&] { serial = characterized_vertices(system, 1 << 22, Execution::serial); });
        const double tp =
            time_ms([&] { parallel = characterized_vertices(system, 1 << 22, Execution::parallel); });
        std::cout << "characterized_vertices  m=" << system.size() << "  serial " << ts
                  << " ms, parallel " << tp << " ms, speedup " << ts / tp << "  vertices "
                  << serial.size() << (serial == parallel ? " (agree)" : " (DISAGREE)") << "\n";
        if (!(serial == parallel)) return 1;
    }
    return 0;
}
