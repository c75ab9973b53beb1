#include "qmb/random_system.hpp"

#include <map>
#include <random>

#include "qmb/compat.hpp"

namespace qmb {

namespace {

Partition random_partition(std::mt19937_64& rng, std::size_t n, int max_parts) {
    while (true) {
        const int nparts = std::uniform_int_distribution<int>(2, max_parts)(rng);
        std::vector<Bitset> parts(static_cast<std::size_t>(nparts), Bitset(n));
        for (std::size_t e = 0; e < n; ++e)
            parts[static_cast<std::size_t>(
                      std::uniform_int_distribution<int>(0, nparts - 1)(rng))]
                .set(e);
        std::vector<Bitset> nonempty;
        for (auto& p : parts)
            if (!p.none()) nonempty.push_back(std::move(p));
        if (nonempty.size() >= 2) return Partition(n, std::move(nonempty));
    }
}

}  // namespace

PartitionSystem random_system(std::uint64_t seed, const RandomSystemParams& params) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
    const int n = std::uniform_int_distribution<int>(2, params.max_n)(rng);
    const int m = std::uniform_int_distribution<int>(1, params.max_m)(rng);

    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("s" + std::to_string(i + 1));
    PartitionSystem system{GroundSet{names}};

    std::vector<Partition> accepted;
    const int attempts_per_slot = 200;
    for (int i = 0; i < m; ++i) {
        for (int attempt = 0; attempt < attempts_per_slot; ++attempt) {
            Partition cand = random_partition(rng, static_cast<std::size_t>(n), params.max_parts);
            bool ok = true;
            for (const auto& prev : accepted) {
                if (cand == prev) { ok = false; break; }
                const bool sc = strongly_compatible(cand, prev).compatible;
                if (params.mode == RandomSystemParams::Mode::compatible && !sc) { ok = false; break; }
                if (params.mode == RandomSystemParams::Mode::incompatible && sc) { ok = false; break; }
            }
            if (ok) {
                accepted.push_back(std::move(cand));
                break;
            }
        }
    }
    for (auto& p : accepted) system.add(std::move(p));
    return system;
}

Alignment random_alignment(std::uint64_t seed, int rows, int cols, int alphabet) {
    static const char letters[] = "ACGTRYKMSW";
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 7);
    Alignment a;
    for (int r = 0; r < rows; ++r) {
        a.names.push_back("s" + std::to_string(r + 1));
        std::string row(static_cast<std::size_t>(cols), 'A');
        for (auto& c : row)
            c = letters[std::uniform_int_distribution<int>(0, alphabet - 1)(rng)];
        a.rows.push_back(std::move(row));
    }
    return a;
}

}  // namespace qmb
