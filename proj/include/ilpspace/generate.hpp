#ifndef ILPSPACE_GENERATE_HPP
#define ILPSPACE_GENERATE_HPP

// Seeded random instances.
//
//   general   A in [-delta, delta], b in [-bmax, bmax], c in [-cmax, cmax]
//   nonneg    A in [0, delta] with no zero column, b in [0, bmax],
//             c in [0, cmax]; meets the dynamic-programming preconditions
//   knapsack  nonneg with A in [1, delta] (every column strictly positive)

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "ilpspace/core.hpp"

namespace ilpspace {

enum class Family { General, Nonneg, Knapsack };

inline Family parse_family(const std::string& name) {
    if (name == "general") return Family::General;
    if (name == "nonneg") return Family::Nonneg;
    if (name == "knapsack") return Family::Knapsack;
    throw std::invalid_argument("unknown family '" + name + "' (expected general, nonneg or knapsack)");
}

inline const char* to_string(Family f) {
    switch (f) {
        case Family::General: return "general";
        case Family::Nonneg: return "nonneg";
        case Family::Knapsack: return "knapsack";
    }
    return "?";
}

struct GeneratorParams {
    std::uint64_t seed = 1;
    std::size_t m = 1;
    std::size_t n = 3;
    std::int64_t delta = 2;
    std::int64_t bmax = 8;
    std::int64_t cmax = 4;
    Family family = Family::General;
};

inline Instance<BigInt> generate_instance(const GeneratorParams& p) {
    if (p.m == 0 || p.n == 0) throw std::invalid_argument("m and n must be positive");
    if (p.delta < 2) throw std::invalid_argument("delta must be at least 2");
    if (p.bmax < 0 || p.cmax < 0) throw std::invalid_argument("bmax and cmax must be non-negative");

    std::mt19937_64 rng(p.seed);
    auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };

    Instance<BigInt> inst(p.m, p.n);
    const bool signed_family = p.family == Family::General;
    const std::int64_t a_lo = signed_family ? -p.delta : (p.family == Family::Knapsack ? 1 : 0);
    for (std::size_t j = 0; j < p.n; ++j) {
        do {
            for (std::size_t i = 0; i < p.m; ++i) inst.at(i, j) = draw(a_lo, p.delta);
        } while (p.family == Family::Nonneg && [&] {
            for (std::size_t i = 0; i < p.m; ++i)
                if (inst.at(i, j) != 0) return false;
            return true;
        }());
    }
    for (auto& v : inst.b) v = draw(signed_family ? -p.bmax : 0, p.bmax);
    for (auto& v : inst.c) v = draw(signed_family ? -p.cmax : 0, p.cmax);
    inst.delta = std::max(BigInt(p.delta), inst.max_abs_entry());
    return inst;
}

}  // namespace ilpspace

#endif  // ILPSPACE_GENERATE_HPP
