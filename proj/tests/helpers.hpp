#ifndef ILPSPACE_TESTS_HELPERS_HPP
#define ILPSPACE_TESTS_HELPERS_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ilpspace/core.hpp"
#include "ilpspace/generate.hpp"

namespace ilpspace::testing {

using I64 = std::int64_t;

template <class Int = I64>
Instance<Int> make(std::initializer_list<std::initializer_list<I64>> rows, std::initializer_list<I64> b,
                   std::initializer_list<I64> c) {
    const std::size_t m = rows.size();
    const std::size_t n = rows.begin()->size();
    Instance<Int> inst(m, n);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (I64 v : row) inst.at(i, j++) = Int(v);
        ++i;
    }
    std::size_t k = 0;
    for (I64 v : b) inst.b[k++] = Int(v);
    k = 0;
    for (I64 v : c) inst.c[k++] = Int(v);
    inst.delta = std::max(Int(2), inst.max_abs_entry());
    return inst;
}

template <class Int = I64>
std::vector<Int> vec(std::initializer_list<I64> values) {
    std::vector<Int> out;
    for (I64 v : values) out.push_back(Int(v));
    return out;
}

/// The small random instances used throughout the property tests:
/// n <= 6, delta <= 3, ||b||_inf <= 8, ||c||_inf <= 4.
inline Instance<I64> small_instance(std::size_t m, std::uint64_t seed) {
    GeneratorParams p;
    p.seed = seed;
    p.m = m;
    p.n = 1 + seed % 6;
    p.delta = 2 + static_cast<I64>((seed / 6) % 2);
    p.bmax = 8;
    p.cmax = 4;
    return convert_instance<I64>(generate_instance(p));
}

}  // namespace ilpspace::testing

#endif  // ILPSPACE_TESTS_HELPERS_HPP
