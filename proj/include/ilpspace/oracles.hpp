#ifndef ILPSPACE_ORACLES_HPP
#define ILPSPACE_ORACLES_HPP

// Ground-truth engines used by the tests and by `ilpspace oracle`. None of
// them shares code with the recursion or the fixed-support solver.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ilpspace/core.hpp"
#include "ilpspace/ratlp.hpp"

namespace ilpspace {

struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumerates every x >= 0 with ||x||_1 <= cap in lexicographic order and
/// returns the first minimizer of c^T x among those with A x = b. Branches
/// whose residual is out of reach of the remaining columns are skipped.
/// With `first_feasible` the search stops at the lex-min feasible point.
template <class Int>
MaybeSolution<Int> brute_force_lexmin(const Instance<Int>& inst, const Int& cap,
                                      std::uint64_t node_budget = 50'000'000, bool first_feasible = false) {
    const std::size_t m = inst.m;
    const std::size_t n = inst.n;
    // suffix_pos[j][i]: max(0, max_{k >= j} A_ik); suffix_neg likewise.
    std::vector<std::vector<Int>> suffix_pos(n + 1, std::vector<Int>(m, Int(0)));
    std::vector<std::vector<Int>> suffix_neg(n + 1, std::vector<Int>(m, Int(0)));
    for (std::size_t j = n; j-- > 0;) {
        for (std::size_t i = 0; i < m; ++i) {
            suffix_pos[j][i] = std::max(suffix_pos[j + 1][i], inst.at(i, j));
            suffix_neg[j][i] = std::max(suffix_neg[j + 1][i], Int(-inst.at(i, j)));
        }
    }

    std::vector<Int> x(n, Int(0));
    std::vector<Int> residual = inst.b;
    MaybeSolution<Int> best;
    std::uint64_t visited = 0;

    auto reachable = [&](std::size_t j, const Int& budget) {
        for (std::size_t i = 0; i < m; ++i) {
            if (residual[i] > budget * suffix_pos[j][i]) return false;
            if (-residual[i] > budget * suffix_neg[j][i]) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t j, const Int& budget, const Int& cost) -> void {
        if (first_feasible && best) return;
        if (++visited > node_budget) throw OracleCapExceeded("brute force: node budget exhausted");
        if (j == n) {
            for (const Int& r : residual)
                if (r != 0) return;
            if (!best || cost < best->objective) best = Solution<Int>{x, cost};
            return;
        }
        for (Int v = 0; v <= budget; ++v) {
            x[j] = v;
            if (reachable(j + 1, Int(budget - v))) self(self, j + 1, Int(budget - v), Int(cost + v * inst.c[j]));
            for (std::size_t i = 0; i < m; ++i) residual[i] -= inst.at(i, j);
            if (first_feasible && best) {
                for (std::size_t i = 0; i < m; ++i) residual[i] += (v + 1) * inst.at(i, j);
                return;
            }
        }
        for (std::size_t i = 0; i < m; ++i) residual[i] += (budget + 1) * inst.at(i, j);
        x[j] = 0;
    };
    if (reachable(0, cap)) rec(rec, 0, cap, Int(0));
    return best;
}

namespace detail {

// Fraction-free (Bareiss) determinant of a square matrix.
inline BigInt determinant(std::vector<std::vector<BigInt>> mat) {
    const std::size_t n = mat.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (mat[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && mat[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(mat[r], mat[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
        prev = mat[k][k];
    }
    return sign * mat[n - 1][n - 1];
}

template <class Fn>
void combinations(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        fn(pick);
        std::size_t t = k;
        while (t > 0 && pick[t - 1] == n - k + t - 1) --t;
        if (t == 0) return;
        ++pick[t - 1];
        for (std::size_t r = t; r < k; ++r) pick[r] = pick[r - 1] + 1;
    }
}

}  // namespace detail

/// Proven cap on the l1 norm of the lex-min optimum of a bounded instance,
/// from Cramer's rule: the largest l1 norm of a basic feasible solution plus
/// the d largest l1 norms of primitive extreme rays of {r >= 0 : A r = 0},
/// d = n - rank(A) (Caratheodory). Any integer point minus the integral
/// parts of its ray coefficients stays feasible, no costlier and lex
/// smaller, so the lex-min optimum has all coefficients below one.
template <class Int>
BigInt oracle_l1_cap(const Instance<Int>& inst) {
    const std::size_t m = inst.m;
    const std::size_t n = inst.n;
    auto entry = [&](std::size_t i, std::size_t j) { return BigInt(inst.at(i, j)); };

    Rational best_vertex = 0;
    for (std::size_t size = 1; size <= std::min(m, n); ++size) {
        detail::combinations(n, size, [&](const std::vector<std::size_t>& cols) {
            bool done = false;
            detail::combinations(m, size, [&](const std::vector<std::size_t>& rows) {
                if (done) return;
                std::vector<std::vector<BigInt>> sq(size, std::vector<BigInt>(size));
                for (std::size_t r = 0; r < size; ++r)
                    for (std::size_t t = 0; t < size; ++t) sq[r][t] = entry(rows[r], cols[t]);
                BigInt det = detail::determinant(sq);
                if (det == 0) return;
                done = true;  // unique candidate point for this column set
                std::vector<Rational> y(size);
                for (std::size_t t = 0; t < size; ++t) {
                    auto swapped = sq;
                    for (std::size_t r = 0; r < size; ++r) swapped[r][t] = BigInt(inst.b[rows[r]]);
                    y[t] = Rational(detail::determinant(swapped)) / Rational(det);
                }
                for (const auto& v : y)
                    if (v < 0) return;
                for (std::size_t i = 0; i < m; ++i) {
                    Rational lhs = 0;
                    for (std::size_t t = 0; t < size; ++t) lhs += Rational(entry(i, cols[t])) * y[t];
                    if (lhs != Rational(BigInt(inst.b[i]))) return;
                }
                Rational l1 = 0;
                for (const auto& v : y) l1 += v;
                best_vertex = std::max(best_vertex, l1);
            });
        });
    }

    std::size_t rank = 0;
    for (std::size_t size = 1; size <= std::min(m, n) && rank + 1 == size; ++size) {
        detail::combinations(n, size, [&](const std::vector<std::size_t>& cols) {
            if (rank == size) return;
            detail::combinations(m, size, [&](const std::vector<std::size_t>& rows) {
                if (rank == size) return;
                std::vector<std::vector<BigInt>> sq(size, std::vector<BigInt>(size));
                for (std::size_t r = 0; r < size; ++r)
                    for (std::size_t t = 0; t < size; ++t) sq[r][t] = entry(rows[r], cols[t]);
                if (detail::determinant(sq) != 0) rank = size;
            });
        });
    }

    std::vector<BigInt> ray_norms;
    for (std::size_t size = 1; size <= std::min(m + 1, n); ++size) {
        detail::combinations(n, size, [&](const std::vector<std::size_t>& cols) {
            std::optional<std::vector<BigInt>> dir;
            if (size == 1) {
                bool zero = true;
                for (std::size_t i = 0; i < m; ++i) zero = zero && entry(i, cols[0]) == 0;
                if (zero) dir = std::vector<BigInt>{1};
            } else {
                detail::combinations(m, size - 1, [&](const std::vector<std::size_t>& rows) {
                    if (dir) return;
                    std::vector<BigInt> g(size);
                    bool nonzero = false;
                    for (std::size_t drop = 0; drop < size; ++drop) {
                        std::vector<std::vector<BigInt>> minor(size - 1);
                        for (std::size_t r = 0; r < size - 1; ++r)
                            for (std::size_t t = 0; t < size; ++t)
                                if (t != drop) minor[r].push_back(entry(rows[r], cols[t]));
                        g[drop] = (drop % 2 == 0 ? 1 : -1) * detail::determinant(minor);
                        nonzero = nonzero || g[drop] != 0;
                    }
                    if (nonzero) dir = std::move(g);
                });
            }
            if (!dir) return;
            for (std::size_t i = 0; i < m; ++i) {
                BigInt acc = 0;
                for (std::size_t t = 0; t < size; ++t) acc += entry(i, cols[t]) * (*dir)[t];
                if (acc != 0) return;
            }
            const bool all_pos = std::all_of(dir->begin(), dir->end(), [](const BigInt& v) { return v > 0; });
            const bool all_neg = std::all_of(dir->begin(), dir->end(), [](const BigInt& v) { return v < 0; });
            if (!all_pos && !all_neg) return;
            BigInt g = 0, sum = 0;
            for (const auto& v : *dir) g = boost::multiprecision::gcd(g, v);
            for (const auto& v : *dir) sum += boost::multiprecision::abs(v) / boost::multiprecision::abs(g);
            ray_norms.push_back(sum);
        });
    }
    std::sort(ray_norms.begin(), ray_norms.end(), std::greater<>());
    BigInt rays = 0;
    for (std::size_t k = 0; k < std::min(ray_norms.size(), n - rank); ++k) rays += ray_norms[k];
    BigInt floor_vertex = boost::multiprecision::numerator(best_vertex) / boost::multiprecision::denominator(best_vertex);
    return floor_vertex + rays;
}

/// Reference verdict: LP certificates for infeasible/unbounded relaxations,
/// brute force under the proven cap otherwise. A caller-supplied cap replaces
/// the proven one (the verdict is then only as good as that cap).
template <class Int>
SolveStatus<Int> oracle_solve(const Instance<Int>& inst, std::uint64_t node_budget = 50'000'000,
                              std::optional<BigInt> cap_override = std::nullopt) {
    SolveStatus<Int> out;
    LPResult lp = simplex_solve(inst);
    if (lp.status == LPStatus::Infeasible) {
        out.status = Status::Infeasible;
        return out;
    }
    Instance<Int> probe = inst;
    if (lp.status == LPStatus::Unbounded) std::fill(probe.c.begin(), probe.c.end(), Int(0));
    Int cap = narrow_int<Int>(cap_override ? *cap_override : oracle_l1_cap(probe));
    auto found = brute_force_lexmin(probe, cap, node_budget, lp.status == LPStatus::Unbounded);
    if (!found) {
        out.status = Status::Infeasible;
    } else if (lp.status == LPStatus::Unbounded) {
        out.status = Status::Unbounded;
    } else {
        out.status = Status::Optimal;
        out.solution = std::move(found);
    }
    return out;
}

template <class Int>
struct DpResult {
    MaybeSolution<Int> solution;
    std::uint64_t state_count = 0;
};

/// Shortest path over right-hand sides 0 <= v <= b with arcs v -> v + A_j
/// of weight (c_j, e_j); the lexicographic weight makes the path to b the
/// lex-min optimum. Requires A, b, c >= 0 and no zero column.
template <class Int>
DpResult<Int> dp_solve_nonneg(const Instance<Int>& inst) {
    for (const Int& v : inst.a)
        if (v < 0) throw std::invalid_argument("dp oracle: A must be nonnegative");
    for (const Int& v : inst.b)
        if (v < 0) throw std::invalid_argument("dp oracle: b must be nonnegative");
    for (const Int& v : inst.c)
        if (v < 0) throw std::invalid_argument("dp oracle: c must be nonnegative");
    for (std::size_t j = 0; j < inst.n; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < inst.m; ++i) zero = zero && inst.at(i, j) == 0;
        if (zero) throw std::invalid_argument("dp oracle: A has an all-zero column");
    }

    std::vector<std::size_t> extent(inst.m);
    std::size_t states = 1;
    for (std::size_t i = 0; i < inst.m; ++i) {
        extent[i] = static_cast<std::size_t>(narrow_int<std::int64_t>(BigInt(inst.b[i]))) + 1;
        states *= extent[i];
    }
    // label = (cost, x_1, ..., x_n); compared lexicographically
    using Label = std::vector<Int>;
    std::vector<std::optional<Label>> dist(states);
    dist[0] = Label(inst.n + 1, Int(0));

    std::vector<std::size_t> coord(inst.m, 0);
    for (std::size_t idx = 1; idx < states; ++idx) {
        for (std::size_t i = inst.m, rem = idx; i-- > 0;) {
            coord[i] = rem % extent[i];
            rem /= extent[i];
        }
        std::optional<Label> best;
        for (std::size_t j = 0; j < inst.n; ++j) {
            std::size_t prev = 0;
            bool ok = true;
            for (std::size_t i = 0; i < inst.m && ok; ++i) {
                Int p = Int(coord[i]) - inst.at(i, j);
                if (p < 0) ok = false;
                else prev = prev * extent[i] + static_cast<std::size_t>(narrow_int<std::int64_t>(BigInt(p)));
            }
            if (!ok || !dist[prev]) continue;
            Label cand = *dist[prev];
            cand[0] += inst.c[j];
            cand[j + 1] += 1;
            if (!best || lex_less(cand, *best)) best = std::move(cand);
        }
        dist[idx] = std::move(best);
    }

    DpResult<Int> out;
    out.state_count = states;
    if (const auto& target = dist[states - 1]) {
        Solution<Int> s;
        s.objective = (*target)[0];
        s.x.assign(target->begin() + 1, target->end());
        out.solution = std::move(s);
    }
    return out;
}

template <class Int>
bool check_support_bound(std::span<const Int> x, std::size_t m, const BigInt& delta) {
    return norm0<Int>(x) <= gamma_bound(m, delta);
}

}  // namespace ilpspace

#endif  // ILPSPACE_ORACLES_HPP
