#ifndef ILPSPACE_SMALLDIM_HPP
#define ILPSPACE_SMALLDIM_HPP

// Exact solver for an instance truncated to a fixed support S.
//
// The lexicographically minimal optimal solution y* of
//     min { c_S^T y : A_S y = b, y >= 0 integral }
// is found either by the support-halving recursion with an l1 promise
// sigma, or by a depth-first search over the coordinates of y in
// lexicographic order with exact LP bounds. Both need a sigma that is a
// proven bound on ||y*||_1; two are available:
//
//   compute_sigma_bound     (k+1) * (m * max(2, delta, ||b||_inf))^(2m+1)
//   geometric_sigma_bound   max l1 over the basic feasible solutions plus
//                           the l1 sum of the primitive extreme rays of
//                           {r >= 0 : A_S r = 0}
//
// The second holds because y* = v + sum_t lambda_t g_t with v in the convex
// hull of the basic solutions and every lambda_t < 1: if some lambda_t >= 1
// then y* - g_t is feasible, no more expensive (the relaxation is bounded),
// and lexicographically smaller.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ilpspace/branch.hpp"
#include "ilpspace/core.hpp"
#include "ilpspace/ratlp.hpp"

namespace ilpspace {

enum class FixedSupportMethod { Auto, Branch, Enumerate };

struct FixedSupportOptions {
    FixedSupportMethod method = FixedSupportMethod::Auto;
    // Auto uses the recursion while its estimated node count stays below this.
    double branch_node_limit = 1e6;
};

/// Columns S of `parent` (in parent order) with the parent's b and delta.
template <class Int>
Instance<Int> truncate(const Instance<Int>& parent, std::span<const std::size_t> columns) {
    Instance<Int> out(parent.m, columns.size());
    for (std::size_t i = 0; i < parent.m; ++i)
        for (std::size_t k = 0; k < columns.size(); ++k) out.at(i, k) = parent.at(i, columns[k]);
    for (std::size_t k = 0; k < columns.size(); ++k) out.c[k] = parent.c[columns[k]];
    out.b = parent.b;
    out.delta = parent.delta;
    return out;
}

template <class Int>
Solution<Int> embed(const Solution<Int>& local, std::span<const std::size_t> columns, std::size_t n) {
    Solution<Int> out;
    out.x.assign(n, Int(0));
    for (std::size_t k = 0; k < columns.size(); ++k) out.x[columns[k]] = local.x[k];
    out.objective = local.objective;
    return out;
}

inline BigInt compute_sigma_bound(std::size_t m, std::size_t support_size, const BigInt& delta,
                                  const BigInt& b_inf) {
    BigInt scale = std::max({BigInt(2), delta, b_inf});
    BigInt base = BigInt(m) * scale;
    return BigInt(support_size + 1) * boost::multiprecision::pow(base, static_cast<unsigned>(2 * m + 1));
}

template <class Int>
BigInt compute_sigma_bound(const Instance<Int>& truncated) {
    return compute_sigma_bound(truncated.m, truncated.n, BigInt(truncated.delta),
                               BigInt(norm_inf<Int>(truncated.b)));
}

namespace detail {

// Reduced row echelon form in place; returns the pivot column of each
// pivot row.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& mat, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < mat.size(); ++col) {
        std::size_t sel = row;
        while (sel < mat.size() && mat[sel][col] == 0) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[sel], mat[row]);
        Rational inv = 1 / mat[row][col];
        for (auto& v : mat[row]) v *= inv;
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == row || mat[i][col] == 0) continue;
            Rational f = mat[i][col];
            for (std::size_t j = 0; j < mat[i].size(); ++j) mat[i][j] -= f * mat[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline void for_each_subset(std::size_t n, std::size_t max_size,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!pick.empty()) fn(pick);
        if (pick.size() == max_size) return;
        for (std::size_t j = from; j < n; ++j) {
            pick.push_back(j);
            rec(j + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

inline BigInt lcm_of_denominators(const std::vector<Rational>& v) {
    BigInt l = 1;
    for (const auto& q : v) {
        BigInt d = boost::multiprecision::denominator(q);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    return l;
}

}  // namespace detail

template <class Int>
BigInt geometric_sigma_bound(const Instance<Int>& truncated) {
    const std::size_t m = truncated.m;
    const std::size_t k = truncated.n;
    auto column = [&](std::size_t i, std::size_t j) { return Rational(BigInt(truncated.at(i, j))); };

    bool feasible = std::all_of(truncated.b.begin(), truncated.b.end(), [](const Int& v) { return v == 0; });
    Rational vertex_l1 = 0;
    detail::for_each_subset(k, std::min(m, k), [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(cols.size() + 1));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t t = 0; t < cols.size(); ++t) mat[i][t] = column(i, cols[t]);
            mat[i][cols.size()] = Rational(BigInt(truncated.b[i]));
        }
        auto piv = detail::rref(mat, cols.size() + 1);
        if (piv.size() != cols.size() || (!piv.empty() && piv.back() == cols.size())) return;
        Rational l1 = 0;
        for (std::size_t r = 0; r < piv.size(); ++r) {
            const Rational& v = mat[r][cols.size()];
            if (v < 0) return;
            l1 += v;
        }
        feasible = true;
        vertex_l1 = std::max(vertex_l1, l1);
    });
    if (!feasible) return 0;

    BigInt rays = 0;
    detail::for_each_subset(k, std::min(m + 1, k), [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(cols.size()));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t t = 0; t < cols.size(); ++t) mat[i][t] = column(i, cols[t]);
        auto piv = detail::rref(mat, cols.size());
        if (piv.size() + 1 != cols.size()) return;
        std::size_t free_col = 0;
        while (free_col < piv.size() && piv[free_col] == free_col) ++free_col;
        std::vector<Rational> dir(cols.size(), Rational(0));
        dir[free_col] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) dir[piv[r]] = -mat[r][free_col];
        bool positive = std::all_of(dir.begin(), dir.end(), [](const Rational& q) { return q > 0; });
        if (!positive) return;
        BigInt scale = detail::lcm_of_denominators(dir);
        BigInt g = 0;
        std::vector<BigInt> ints;
        for (const auto& q : dir) {
            BigInt v = boost::multiprecision::numerator(q) * (scale / boost::multiprecision::denominator(q));
            g = boost::multiprecision::gcd(g, v);
            ints.push_back(v);
        }
        for (const auto& v : ints) rays += v / g;
    });

    BigInt floor_vertex = boost::multiprecision::numerator(vertex_l1) / boost::multiprecision::denominator(vertex_l1);
    return floor_vertex + rays;
}

/// Depth-first search over y_1, y_2, ... in increasing order with exact LP
/// bounds; the first solution reached at each strictly better cost is the
/// lexicographically smallest one at that cost.
template <class Int>
class FixedSupportSearch {
public:
    FixedSupportSearch(const Instance<Int>& truncated, BigInt sigma)
        : inst_(truncated), sigma_(std::move(sigma)), values_(truncated.n, BigInt(0)) {}

    MaybeSolution<Int> run() {
        std::vector<BigInt> residual(inst_.m);
        for (std::size_t i = 0; i < inst_.m; ++i) residual[i] = BigInt(inst_.b[i]);
        dfs(0, residual, sigma_, BigInt(0), 1);
        if (!best_) return std::nullopt;
        Solution<Int> out;
        out.x.reserve(inst_.n);
        for (const auto& v : *best_) out.x.push_back(narrow_int<Int>(v));
        out.objective = narrow_int<Int>(best_cost_);
        return out;
    }

    Metrics metrics() const {
        Metrics out = metrics_;
        out.peak_live_words = meter_.peak();
        return out;
    }

private:
    RationalLP relaxation(std::size_t from, const std::vector<BigInt>& residual, const BigInt& budget) const {
        const std::size_t vars = inst_.n - from;
        RationalLP lp(inst_.m + 1, vars + 1);
        for (std::size_t i = 0; i < inst_.m; ++i) {
            for (std::size_t t = 0; t < vars; ++t) lp.at(i, t) = Rational(BigInt(inst_.at(i, from + t)));
            lp.b[i] = Rational(residual[i]);
        }
        for (std::size_t t = 0; t <= vars; ++t) lp.at(inst_.m, t) = 1;  // l1 row with slack
        lp.b[inst_.m] = Rational(budget);
        return lp;
    }

    static BigInt ceil_rational(const Rational& q) {
        BigInt num = boost::multiprecision::numerator(q);
        BigInt den = boost::multiprecision::denominator(q);
        return detail::ceil_div(num, den);
    }
    static BigInt floor_rational(const Rational& q) {
        return detail::floor_div(BigInt(boost::multiprecision::numerator(q)),
                                 BigInt(boost::multiprecision::denominator(q)));
    }

    void dfs(std::size_t j, std::vector<BigInt>& residual, const BigInt& budget, const BigInt& cost,
             std::size_t depth) {
        ++metrics_.nodes_expanded;
        WordCharge frame(meter_, inst_.m + inst_.n + 4);
        if (j == inst_.n) {
            bool exact = std::all_of(residual.begin(), residual.end(), [](const BigInt& v) { return v == 0; });
            if (exact && budget >= 0 && (!best_ || cost < best_cost_)) {
                best_ = values_;
                best_cost_ = cost;
            }
            return;
        }
        RationalLP lp = relaxation(j, residual, budget);
        for (std::size_t t = 0; t + j < inst_.n; ++t) lp.c[t] = Rational(BigInt(inst_.c[j + t]));
        LPResult bound = simplex_solve(lp, &meter_);
        if (bound.status != LPStatus::Optimal) return;
        if (best_ && ceil_rational(bound.value + Rational(cost)) >= best_cost_) return;

        std::fill(lp.c.begin(), lp.c.end(), Rational(0));
        lp.c[0] = 1;
        BigInt lo = ceil_rational(simplex_solve(lp, &meter_).value);
        lp.c[0] = -1;
        BigInt hi = floor_rational(-simplex_solve(lp, &meter_).value);

        const BigInt col_cost = BigInt(inst_.c[j]);
        for (BigInt v = lo; v <= hi; ++v) {
            values_[j] = v;
            for (std::size_t i = 0; i < inst_.m; ++i) residual[i] -= v * BigInt(inst_.at(i, j));
            dfs(j + 1, residual, BigInt(budget - v), BigInt(cost + v * col_cost), depth + 1);
            for (std::size_t i = 0; i < inst_.m; ++i) residual[i] += v * BigInt(inst_.at(i, j));
        }
        values_[j] = 0;
    }

    const Instance<Int>& inst_;
    BigInt sigma_;
    std::vector<BigInt> values_;
    std::optional<std::vector<BigInt>> best_;
    BigInt best_cost_ = 0;
    Metrics metrics_;
    WordMeter meter_;
};

/// Rough node count of the pruned recursion with promise sigma and support
/// budget s on this instance; used to pick a method.
template <class Int>
double estimate_branch_nodes(const Instance<Int>& truncated, const BigInt& sigma, std::size_t support) {
    if (support <= 1) return 1.0;
    double box = 1.0;
    for (std::size_t i = 0; i < truncated.m; ++i) {
        BigInt pos = 0, neg = 0;
        for (std::size_t j = 0; j < truncated.n; ++j) {
            BigInt v = BigInt(truncated.at(i, j));
            pos = std::max(pos, v);
            neg = std::max(neg, BigInt(-v));
        }
        BigInt rhs = BigInt(truncated.b[i]);
        BigInt lo = std::max(BigInt(-sigma * neg), BigInt(rhs - sigma * pos));
        BigInt hi = std::min(BigInt(sigma * pos), BigInt(rhs + sigma * neg));
        box *= hi < lo ? 0.0 : static_cast<double>(BigInt(hi - lo + 1));
    }
    double sparse = 0.0, cc = 1.0, cs = 1.0;
    const double sig = static_cast<double>(sigma);
    const double cols = static_cast<double>(truncated.n);
    for (std::size_t j = 0; j <= support / 2; ++j) {
        if (j > 0) {
            cc *= (cols - static_cast<double>(j) + 1) / static_cast<double>(j);
            cs *= (sig - static_cast<double>(j) + 1) / static_cast<double>(j);
        }
        if (cc <= 0 || cs <= 0) break;
        sparse += cc * cs;
    }
    const double guesses = std::min(box, sparse);
    std::function<double(std::size_t)> work = [&](std::size_t s) -> double {
        if (s <= 1) return 1.0;
        return 1.0 + guesses * (work(s / 2) + work(s - s / 2));
    };
    return work(support);
}

/// sigma used for a truncated instance: the smaller of the two proven bounds.
template <class Int>
BigInt fixed_support_sigma(const Instance<Int>& truncated) {
    return std::min(compute_sigma_bound(truncated), geometric_sigma_bound(truncated));
}

/// Lexicographically minimal optimal solution over the columns in `columns`,
/// re-embedded into length-n coordinates. The truncated problem must be
/// bounded (the pipeline certifies this with the LP relaxation).
template <class Int>
MaybeSolution<Int> solve_fixed_support(const Instance<Int>& inst, std::span<const std::size_t> columns,
                                       Metrics& metrics, const FixedSupportOptions& options = {}) {
    if (columns.empty()) {
        bool zero = std::all_of(inst.b.begin(), inst.b.end(), [](const Int& v) { return v == 0; });
        if (!zero) return std::nullopt;
        Solution<Int> s;
        s.x.assign(inst.n, Int(0));
        return s;
    }
    Instance<Int> local = truncate(inst, columns);
    BigInt sigma = fixed_support_sigma(local);
    const std::size_t support = columns.size();

    FixedSupportMethod method = options.method;
    if (method == FixedSupportMethod::Auto) {
        method = estimate_branch_nodes(local, sigma, support) <= options.branch_node_limit
                     ? FixedSupportMethod::Branch
                     : FixedSupportMethod::Enumerate;
    }

    MaybeSolution<Int> result;
    if (method == FixedSupportMethod::Branch) {
        Brancher<Int> solver(local, GuessStrategy::Pruned);
        result = solver.run(local.b, narrow_int<Int>(sigma), support);
        metrics.merge(solver.metrics());
    } else {
        FixedSupportSearch<Int> search(local, sigma);
        result = search.run();
        metrics.merge(search.metrics());
    }
    if (!result) return std::nullopt;
    return embed(*result, columns, inst.n);
}

}  // namespace ilpspace

#endif  // ILPSPACE_SMALLDIM_HPP
