#ifndef ILPSPACE_RATLP_HPP
#define ILPSPACE_RATLP_HPP

// Exact two-phase primal simplex over the rationals for
//
//     min { c^T x : A x = b, x >= 0 }.
//
// Bland's rule picks both the entering column (smallest index with negative
// reduced cost) and the leaving row (smallest basic index among minimum
// ratios), so the method terminates on degenerate problems without any
// perturbation.

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ilpspace/core.hpp"

namespace ilpspace {

using Rational = boost::multiprecision::cpp_rational;

enum class LPStatus { Infeasible, Unbounded, Optimal };

inline const char* to_string(LPStatus s) {
    switch (s) {
        case LPStatus::Infeasible: return "INFEASIBLE";
        case LPStatus::Unbounded: return "UNBOUNDED";
        case LPStatus::Optimal: return "OPTIMAL";
    }
    return "?";
}

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value = 0;            // optimal objective
    std::vector<Rational> vertex;  // optimal basic solution
    std::vector<Rational> point;   // feasible point (optimal or unbounded)
    std::vector<Rational> ray;     // improving ray when unbounded
};

/// Dense row-major rational LP in equality form.
struct RationalLP {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Rational> a;
    std::vector<Rational> b;
    std::vector<Rational> c;

    RationalLP() = default;
    RationalLP(std::size_t rows, std::size_t cols) : m(rows), n(cols), a(rows * cols), b(rows), c(cols) {}

    Rational& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

namespace detail {

class Tableau {
public:
    // Columns: n structural, then one artificial per row, then the rhs.
    explicit Tableau(const RationalLP& lp) : m_(lp.m), n_(lp.n), width_(lp.n + lp.m + 1) {
        cells_.assign(m_ * width_, Rational(0));
        basis_.resize(m_);
        active_.assign(m_, true);
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = lp.b[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) cell(i, j) = flip ? Rational(-lp.at(i, j)) : lp.at(i, j);
            cell(i, n_ + i) = 1;
            cell(i, rhs_col()) = flip ? Rational(-lp.b[i]) : lp.b[i];
            basis_[i] = n_ + i;
        }
    }

    std::size_t words() const { return 2 * cells_.size(); }

    // Returns nullopt when optimal, otherwise the entering column of an
    // unbounded direction.
    std::optional<std::size_t> optimize(const std::vector<Rational>& cost, std::size_t allowed_cols) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < allowed_cols && !entering; ++j) {
                if (is_basic(j)) continue;
                if (reduced_cost(cost, j) < 0) entering = j;
            }
            if (!entering) return std::nullopt;
            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (!active_[i] || cell(i, *entering) <= 0) continue;
                Rational ratio = cell(i, rhs_col()) / cell(i, *entering);
                if (!leaving || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (!leaving) return entering;
            pivot(*leaving, *entering);
        }
    }

    Rational objective(const std::vector<Rational>& cost) const {
        Rational v = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (active_[i]) v += cost[basis_[i]] * cell(i, rhs_col());
        return v;
    }

    // After phase one: pivot artificials out of the basis, or drop their row
    // when it is a combination of the others.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (!active_[i] || basis_[i] < n_) continue;
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < n_ && !col; ++j)
                if (cell(i, j) != 0) col = j;
            if (col)
                pivot(i, *col);
            else
                active_[i] = false;
        }
    }

    std::vector<Rational> basic_solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (active_[i] && basis_[i] < n_) x[basis_[i]] = cell(i, rhs_col());
        return x;
    }

    std::vector<Rational> ray(std::size_t entering) const {
        std::vector<Rational> r(n_, Rational(0));
        r[entering] = 1;
        for (std::size_t i = 0; i < m_; ++i)
            if (active_[i] && basis_[i] < n_) r[basis_[i]] = -cell(i, entering);
        return r;
    }

    std::size_t structural() const { return n_; }
    std::size_t rows() const { return m_; }

private:
    std::size_t rhs_col() const { return width_ - 1; }
    Rational& cell(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
    const Rational& cell(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }

    bool is_basic(std::size_t j) const {
        for (std::size_t i = 0; i < m_; ++i)
            if (active_[i] && basis_[i] == j) return true;
        return false;
    }

    Rational reduced_cost(const std::vector<Rational>& cost, std::size_t j) const {
        Rational d = cost[j];
        for (std::size_t i = 0; i < m_; ++i)
            if (active_[i] && cell(i, j) != 0) d -= cost[basis_[i]] * cell(i, j);
        return d;
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = 1 / cell(row, col);
        for (std::size_t j = 0; j < width_; ++j)
            if (cell(row, j) != 0) cell(row, j) *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || !active_[i] || cell(i, col) == 0) continue;
            Rational factor = cell(i, col);
            for (std::size_t j = 0; j < width_; ++j)
                if (cell(row, j) != 0) cell(i, j) -= factor * cell(row, j);
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    std::vector<Rational> cells_;
    std::vector<std::size_t> basis_;
    std::vector<bool> active_;
};

}  // namespace detail

inline LPResult simplex_solve(const RationalLP& lp, WordMeter* meter = nullptr) {
    detail::Tableau tab(lp);
    std::optional<WordCharge> charge;
    if (meter) charge.emplace(*meter, tab.words());

    LPResult result;
    const std::size_t total = lp.n + lp.m;
    std::vector<Rational> phase_one(total, Rational(0));
    for (std::size_t i = 0; i < lp.m; ++i) phase_one[lp.n + i] = 1;
    tab.optimize(phase_one, total);  // bounded below by zero
    if (tab.objective(phase_one) != 0) {
        result.status = LPStatus::Infeasible;
        return result;
    }
    tab.expel_artificials();

    std::vector<Rational> cost(total, Rational(0));
    for (std::size_t j = 0; j < lp.n; ++j) cost[j] = lp.c[j];
    auto entering = tab.optimize(cost, lp.n);
    result.point = tab.basic_solution();
    if (entering) {
        result.status = LPStatus::Unbounded;
        result.ray = tab.ray(*entering);
        return result;
    }
    result.status = LPStatus::Optimal;
    result.vertex = result.point;
    result.value = tab.objective(cost);
    return result;
}

template <class Int>
RationalLP to_rational_lp(const Instance<Int>& inst) {
    RationalLP lp(inst.m, inst.n);
    for (std::size_t k = 0; k < inst.a.size(); ++k) lp.a[k] = Rational(BigInt(inst.a[k]));
    for (std::size_t i = 0; i < inst.m; ++i) lp.b[i] = Rational(BigInt(inst.b[i]));
    for (std::size_t j = 0; j < inst.n; ++j) lp.c[j] = Rational(BigInt(inst.c[j]));
    return lp;
}

/// LP relaxation of an integer program.
template <class Int>
LPResult simplex_solve(const Instance<Int>& inst, WordMeter* meter = nullptr) {
    return simplex_solve(to_rational_lp(inst), meter);
}

}  // namespace ilpspace

#endif  // ILPSPACE_RATLP_HPP
