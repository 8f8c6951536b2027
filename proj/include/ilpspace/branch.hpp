#ifndef ILPSPACE_BRANCH_HPP
#define ILPSPACE_BRANCH_HPP

// Support-halving recursion. A call with support budget s guesses the
// right-hand side b_l reached by the first half of the solution's support,
// solves both halves recursively with budgets floor(s/2) and ceil(s/2),
// and keeps the best sum. With the promise ||x*||_1 <= sigma the result is
// the lexicographically minimal optimal solution x*.
//
// Two guess strategies are provided:
//
//   Literal  every b_l in {-sigma*delta, ..., sigma*delta}^m, no pruning.
//   Pruned   only guesses that can be the split point of a solution with
//            ||x||_1 <= sigma. The guess source is either the tightened
//            per-row box or the set {A y : |supp y| <= floor(s/2),
//            ||y||_1 <= sigma}, whichever is smaller at that node, and the
//            l1 budget left over by the first half is passed to the second.
//
// Both return exactly x* whenever the promise holds. When it does not, any
// returned vector still satisfies A x = b and x >= 0.

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ilpspace/core.hpp"

namespace ilpspace {

enum class GuessStrategy { Literal, Pruned };

template <class Int>
struct BranchParams {
    Int sigma = 0;            // promised bound on ||x*||_1
    std::size_t support = 0;  // budget s on ||x||_0
};

/// Odometer over an integer box; the last coordinate moves fastest, so the
/// stream is lexicographic starting from the all-`lo` corner.
template <class Int>
class BoxCursor {
public:
    BoxCursor(std::vector<Int> lo, std::vector<Int> hi)
        : lo_(std::move(lo)), hi_(std::move(hi)), cur_(lo_) {
        for (std::size_t i = 0; i < lo_.size(); ++i)
            if (lo_[i] > hi_[i]) valid_ = false;
    }

    bool valid() const { return valid_; }
    std::span<const Int> value() const { return cur_; }

    void advance() {
        for (std::size_t i = cur_.size(); i-- > 0;) {
            if (cur_[i] < hi_[i]) {
                ++cur_[i];
                return;
            }
            cur_[i] = lo_[i];
        }
        valid_ = false;
    }

    /// Number of points in the box, as a double (only used for estimates).
    double volume() const {
        if (!valid_) return 0.0;
        double v = 1.0;
        for (std::size_t i = 0; i < lo_.size(); ++i)
            v *= static_cast<double>(Int(hi_[i] - lo_[i] + 1));
        return v;
    }

private:
    std::vector<Int> lo_;
    std::vector<Int> hi_;
    std::vector<Int> cur_;
    bool valid_ = true;
};

/// The guess stream {-sigma*delta, ..., sigma*delta}^m.
template <class Int>
BoxCursor<Int> guess_iter(const Int& sigma, const Int& delta, std::size_t m) {
    Int radius = sigma * delta;
    return BoxCursor<Int>(std::vector<Int>(m, Int(-radius)), std::vector<Int>(m, radius));
}

template <class Int>
class Brancher {
public:
    Brancher(const Instance<Int>& inst, GuessStrategy strategy = GuessStrategy::Pruned)
        : inst_(inst), strategy_(strategy), pos_(inst.m, Int(0)), neg_(inst.m, Int(0)) {
        for (std::size_t i = 0; i < inst.m; ++i) {
            for (std::size_t j = 0; j < inst.n; ++j) {
                const Int& v = inst.at(i, j);
                if (v > pos_[i]) pos_[i] = v;
                if (-v > neg_[i]) neg_[i] = -v;
            }
        }
        for (std::size_t j = 0; j < inst.n; ++j) {
            bool zero = true;
            for (std::size_t i = 0; i < inst.m; ++i) zero = zero && inst.at(i, j) == 0;
            if (!zero) nonzero_cols_.push_back(j);
        }
    }

    MaybeSolution<Int> run(std::span<const Int> rhs, const Int& sigma, std::size_t support) {
        if (sigma < 0) throw std::invalid_argument("branch: sigma must be nonnegative");
        return solve(rhs, sigma, support, 1);
    }

    /// Base case on its own, without the l1 cap of the pruned strategy.
    MaybeSolution<Int> base_case(std::span<const Int> rhs, std::size_t support) {
        ++metrics_.nodes_expanded;
        metrics_.max_depth = std::max<std::uint64_t>(metrics_.max_depth, 1);
        return base(rhs, support, std::nullopt);
    }

    Metrics metrics() const {
        Metrics out = metrics_;
        out.peak_live_words = meter_.peak();
        return out;
    }

private:
    std::size_t frame_words(std::span<const Int> rhs, const Int& sigma) const {
        std::size_t width = 1;
        if constexpr (is_big_v<Int>) {
            Int scale = norm_inf(rhs) + sigma * inst_.delta;
            width = words_of(scale);
        } else {
            (void)rhs;
            (void)sigma;
        }
        // guess + complement (2m), incumbent + two halves + y (4n), scalars
        return (2 * inst_.m + 4 * inst_.n + 8) * width;
    }

    static bool all_zero(std::span<const Int> v) {
        for (const Int& e : v)
            if (e != 0) return false;
        return true;
    }

    /// Lower bound on ||y||_1 over y >= 0 with A y = v; nullopt when a row's
    /// sign cannot be produced by any column.
    std::optional<Int> l1_lower_bound(std::span<const Int> v) const {
        Int best = 0;
        for (std::size_t i = 0; i < inst_.m; ++i) {
            if (v[i] > 0) {
                if (pos_[i] == 0) return std::nullopt;
                best = std::max(best, detail::ceil_div(v[i], pos_[i]));
            } else if (v[i] < 0) {
                if (neg_[i] == 0) return std::nullopt;
                best = std::max(best, detail::ceil_div(Int(-v[i]), neg_[i]));
            }
        }
        return best;
    }

    Solution<Int> zero_solution() const {
        Solution<Int> s;
        s.x.assign(inst_.n, Int(0));
        s.objective = 0;
        return s;
    }

    // Support 0: zero iff rhs = 0. Support 1: best z*e_j with z >= 0 and
    // z*A e_j = rhs; z = 0 is admissible when rhs = 0. Equal-cost ties go to
    // the largest column index, which is the lexicographically smaller vector.
    MaybeSolution<Int> base(std::span<const Int> rhs, std::size_t support,
                            const std::optional<Int>& cap) const {
        if (all_zero(rhs)) return zero_solution();
        if (support == 0) return std::nullopt;
        std::optional<std::size_t> best_col;
        Int best_z = 0;
        Int best_cost = 0;
        for (std::size_t j : nonzero_cols_) {
            std::size_t pivot = 0;
            while (inst_.at(pivot, j) == 0) ++pivot;
            const Int& a = inst_.at(pivot, j);
            if (rhs[pivot] % a != 0) continue;
            Int z = rhs[pivot] / a;
            if (z <= 0) continue;
            if (cap && z > *cap) continue;
            bool ok = true;
            for (std::size_t i = 0; i < inst_.m && ok; ++i) ok = inst_.at(i, j) * z == rhs[i];
            if (!ok) continue;
            Int cost = z * inst_.c[j];
            if (!best_col || cost <= best_cost) {
                best_col = j;
                best_z = z;
                best_cost = cost;
            }
        }
        if (!best_col) return std::nullopt;
        Solution<Int> s = zero_solution();
        s.x[*best_col] = best_z;
        s.objective = best_cost;
        return s;
    }

    MaybeSolution<Int> solve(std::span<const Int> rhs, const Int& sigma, std::size_t support,
                             std::size_t depth) {
        ++metrics_.nodes_expanded;
        metrics_.max_depth = std::max<std::uint64_t>(metrics_.max_depth, depth);
        WordCharge frame(meter_, frame_words(rhs, sigma));

        if (strategy_ == GuessStrategy::Literal) {
            if (support <= 1) return base(rhs, support, std::nullopt);
            return split_literal(rhs, sigma, support, depth);
        }

        if (all_zero(rhs)) return zero_solution();
        auto lower = l1_lower_bound(rhs);
        if (!lower || *lower > sigma) return std::nullopt;
        if (support <= 1) return base(rhs, support, sigma);
        return split_pruned(rhs, sigma, support, depth);
    }

    void consider(MaybeSolution<Int>& incumbent, const Solution<Int>& left,
                  const Solution<Int>& right) const {
        MaybeSolution<Int> sum(std::in_place);
        sum->x.resize(inst_.n);
        for (std::size_t j = 0; j < inst_.n; ++j) sum->x[j] = left.x[j] + right.x[j];
        sum->objective = left.objective + right.objective;
        if (better(sum, incumbent)) incumbent = std::move(sum);
    }

    MaybeSolution<Int> split_literal(std::span<const Int> rhs, const Int& sigma,
                                     std::size_t support, std::size_t depth) {
        const std::size_t left_support = support / 2;
        const std::size_t right_support = support - left_support;
        MaybeSolution<Int> best;
        std::vector<Int> complement(inst_.m);
        for (auto guess = guess_iter(sigma, inst_.delta, inst_.m); guess.valid(); guess.advance()) {
            auto left = solve(guess.value(), sigma, left_support, depth + 1);
            if (!left) continue;
            for (std::size_t i = 0; i < inst_.m; ++i) complement[i] = rhs[i] - guess.value()[i];
            auto right = solve(complement, sigma, right_support, depth + 1);
            if (!right) continue;
            consider(best, *left, *right);
        }
        return best;
    }

    // One pruned guess: the first half may use at most `left_budget` of the
    // l1 budget, the second half whatever the first half left over.
    void try_guess(std::span<const Int> rhs, std::span<const Int> guess, const Int& sigma,
                   const Int& left_budget, std::size_t support, std::size_t depth,
                   std::vector<Int>& complement, MaybeSolution<Int>& best) {
        const std::size_t left_support = support / 2;
        const std::size_t right_support = support - left_support;
        for (std::size_t i = 0; i < inst_.m; ++i) complement[i] = rhs[i] - guess[i];
        auto right_lower = l1_lower_bound(complement);
        if (!right_lower) return;
        Int budget = std::min(left_budget, Int(sigma - *right_lower));
        if (budget < 0) return;
        auto left = solve(guess, budget, left_support, depth + 1);
        if (!left) return;
        Int used = norm1<Int>(left->x);
        if (used > budget) return;
        auto right = solve(complement, Int(sigma - used), right_support, depth + 1);
        if (!right) return;
        consider(best, *left, *right);
    }

    double sparse_guess_count(const Int& sigma, std::size_t half) const {
        // sum_{j <= half} C(cols, j) * C(sigma, j)
        const double cols = static_cast<double>(nonzero_cols_.size());
        const double sig = static_cast<double>(sigma);
        double total = 0.0;
        double choose_cols = 1.0;
        double choose_sigma = 1.0;
        for (std::size_t j = 0; j <= half; ++j) {
            if (j > 0) {
                choose_cols *= (cols - static_cast<double>(j) + 1) / static_cast<double>(j);
                choose_sigma *= (sig - static_cast<double>(j) + 1) / static_cast<double>(j);
            }
            if (choose_cols <= 0 || choose_sigma <= 0) break;
            total += choose_cols * choose_sigma;
        }
        return total;
    }

    MaybeSolution<Int> split_pruned(std::span<const Int> rhs, const Int& sigma,
                                    std::size_t support, std::size_t depth) {
        std::vector<Int> lo(inst_.m), hi(inst_.m);
        for (std::size_t i = 0; i < inst_.m; ++i) {
            lo[i] = std::max(Int(-sigma * neg_[i]), Int(rhs[i] - sigma * pos_[i]));
            hi[i] = std::min(Int(sigma * pos_[i]), Int(rhs[i] + sigma * neg_[i]));
        }
        BoxCursor<Int> box(std::move(lo), std::move(hi));
        MaybeSolution<Int> best;
        std::vector<Int> complement(inst_.m);

        if (box.volume() <= sparse_guess_count(sigma, support / 2)) {
            for (; box.valid(); box.advance()) {
                auto own = l1_lower_bound(box.value());
                if (!own || *own > sigma) continue;
                try_guess(rhs, box.value(), sigma, sigma, support, depth, complement, best);
            }
            return best;
        }

        // Guesses A y for sparse y with ||y||_1 <= sigma, visited depth-first
        // over increasing column index.
        std::vector<Int> image(inst_.m, Int(0));
        const std::size_t half = support / 2;
        std::function<void(std::size_t, const Int&, std::size_t)> visit =
            [&](std::size_t from, const Int& used, std::size_t nonzeros) {
                try_guess(rhs, image, sigma, used, support, depth, complement, best);
                if (nonzeros == half) return;
                for (std::size_t k = from; k < nonzero_cols_.size(); ++k) {
                    const std::size_t j = nonzero_cols_[k];
                    Int amount = 0;
                    while (used + amount < sigma) {
                        ++amount;
                        for (std::size_t i = 0; i < inst_.m; ++i) image[i] += inst_.at(i, j);
                        visit(k + 1, Int(used + amount), nonzeros + 1);
                    }
                    for (std::size_t i = 0; i < inst_.m; ++i) image[i] -= amount * inst_.at(i, j);
                }
            };
        visit(0, Int(0), 0);
        return best;
    }

    const Instance<Int>& inst_;
    GuessStrategy strategy_;
    std::vector<Int> pos_;  // per row: max(0, max_j A_ij)
    std::vector<Int> neg_;  // per row: max(0, -min_j A_ij)
    std::vector<std::size_t> nonzero_cols_;
    Metrics metrics_;
    WordMeter meter_;
};

/// Runs the recursion on the instance's own right-hand side.
template <class Int>
MaybeSolution<Int> branch(const Instance<Int>& inst, const BranchParams<Int>& params,
                          Metrics& metrics, GuessStrategy strategy = GuessStrategy::Pruned) {
    Brancher<Int> solver(inst, strategy);
    auto result = solver.run(inst.b, params.sigma, params.support);
    metrics.merge(solver.metrics());
    return result;
}

template <class Int>
MaybeSolution<Int> base_case(const Instance<Int>& inst, std::size_t support) {
    if (support > 1) throw std::invalid_argument("base_case: support must be 0 or 1");
    Brancher<Int> solver(inst, GuessStrategy::Literal);
    return solver.base_case(inst.b, support);
}

}  // namespace ilpspace

#endif  // ILPSPACE_BRANCH_HPP
