#ifndef ILPSPACE_CANDIDATES_HPP
#define ILPSPACE_CANDIDATES_HPP

// Streaming candidate supports for a fixed (A, c).
//
// For every right-hand side b' whose lexicographically minimal optimal
// solution x' is a 0/1 vector, x' is emitted together with b' = A x'. The
// indicator of the support of any lex-min optimum x* has this property for
// b' = A * 1_supp(x*), so the supports of all lex-min optima are covered.
// Nothing is stored: each cell is decided by one call to the recursion.
//
// Two cell domains produce the same set of candidates:
//
//   Box      b' ranges over a box of right-hand sides (lexicographic order);
//            x' = branch(b') is emitted when it is 0/1.
//   Subsets  u ranges over 0/1 vectors with |u| <= budget (by size, then
//            lexicographically); u is emitted when branch(A u) == u.
//
// With full_box the box is {-G*delta, ..., G*delta}^m with sigma = s = G,
// G = gamma_bound(m, delta). Otherwise sigma = s = min(n, G) and the box is
// cut to the range A can reach with 0/1 vectors; both are sound because a
// 0/1 candidate has at most min(n, G) ones.

#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "ilpspace/branch.hpp"
#include "ilpspace/core.hpp"

namespace ilpspace {

template <class Int>
struct Candidate {
    std::vector<Int> indicator;  // x' in {0,1}^n
    std::vector<Int> rhs;        // b' = A x'
    std::vector<std::size_t> support;
};

enum class CandidateDomain { Auto, Box, Subsets };

struct CandidateOptions {
    CandidateDomain domain = CandidateDomain::Auto;
    bool full_box = false;
};

inline double binomial_prefix_sum(std::size_t n, std::size_t k) {
    double total = 0.0, term = 1.0;
    for (std::size_t j = 0; j <= std::min(n, k); ++j) {
        if (j > 0) term *= static_cast<double>(n - j + 1) / static_cast<double>(j);
        total += term;
    }
    return total;
}

/// (2 G delta + 1)^m, the number of right-hand sides in the full box.
inline BigInt candidate_count_bound(std::size_t m, const BigInt& delta) {
    BigInt side = 2 * BigInt(gamma_bound(m, delta)) * delta + 1;
    return boost::multiprecision::pow(side, static_cast<unsigned>(m));
}

/// One cell of the domain: a right-hand side, plus the generating 0/1 vector
/// in the Subsets domain.
template <class Int>
struct CandidateCell {
    std::vector<Int> rhs;
    std::optional<std::vector<Int>> generator;
};

/// Thread-safe cursor over the cells of the chosen domain, plus the test
/// that turns a cell into (at most) one candidate.
template <class Int>
class CandidateEnumerator {
public:
    CandidateEnumerator(const Instance<Int>& inst, const CandidateOptions& options = {})
        : inst_(inst), gamma_(gamma_bound(inst.m, BigInt(inst.delta))) {
        budget_ = options.full_box ? gamma_ : std::min(inst.n, gamma_);
        std::vector<Int> lo(inst.m), hi(inst.m);
        const Int radius = Int(budget_) * inst.delta;
        for (std::size_t i = 0; i < inst.m; ++i) {
            if (options.full_box) {
                lo[i] = -radius;
                hi[i] = radius;
                continue;
            }
            Int neg = 0, pos = 0;
            for (std::size_t j = 0; j < inst.n; ++j) {
                if (inst.at(i, j) < 0) neg += inst.at(i, j);
                else pos += inst.at(i, j);
            }
            lo[i] = std::max(neg, Int(-radius));
            hi[i] = std::min(pos, radius);
        }
        box_.emplace(std::move(lo), std::move(hi));

        domain_ = options.domain;
        if (options.full_box) domain_ = CandidateDomain::Box;
        if (domain_ == CandidateDomain::Auto) {
            domain_ = box_->volume() <= binomial_prefix_sum(inst.n, budget_) ? CandidateDomain::Box
                                                                              : CandidateDomain::Subsets;
        }
        if (domain_ == CandidateDomain::Subsets) subset_.reserve(budget_);
    }

    CandidateDomain domain() const { return domain_; }
    std::size_t budget() const { return budget_; }

    /// Next cell in the documented order, or nullopt when exhausted.
    std::optional<CandidateCell<Int>> next_cell() {
        std::lock_guard<std::mutex> lock(mutex_);
        if (domain_ == CandidateDomain::Box) {
            if (!box_->valid()) return std::nullopt;
            CandidateCell<Int> cell{std::vector<Int>(box_->value().begin(), box_->value().end()), std::nullopt};
            box_->advance();
            return cell;
        }
        if (!advance_subset()) return std::nullopt;
        std::vector<Int> u(inst_.n, Int(0));
        for (std::size_t j : subset_) u[j] = 1;
        CandidateCell<Int> cell{multiply<Int>(inst_, u), std::move(u)};
        return cell;
    }

    /// Decides one cell with the given recursion object (one per worker).
    std::optional<Candidate<Int>> evaluate(const CandidateCell<Int>& cell, Brancher<Int>& solver) const {
        auto result = solver.run(cell.rhs, Int(budget_), budget_);
        if (!result) return std::nullopt;
        for (const Int& v : result->x)
            if (v != 0 && v != 1) return std::nullopt;
        if (cell.generator && result->x != *cell.generator) return std::nullopt;
        Candidate<Int> out;
        out.support = support<Int>(result->x);
        out.rhs = cell.rhs;
        out.indicator = std::move(result->x);
        return out;
    }

private:
    // Subsets by size, then lexicographically by index set. The first call
    // yields the empty set.
    bool advance_subset() {
        if (!subset_started_) {
            subset_started_ = true;
            return true;
        }
        const std::size_t n = inst_.n;
        const std::size_t k = subset_.size();
        // next combination of the same size
        for (std::size_t t = k; t-- > 0;) {
            if (subset_[t] < n - (k - t)) {
                ++subset_[t];
                for (std::size_t r = t + 1; r < k; ++r) subset_[r] = subset_[r - 1] + 1;
                return true;
            }
        }
        if (k + 1 > std::min(n, budget_)) return false;
        subset_.resize(k + 1);
        for (std::size_t r = 0; r <= k; ++r) subset_[r] = r;
        return true;
    }

    const Instance<Int>& inst_;
    std::size_t gamma_;
    std::size_t budget_ = 0;
    CandidateDomain domain_ = CandidateDomain::Auto;
    std::optional<BoxCursor<Int>> box_;
    std::vector<std::size_t> subset_;
    bool subset_started_ = false;
    std::mutex mutex_;
};

/// Streams candidates to `emit` until it returns false. Returns the number
/// of candidates emitted.
template <class Int, class Emit>
std::size_t enumerate_candidates(const Instance<Int>& inst, Metrics& metrics, Emit&& emit,
                                 const CandidateOptions& options = {}) {
    CandidateEnumerator<Int> cells(inst, options);
    Brancher<Int> solver(inst, GuessStrategy::Pruned);
    std::size_t count = 0;
    while (auto cell = cells.next_cell()) {
        auto cand = cells.evaluate(*cell, solver);
        if (!cand) continue;
        ++count;
        if (!emit(*cand)) break;
    }
    metrics.merge(solver.metrics());
    return count;
}

}  // namespace ilpspace

#endif  // ILPSPACE_CANDIDATES_HPP
