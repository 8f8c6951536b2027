#ifndef ILPSPACE_PIPELINE_HPP
#define ILPSPACE_PIPELINE_HPP

// Top-level solver: certify the relaxation, stream candidate supports, solve
// the instance truncated to each one and keep the best result.
//
//   LP infeasible            -> INFEASIBLE
//   LP unbounded             -> UNBOUNDED if an integral point exists
//                               (a rational improving ray scales to an
//                               integral one), else INFEASIBLE
//   LP optimal               -> fold of the fixed-support optima by
//                               better(), i.e. the lex-min optimum
//
// Candidates are consumed as they are produced; the set is never stored.
// With several threads each worker pulls cells from the shared cursor and
// folds its own results; the final fold is order independent, so the output
// does not depend on the thread count.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

#include "ilpspace/candidates.hpp"
#include "ilpspace/core.hpp"
#include "ilpspace/ratlp.hpp"
#include "ilpspace/smalldim.hpp"

namespace ilpspace {

struct SolveOptions {
    unsigned threads = 1;
    CandidateOptions candidates;
    FixedSupportOptions fixed_support;
};

template <class Int>
struct SolveReport {
    SolveStatus<Int> result;
    Metrics metrics;
    LPStatus relaxation = LPStatus::Infeasible;
};

namespace detail {

template <class Int>
MaybeSolution<Int> best_over_candidates(const Instance<Int>& inst, const SolveOptions& options,
                                        Metrics& metrics) {
    CandidateEnumerator<Int> cells(inst, options.candidates);
    const unsigned workers = std::max(1u, options.threads);

    struct WorkerState {
        MaybeSolution<Int> best;
        Metrics metrics;
    };
    std::vector<WorkerState> states(workers);

    auto work = [&](WorkerState& state) {
        Brancher<Int> solver(inst, GuessStrategy::Pruned);
        while (auto cell = cells.next_cell()) {
            auto cand = cells.evaluate(*cell, solver);
            if (!cand) continue;
            Metrics local;
            auto sol = solve_fixed_support(inst, cand->support, local, options.fixed_support);
            state.metrics.merge(local);
            if (better(sol, state.best)) state.best = std::move(sol);
        }
        state.metrics.merge(solver.metrics());
    };

    if (workers == 1) {
        work(states[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, std::ref(states[t]));
        for (auto& th : pool) th.join();
    }

    MaybeSolution<Int> best;
    Metrics merged;
    for (auto& s : states) {
        merged.merge(s.metrics);
        if (better(s.best, best)) best = std::move(s.best);
    }
    // incumbent plus the candidate being processed
    const std::size_t width = best ? std::max<std::size_t>(1, words_of(best->objective)) : 1;
    merged.peak_live_words += (3 * inst.n + inst.m + 1) * width;
    metrics.merge(merged);
    return best;
}

}  // namespace detail

/// Lexicographically minimal feasible point (zero objective), or nothing.
template <class Int>
MaybeSolution<Int> feasibility(const Instance<Int>& inst, Metrics& metrics, const SolveOptions& options = {}) {
    Instance<Int> zero_cost = inst;
    std::fill(zero_cost.c.begin(), zero_cost.c.end(), Int(0));
    return detail::best_over_candidates(zero_cost, options, metrics);
}

template <class Int>
SolveReport<Int> solve_with(const Instance<Int>& inst, const SolveOptions& options = {}) {
    inst.validate();
    Stopwatch clock;
    SolveReport<Int> report;
    WordMeter lp_meter;
    LPResult lp = simplex_solve(inst, &lp_meter);
    report.relaxation = lp.status;
    report.metrics.peak_live_words = lp_meter.peak();

    if (lp.status == LPStatus::Infeasible) {
        report.result.status = Status::Infeasible;
    } else if (lp.status == LPStatus::Unbounded) {
        auto point = feasibility(inst, report.metrics, options);
        report.result.status = point ? Status::Unbounded : Status::Infeasible;
    } else {
        auto best = detail::best_over_candidates(inst, options, report.metrics);
        if (best) {
            report.result.status = Status::Optimal;
            report.result.solution = std::move(best);
        } else {
            report.result.status = Status::Infeasible;
        }
    }
    report.metrics.elapsed_ms = clock.elapsed_ms();
    return report;
}

/// True when every intermediate value of the solve provably fits int64_t.
inline bool fits_machine_words(const Instance<BigInt>& inst) {
    BigInt sigma = std::min(compute_sigma_bound(inst), geometric_sigma_bound(inst));
    BigInt budget = std::max(sigma, BigInt(gamma_bound(inst.m, inst.delta)));
    BigInt scale = norm_inf<BigInt>(inst.b) + 4 * budget * inst.delta + 1;
    BigInt cost = norm_inf<BigInt>(inst.c) + inst.delta + 1;
    BigInt bound = scale * BigInt(inst.n + 1) * cost;
    return bound < (BigInt(1) << 62);
}

template <class To, class From>
SolveReport<To> convert_report(const SolveReport<From>& in) {
    SolveReport<To> out;
    out.metrics = in.metrics;
    out.relaxation = in.relaxation;
    out.result.status = in.result.status;
    if (in.result.solution) {
        Solution<To> s;
        for (const auto& v : in.result.solution->x) s.x.push_back(To(v));
        s.objective = To(in.result.solution->objective);
        out.result.solution = std::move(s);
    }
    return out;
}

/// Solves with machine integers when that is provably safe, with BigInt
/// otherwise.
inline SolveReport<BigInt> solve(const Instance<BigInt>& inst, const SolveOptions& options = {}) {
    inst.validate();
    if (fits_machine_words(inst)) {
        auto narrow = convert_instance<std::int64_t>(inst);
        return convert_report<BigInt>(solve_with(narrow, options));
    }
    return solve_with(inst, options);
}

}  // namespace ilpspace

#endif  // ILPSPACE_PIPELINE_HPP
