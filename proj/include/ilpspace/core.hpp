#ifndef ILPSPACE_CORE_HPP
#define ILPSPACE_CORE_HPP

// Instance/solution model for equality-form integer programs
//
//     min { c^T x : A x = b, x >= 0 integral }
//
// plus the lexicographic order, the sparsity bound and the solution
// comparator shared by every solver in this library. Everything here is
// templated on the integer type so the solvers can run on int64_t when a
// magnitude bound allows it and on BigInt otherwise.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ilpspace {

using BigInt = boost::multiprecision::cpp_int;

template <class Int>
inline constexpr bool is_big_v = std::is_same_v<Int, BigInt>;

namespace detail {

template <class Int>
Int abs_value(const Int& v) {
    return v < 0 ? Int(-v) : v;
}

// Ceiling division for a positive divisor.
template <class Int>
Int ceil_div(const Int& num, const Int& den) {
    Int q = num / den;
    if (q * den < num) ++q;
    return q;
}

template <class Int>
Int floor_div(const Int& num, const Int& den) {
    Int q = num / den;
    if (q * den > num) --q;
    return q;
}

}  // namespace detail

/// Machine words occupied by one value. int64_t is one word; a BigInt
/// counts its limbs.
template <class Int>
std::size_t words_of(const Int& v) {
    if constexpr (is_big_v<Int>) {
        return std::max<std::size_t>(1, v.backend().size());
    } else {
        (void)v;
        return 1;
    }
}

template <class To, class From>
To narrow_int(const From& v) {
    if constexpr (std::is_same_v<To, From>) {
        return v;
    } else if constexpr (is_big_v<From>) {
        if (v > std::numeric_limits<To>::max() || v < std::numeric_limits<To>::min())
            throw std::overflow_error("value does not fit the target integer type");
        return static_cast<To>(v);
    } else {
        return To(v);
    }
}

/// An equality-form integer program. A is stored row-major.
template <class Int>
struct Instance {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Int> a;
    std::vector<Int> b;
    std::vector<Int> c;
    Int delta = 2;

    Instance() = default;
    Instance(std::size_t rows, std::size_t cols)
        : m(rows), n(cols), a(rows * cols), b(rows), c(cols) {}

    const Int& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    Int& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

    Int max_abs_entry() const {
        Int best = 0;
        for (const Int& v : a) best = std::max(best, detail::abs_value(v));
        return best;
    }

    /// Throws std::invalid_argument when a structural invariant is broken.
    void validate() const {
        if (m < 1 || n < 1) throw std::invalid_argument("instance needs m >= 1 and n >= 1");
        if (a.size() != m * n || b.size() != m || c.size() != n)
            throw std::invalid_argument("instance dimensions do not match its data");
        if (delta < 2) throw std::invalid_argument("delta must be at least 2");
        if (max_abs_entry() > delta)
            throw std::invalid_argument("delta is smaller than the largest |A[i][j]|");
    }

    bool operator==(const Instance&) const = default;
};

template <class To, class From>
Instance<To> convert_instance(const Instance<From>& in) {
    Instance<To> out(in.m, in.n);
    for (std::size_t k = 0; k < in.a.size(); ++k) out.a[k] = narrow_int<To>(in.a[k]);
    for (std::size_t k = 0; k < in.m; ++k) out.b[k] = narrow_int<To>(in.b[k]);
    for (std::size_t k = 0; k < in.n; ++k) out.c[k] = narrow_int<To>(in.c[k]);
    out.delta = narrow_int<To>(in.delta);
    return out;
}

/// Nonnegative integer vector together with its objective value.
template <class Int>
struct Solution {
    std::vector<Int> x;
    Int objective = 0;

    bool operator==(const Solution&) const = default;
};

/// Absent value marks "no solution" in the recursive solvers.
template <class Int>
using MaybeSolution = std::optional<Solution<Int>>;

enum class Status { Optimal, Infeasible, Unbounded };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Optimal: return "OPTIMAL";
        case Status::Infeasible: return "INFEASIBLE";
        case Status::Unbounded: return "UNBOUNDED";
    }
    return "?";
}

template <class Int>
struct SolveStatus {
    Status status = Status::Infeasible;
    MaybeSolution<Int> solution;  // set iff status == Optimal
};

struct Metrics {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t peak_live_words = 0;
    double elapsed_ms = 0.0;

    /// Associative merge for metrics of independent tasks. Peaks of tasks
    /// that may run side by side do not add up here: each worker owns one
    /// task at a time, so the reported peak is per worker.
    void merge(const Metrics& other) {
        nodes_expanded += other.nodes_expanded;
        max_depth = std::max(max_depth, other.max_depth);
        peak_live_words = std::max(peak_live_words, other.peak_live_words);
    }
};

/// Running count of machine words held by live solver frames.
class WordMeter {
public:
    void acquire(std::size_t words) {
        live_ += words;
        peak_ = std::max(peak_, live_);
    }
    void release(std::size_t words) { live_ -= words; }

    std::uint64_t live() const { return live_; }
    std::uint64_t peak() const { return peak_; }

private:
    std::uint64_t live_ = 0;
    std::uint64_t peak_ = 0;
};

/// Charges a fixed number of words to a meter for the lifetime of a frame.
class WordCharge {
public:
    WordCharge(WordMeter& meter, std::size_t words) : meter_(meter), words_(words) {
        meter_.acquire(words_);
    }
    ~WordCharge() { meter_.release(words_); }
    WordCharge(const WordCharge&) = delete;
    WordCharge& operator=(const WordCharge&) = delete;

private:
    WordMeter& meter_;
    std::size_t words_;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Ceiling of the sparsity bound 2(m+1)(log2(m+1) + log2(delta) + 2).
///
/// Computed without floating point: G is the smallest integer with
/// 2^(G - 4(m+1)) >= ((m+1) delta)^(2(m+1)).
inline std::size_t gamma_bound(std::size_t m, const BigInt& delta) {
    if (m < 1) throw std::invalid_argument("gamma_bound: m must be at least 1");
    if (delta < 2) throw std::invalid_argument("gamma_bound: delta must be at least 2");
    const std::size_t twice_rows = 2 * (m + 1);
    BigInt base = BigInt(m + 1) * delta;
    BigInt power = boost::multiprecision::pow(base, static_cast<unsigned>(twice_rows));
    // ceil(log2(power)) for power >= 2 is the bit length of power - 1.
    BigInt pm1 = power - 1;
    std::size_t ceil_log = pm1 == 0 ? 0 : boost::multiprecision::msb(pm1) + 1;
    return 2 * twice_rows + ceil_log;
}

template <class Int>
bool lex_less(std::span<const Int> x, std::span<const Int> y) {
    if (x.size() != y.size()) throw std::invalid_argument("lex_less: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
}

template <class Int>
bool lex_less(const std::vector<Int>& x, const std::vector<Int>& y) {
    return lex_less(std::span<const Int>(x), std::span<const Int>(y));
}

/// True iff `candidate` exists and beats `incumbent` on (objective, lex).
template <class Int>
bool better(const MaybeSolution<Int>& candidate, const MaybeSolution<Int>& incumbent) {
    if (!candidate) return false;
    if (!incumbent) return true;
    if (candidate->objective != incumbent->objective)
        return candidate->objective < incumbent->objective;
    return lex_less(candidate->x, incumbent->x);
}

template <class Int>
Int dot(std::span<const Int> u, std::span<const Int> v) {
    Int acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

/// Same as above with objectives recomputed from the cost vector.
template <class Int>
bool better(const MaybeSolution<Int>& candidate, const MaybeSolution<Int>& incumbent,
            std::span<const Int> cost) {
    if (!candidate) return false;
    if (!incumbent) return true;
    Int lhs = dot<Int>(candidate->x, cost);
    Int rhs = dot<Int>(incumbent->x, cost);
    if (lhs != rhs) return lhs < rhs;
    return lex_less(candidate->x, incumbent->x);
}

template <class Int>
std::vector<std::size_t> support(std::span<const Int> x) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s.push_back(i);
    return s;
}

template <class Int>
std::size_t norm0(std::span<const Int> x) {
    return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](const Int& v) { return v != 0; }));
}

template <class Int>
Int norm1(std::span<const Int> x) {
    Int acc = 0;
    for (const Int& v : x) acc += detail::abs_value(v);
    return acc;
}

template <class Int>
Int norm_inf(std::span<const Int> x) {
    Int best = 0;
    for (const Int& v : x) best = std::max(best, detail::abs_value(v));
    return best;
}

template <class Int>
std::vector<Int> multiply(const Instance<Int>& inst, std::span<const Int> x) {
    std::vector<Int> out(inst.m, Int(0));
    for (std::size_t i = 0; i < inst.m; ++i)
        for (std::size_t j = 0; j < inst.n; ++j)
            if (x[j] != 0) out[i] += inst.at(i, j) * x[j];
    return out;
}

/// True iff x has length n, is nonnegative, and satisfies A x = b.
template <class Int>
bool check_solution(const Instance<Int>& inst, std::span<const Int> x) {
    if (x.size() != inst.n) return false;
    for (const Int& v : x)
        if (v < 0) return false;
    return multiply(inst, x) == inst.b;
}

template <class Int>
Solution<Int> make_solution(std::vector<Int> x, std::span<const Int> cost) {
    Solution<Int> s;
    s.objective = dot<Int>(x, cost);
    s.x = std::move(x);
    return s;
}

}  // namespace ilpspace

#endif  // ILPSPACE_CORE_HPP
