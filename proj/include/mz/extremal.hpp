#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mz/errors.hpp"
#include "mz/ordered_vector.hpp"
#include "mz/sets.hpp"

namespace mz {

/// Result of an extremal-element computation. Besides the vector itself it
/// records which case of the underlying case analysis fired, the clamp
/// counts k (coordinates pinned from the left) and d (pinned from the
/// right), and the free value theta (maximal case) or rho (minimal case).
/// Exactly one of theta/rho is set per branch.
struct ExtremalTrace {
    std::string branch;
    std::size_t k = 0;
    std::size_t d = 0;
    std::optional<double> theta;
    std::optional<double> rho;
    OrderedVector vector;
};

enum class Extremum { Max, Min };

namespace detail {

inline void append_run(std::vector<double>& out, double value, std::size_t count) {
    out.insert(out.end(), count, value);
}

inline OrderedVector run_vector(std::initializer_list<std::pair<double, std::size_t>> runs) {
    std::vector<double> entries;
    for (const auto& [value, count] : runs) append_run(entries, value, count);
    return OrderedVector(std::move(entries));
}

inline std::size_t floor_index(double value, std::size_t lo, std::size_t hi) {
    const auto raw = static_cast<long long>(std::floor(value));
    if (raw < static_cast<long long>(lo)) return lo;
    if (raw > static_cast<long long>(hi)) return hi;
    return static_cast<std::size_t>(raw);
}

} // namespace detail

/// Maximal and minimal elements of the single-interval set
/// { x nonincreasing : m <= x_i <= M, sum x = a }.
///
/// The maximal element pins the first k coordinates at M with
/// k = floor((a - n m) / (M - m)), places the remainder theta next, and
/// fills with m; the minimal element is the mean vector (a/n, ..., a/n).
inline ExtremalTrace extremal_single_interval(std::size_t n, double a, double m, double M,
                                              Extremum which) {
    if (n == 0) throw PreconditionError("extremal_single_interval: n must be positive");
    if (m < -kTol || M < m - kTol) {
        throw PreconditionError("extremal_single_interval: need 0 <= m <= M");
    }
    const double nd = static_cast<double>(n);
    if (a < nd * m - kTol || a > nd * M + kTol) {
        throw InfeasibleSetError("extremal_single_interval: total " + std::to_string(a) +
                                 " outside [" + std::to_string(nd * m) + ", " +
                                 std::to_string(nd * M) + "]");
    }
    if (which == Extremum::Min) {
        const double rho = a / nd;
        return {"min:single-interval:mean", 0, 0, std::nullopt, rho,
                detail::run_vector({{rho, n}})};
    }
    if (M - m <= kTol) {
        return {"max:single-interval:degenerate", 0, 0, std::nullopt, std::nullopt,
                detail::run_vector({{m, n}})};
    }
    if (a >= nd * M - kTol) {
        return {"max:single-interval:sum-at-upper", n, 0, std::nullopt, std::nullopt,
                detail::run_vector({{M, n}})};
    }
    const std::size_t k = detail::floor_index((a - nd * m) / (M - m), 0, n - 1);
    const double theta = a - M * static_cast<double>(k) - m * static_cast<double>(n - k - 1);
    return {"max:single-interval", k, 0, theta, std::nullopt,
            detail::run_vector({{M, k}, {theta, 1}, {m, n - k - 1}})};
}

/// Maximal element of a BoxedSumSet: find the smallest k such that pinning
/// the first k coordinates at their upper bounds and the rest at their lower
/// bounds brackets the total, then spend the remainder theta on coordinate
/// k+1. The returned vector majorizes every member of the set.
inline ExtremalTrace maximal_element(const BoxedSumSet& set) {
    const std::size_t n = set.n();
    const OrderedVector& m = set.lower();
    const OrderedVector& M = set.upper();
    const double a = set.total();

    if (a >= M.total() - kTol) {
        // The total pins every coordinate at its upper bound; no k satisfies
        // the strict bracketing inequality, so return M directly.
        return {"max:sum-at-upper", n, 0, std::nullopt, std::nullopt, M};
    }

    std::size_t k = 0;
    while (k < n) {
        const double g_next = prefix_sum(M, k + 1) + suffix_sum(m, k + 1);
        if (a < g_next) break;
        ++k;
    }
    if (k >= n) {
        throw InternalError("maximal_element: no admissible prefix length for a feasible set");
    }
    const double theta = a - prefix_sum(M, k) - suffix_sum(m, k + 1);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < k; ++i) x[i] = M[i];
    x[k] = theta;
    for (std::size_t i = k + 1; i < n; ++i) x[i] = m[i];
    return {"max:general", k, 0, theta, std::nullopt, OrderedVector(std::move(x))};
}

namespace detail {

/// Joint search for the smallest clamp counts (k, d) of the minimal element.
/// Pairs are visited by increasing k+d, then by increasing k, and the first
/// admissible pair wins: this clamps as few coordinates as possible. A pair
/// is admissible when the shared middle value
///   rho = (a - sum of the k lowest-pinned - sum of the d highest-pinned) / (n-k-d)
/// fits between m_{k+1} and M_{n-d} and keeps the vector nonincreasing
/// against both pinned blocks.
inline ExtremalTrace minimal_by_search(const BoxedSumSet& set) {
    const std::size_t n = set.n();
    const OrderedVector& m = set.lower();
    const OrderedVector& M = set.upper();
    const double a = set.total();

    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t k = 0; k <= t; ++k) {
            const std::size_t d = t - k;
            const std::size_t middle = n - k - d;
            const double rho = (a - prefix_sum(m, k) - suffix_sum(M, n - d)) /
                               static_cast<double>(middle);
            if (rho < m[k] - kTol) continue;
            if (rho > M[n - d - 1] + kTol) continue;
            if (k > 0 && rho > m[k - 1] + kTol) continue;
            if (d > 0 && rho < M[n - d] - kTol) continue;
            std::vector<double> x(n);
            for (std::size_t i = 0; i < k; ++i) x[i] = m[i];
            for (std::size_t i = k; i < n - d; ++i) x[i] = rho;
            for (std::size_t i = n - d; i < n; ++i) x[i] = M[i];
            const char* branch = (k == 0 && d == 0) ? "min:mean" : "min:general";
            return {branch, k, d, std::nullopt, rho, OrderedVector(std::move(x))};
        }
    }
    throw InternalError("minimal_element: no admissible (k, d) pair for a feasible set");
}

/// Closed form for pairwise-disjoint coordinate intervals: exactly one
/// coordinate is free, the ones before it sit at their lower bounds and the
/// ones after it at their upper bounds.
inline ExtremalTrace minimal_disjoint(const BoxedSumSet& set) {
    const std::size_t n = set.n();
    const OrderedVector& m = set.lower();
    const OrderedVector& M = set.upper();
    const double a = set.total();

    if (a >= M.total() - kTol) {
        // Boundary case: the set is the singleton {M}.
        return {"min:disjoint:sum-at-upper", 0, n, std::nullopt, std::nullopt, M};
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double g_low = prefix_sum(m, k + 1) + suffix_sum(M, k + 1);
        if (g_low > a + kTol) continue;
        const double rho = a - prefix_sum(m, k) - suffix_sum(M, k + 1);
        std::vector<double> x(n);
        for (std::size_t i = 0; i < k; ++i) x[i] = m[i];
        x[k] = rho;
        for (std::size_t i = k + 1; i < n; ++i) x[i] = M[i];
        return {"min:disjoint", k, n - k - 1, std::nullopt, rho, OrderedVector(std::move(x))};
    }
    throw InternalError("minimal_element: disjoint closed form found no pivot");
}

} // namespace detail

/// Minimal element of a BoxedSumSet. Uses the (k, d) clamp search; when the
/// coordinate intervals are pairwise disjoint the one-free-coordinate closed
/// form is used instead and cross-checked against the search.
inline ExtremalTrace minimal_element(const BoxedSumSet& set) {
    ExtremalTrace searched = detail::minimal_by_search(set);
    if (set.intervals_disjoint()) {
        ExtremalTrace closed = detail::minimal_disjoint(set);
        if (!approx_equal(closed.vector, searched.vector)) {
            throw InternalError("minimal_element: disjoint closed form disagrees with the (k, d) search");
        }
        return closed;
    }
    return searched;
}

/// Maximal element of a TwoBlockSet via the block closed forms. Writing
/// a* for the total of [M1 x h, m2 x (n-h)], the shape is
///   a <  a*:  [M1 x k, theta, m1 x (h-k-1), m2 x (n-h)]
///   a >= a*:  [M1 x h, M2 x (k-h), theta, m2 x (n-k-1)]
/// with k given by the respective floor formulas. Blocks with equal lower
/// and upper bound are fixed and the computation reduces to the free block.
inline ExtremalTrace maximal_element_two_block(const TwoBlockSet& set) {
    const std::size_t n = set.n();
    const std::size_t h = set.h();
    const double m1 = set.m1();
    const double M1 = set.M1();
    const double m2 = set.m2();
    const double M2 = set.M2();
    const double a = set.total();

    if (h == n) {
        ExtremalTrace t = extremal_single_interval(n, a, m1, M1, Extremum::Max);
        t.branch = "max:two-block:single-interval";
        return t;
    }
    const std::size_t tail = n - h;
    if (set.is_singleton()) {
        return {"max:two-block:singleton", 0, 0, std::nullopt, std::nullopt,
                detail::run_vector({{m1, h}, {m2, tail}})};
    }
    if (M1 - m1 <= kTol) {
        // First block fixed at m1; maximize the free tail block.
        ExtremalTrace t = extremal_single_interval(tail, a - static_cast<double>(h) * m1,
                                                   m2, M2, Extremum::Max);
        std::vector<double> x;
        detail::append_run(x, m1, h);
        x.insert(x.end(), t.vector.begin(), t.vector.end());
        return {"max:two-block:first-block-fixed", h + t.k, 0, t.theta, std::nullopt,
                OrderedVector(std::move(x))};
    }
    if (M2 - m2 <= kTol) {
        // Second block fixed at m2; maximize the free head block.
        ExtremalTrace t = extremal_single_interval(h, a - static_cast<double>(tail) * m2,
                                                   m1, M1, Extremum::Max);
        std::vector<double> x(t.vector.begin(), t.vector.end());
        detail::append_run(x, m2, tail);
        return {"max:two-block:second-block-fixed", t.k, 0, t.theta, std::nullopt,
                OrderedVector(std::move(x))};
    }
    if (a >= set.upper_sum() - kTol) {
        return {"max:two-block:sum-at-upper", n, 0, std::nullopt, std::nullopt,
                detail::run_vector({{M1, h}, {M2, tail}})};
    }

    const double nd = static_cast<double>(n);
    const double hd = static_cast<double>(h);
    const double astar = set.a_star();
    if (nearly_equal(a, astar)) {
        // k collapses to h and theta to m2.
        return {"max:two-block:a=a*", h, 0, m2, std::nullopt,
                detail::run_vector({{M1, h}, {m2, tail}})};
    }
    if (a < astar) {
        const std::size_t k =
            detail::floor_index((a - hd * (m1 - m2) - nd * m2) / (M1 - m1), 0, h - 1);
        const double theta = a - M1 * static_cast<double>(k) -
                             m1 * static_cast<double>(h - k - 1) -
                             m2 * static_cast<double>(tail);
        return {"max:two-block:a<a*", k, 0, theta, std::nullopt,
                detail::run_vector({{M1, k}, {theta, 1}, {m1, h - k - 1}, {m2, tail}})};
    }
    const std::size_t k =
        detail::floor_index((a - hd * (M1 - M2) - nd * m2) / (M2 - m2), h, n - 1);
    const double theta = a - M1 * hd - M2 * static_cast<double>(k - h) -
                         m2 * static_cast<double>(n - k - 1);
    return {"max:two-block:a>=a*", k, 0, theta, std::nullopt,
            detail::run_vector({{M1, h}, {M2, k - h}, {theta, 1}, {m2, n - k - 1}})};
}

/// Minimal element of a TwoBlockSet. With overlapping blocks (m1 <= M2) the
/// mean vector wins whenever it fits; otherwise, and always when the blocks
/// are separated (M2 < m1, threshold a~ = total of [m1 x h, M2 x (n-h)]),
/// one block is pinned and the other takes the constant value rho.
inline ExtremalTrace minimal_element_two_block(const TwoBlockSet& set) {
    const std::size_t n = set.n();
    const std::size_t h = set.h();
    const double m1 = set.m1();
    const double M2 = set.M2();
    const double a = set.total();

    if (h == n) {
        ExtremalTrace t = extremal_single_interval(n, a, m1, set.M1(), Extremum::Min);
        t.branch = "min:two-block:single-interval";
        return t;
    }
    const std::size_t tail = n - h;
    if (set.is_singleton()) {
        return {"min:two-block:singleton", 0, 0, std::nullopt, std::nullopt,
                detail::run_vector({{m1, h}, {set.m2(), tail}})};
    }

    const double nd = static_cast<double>(n);
    const auto low_branch = [&]() -> ExtremalTrace {
        const double rho = (a - static_cast<double>(h) * m1) / static_cast<double>(tail);
        return {"min:two-block:low", h, 0, std::nullopt, rho,
                detail::run_vector({{m1, h}, {rho, tail}})};
    };
    const auto high_branch = [&](const char* branch) -> ExtremalTrace {
        const double rho = (a - static_cast<double>(tail) * M2) / static_cast<double>(h);
        return {branch, 0, tail, std::nullopt, rho,
                detail::run_vector({{rho, h}, {M2, tail}})};
    };

    if (m1 <= M2 + kTol) {
        if (a >= nd * m1 - kTol && a <= nd * M2 + kTol) {
            const double rho = a / nd;
            return {"min:two-block:mean", 0, 0, std::nullopt, rho,
                    detail::run_vector({{rho, n}})};
        }
        if (a < nd * m1) return low_branch();
        return high_branch("min:two-block:high");
    }
    const double atilde = set.a_tilde();
    if (nearly_equal(a, atilde)) {
        // rho collapses to m1, leaving [m1 x h, M2 x (n-h)].
        return high_branch("min:two-block:a=atilde");
    }
    if (a < atilde) return low_branch();
    return high_branch("min:two-block:high");
}

/// Replace every fractional constant run of a two-block minimal vector by
/// the balanced integer run with the same sum: a run of length L summing to
/// the integer T becomes (floor(T/L)+1) repeated T - floor(T/L)*L times,
/// followed by floor(T/L). Requires integer block bounds and total.
inline OrderedVector integerize_minimal(const TwoBlockSet& set, const ExtremalTrace& minimal) {
    if (!set.is_integral()) {
        throw NotIntegerizableError("integerize_minimal: block bounds and total must be integers");
    }
    const OrderedVector& x = minimal.vector;
    std::vector<double> out;
    out.reserve(x.size());
    std::size_t i = 0;
    while (i < x.size()) {
        std::size_t j = i;
        while (j < x.size() && std::abs(x[j] - x[i]) <= kTol) ++j;
        const std::size_t len = j - i;
        const double value = x[i];
        if (is_near_integer(value)) {
            detail::append_run(out, static_cast<double>(std::llround(value)), len);
        } else {
            const double run_sum = value * static_cast<double>(len);
            const long long t = std::llround(run_sum);
            if (std::abs(run_sum - static_cast<double>(t)) > 1e-6) {
                throw NotIntegerizableError("integerize_minimal: run sum " +
                                            std::to_string(run_sum) + " is not an integer");
            }
            const long long base = t / static_cast<long long>(len);
            const long long extra = t - base * static_cast<long long>(len);
            detail::append_run(out, static_cast<double>(base + 1), static_cast<std::size_t>(extra));
            detail::append_run(out, static_cast<double>(base), len - static_cast<std::size_t>(extra));
        }
        i = j;
    }
    OrderedVector result(std::move(out));
    if (std::llround(result.total()) != std::llround(set.total())) {
        throw InternalError("integerize_minimal: total changed during integerization");
    }
    return result;
}

enum class SpecialFamily {
    FloorSetS2,   ///< x_i >= alpha on the first h coordinates
    CeilingSetS3, ///< x_i <= alpha on the last n-h coordinates
};

/// Closed-form extremal elements of two classic one-sided constraint sets
/// inside the simplex of nonincreasing nonnegative vectors with sum a.
/// The maximal element of the ceiling set has no closed form here and is
/// rejected.
inline ExtremalTrace extremal_special(std::size_t n, double a, std::size_t h, double alpha,
                                      SpecialFamily family, Extremum which) {
    if (n == 0) throw PreconditionError("extremal_special: n must be positive");
    if (a <= 0) throw PreconditionError("extremal_special: total must be positive");
    const double nd = static_cast<double>(n);

    if (family == SpecialFamily::FloorSetS2) {
        if (h < 1 || h > n) {
            throw PreconditionError("extremal_special: floor set needs 1 <= h <= n");
        }
        if (alpha <= 0 || alpha > a / static_cast<double>(h) + kTol) {
            throw PreconditionError("extremal_special: floor set needs 0 < alpha <= a/h");
        }
        if (which == Extremum::Max) {
            const double head = a - static_cast<double>(h - 1) * alpha;
            return {"max:floor-set", 0, 0, head, std::nullopt,
                    detail::run_vector({{head, 1}, {alpha, h - 1}, {0.0, n - h}})};
        }
        if (alpha <= a / nd + kTol) {
            const double rho = a / nd;
            return {"min:floor-set:mean", 0, 0, std::nullopt, rho,
                    detail::run_vector({{rho, n}})};
        }
        const double rho = (a - alpha * static_cast<double>(h)) / static_cast<double>(n - h);
        return {"min:floor-set", h, 0, std::nullopt, rho,
                detail::run_vector({{alpha, h}, {rho, n - h}})};
    }

    if (h < 1 || h + 1 > n) {
        throw PreconditionError("extremal_special: ceiling set needs 1 <= h <= n-1");
    }
    if (alpha <= 0 || alpha >= a) {
        throw PreconditionError("extremal_special: ceiling set needs 0 < alpha < a");
    }
    if (which == Extremum::Max) {
        throw UnsupportedCaseError("extremal_special: no closed form for the maximal element of the ceiling set");
    }
    if (alpha >= a / nd - kTol) {
        const double rho = a / nd;
        return {"min:ceiling-set:mean", 0, 0, std::nullopt, rho,
                detail::run_vector({{rho, n}})};
    }
    const double rho = (a - static_cast<double>(n - h) * alpha) / static_cast<double>(h);
    return {"min:ceiling-set", 0, n - h, std::nullopt, rho,
            detail::run_vector({{rho, h}, {alpha, n - h}})};
}

} // namespace mz
