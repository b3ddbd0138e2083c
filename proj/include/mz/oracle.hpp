#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mz/errors.hpp"
#include "mz/ordered_vector.hpp"
#include "mz/sets.hpp"

// Brute-force validation machinery. Nothing in this header calls the
// closed-form extremal routines; verification is meaningful only because the
// two paths stay disjoint.

namespace mz {

/// A batch of feasible vectors drawn from one constraint set.
struct FeasibleSample {
    std::vector<OrderedVector> vectors;
    std::uint64_t seed = 0;
};

namespace detail {

// Deterministic uniform draw in [0, 1); avoids std::uniform_real_distribution
// so that a fixed seed reproduces the same stream on any platform.
inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace detail

/// Draws `count` members of the set: coordinates are sampled left to right,
/// each clamped to the interval forced by the remaining bounds and the
/// remaining sum, then sorted nonincreasing (which preserves both the sum
/// and, for sorted bound vectors, the per-coordinate bounds). Deterministic
/// for a fixed seed.
inline FeasibleSample sample_feasible(const BoxedSumSet& set, std::size_t count,
                                      std::uint64_t seed) {
    if (count < 1) throw PreconditionError("sample_feasible: count must be >= 1");
    const std::size_t n = set.n();
    const OrderedVector& m = set.lower();
    const OrderedVector& M = set.upper();

    std::vector<double> tail_min(n + 1, 0.0);
    std::vector<double> tail_max(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        tail_min[i] = tail_min[i + 1] + m[i];
        tail_max[i] = tail_max[i + 1] + M[i];
    }

    std::mt19937_64 rng(seed);
    FeasibleSample sample;
    sample.seed = seed;
    sample.vectors.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<double> x(n);
        double rem = set.total();
        for (std::size_t i = 0; i < n; ++i) {
            double lo = std::max(m[i], rem - tail_max[i + 1]);
            double hi = std::min(M[i], rem - tail_min[i + 1]);
            if (lo > hi) {
                // Feasible sets keep lo <= hi up to rounding noise.
                lo = hi = 0.5 * (lo + hi);
            }
            x[i] = lo + detail::unit_draw(rng) * (hi - lo);
            rem -= x[i];
        }
        sample.vectors.push_back(OrderedVector::sorted(std::move(x)));
    }
    return sample;
}

inline FeasibleSample sample_feasible(const TwoBlockSet& set, std::size_t count,
                                      std::uint64_t seed) {
    return sample_feasible(set.expanded(), count, seed);
}

/// Exhaustively lists every nonincreasing integer vector in the set.
/// Guarded by size caps: n <= cap and M1 <= 20.
inline std::vector<OrderedVector> enumerate_integer_feasible(const TwoBlockSet& set,
                                                             std::size_t cap = 6) {
    if (!set.is_integral()) {
        throw PreconditionError("enumerate_integer_feasible: bounds and total must be integers");
    }
    if (set.n() > cap) {
        throw CapacityError("enumerate_integer_feasible: n = " + std::to_string(set.n()) +
                            " exceeds the cap of " + std::to_string(cap));
    }
    if (set.M1() > 20 + kTol) {
        throw CapacityError("enumerate_integer_feasible: M1 > 20");
    }
    const std::size_t n = set.n();
    std::vector<long long> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::llround(set.lower_bound_at(i));
        hi[i] = std::llround(set.upper_bound_at(i));
    }
    std::vector<long long> tail_min(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) tail_min[i] = tail_min[i + 1] + lo[i];

    const long long total = std::llround(set.total());
    std::vector<OrderedVector> out;
    std::vector<long long> x(n);

    // rec(i, rem, prev): place x[i] <= prev and keep the remaining sum
    // reachable by the tail.
    auto rec = [&](auto&& self, std::size_t i, long long rem, long long prev) -> void {
        if (i == n) {
            if (rem == 0) {
                std::vector<double> entries(n);
                for (std::size_t j = 0; j < n; ++j) entries[j] = static_cast<double>(x[j]);
                out.push_back(OrderedVector(std::move(entries)));
            }
            return;
        }
        const long long top = std::min(hi[i], prev);
        for (long long v = top; v >= lo[i]; --v) {
            const long long rest = rem - v;
            if (rest < tail_min[i + 1]) continue;
            long long tail_cap = 0;
            for (std::size_t j = i + 1; j < n; ++j) tail_cap += std::min(hi[j], v);
            if (rest > tail_cap) continue;
            x[i] = v;
            self(self, i + 1, rest, v);
        }
    };
    rec(rec, 0, total, hi.empty() ? 0 : hi[0]);
    return out;
}

/// Candidate extremal vectors to validate: the claimed maximal element, the
/// claimed (possibly fractional) minimal element, and optionally its
/// integerized form for integer-member comparisons.
struct ExtremalCandidates {
    OrderedVector maximal;
    OrderedVector minimal;
    std::optional<OrderedVector> minimal_integer;
};

/// Outcome of a verification run. Failures are report contents, not errors;
/// each failure message quotes the offending vector verbatim.
struct VerificationReport {
    std::size_t checked = 0;
    bool used_enumeration = false;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Validates extremal candidates against the set: over the exhaustive
/// integer members (small integral sets) or a seeded feasible sample
/// (everything else), the maximal candidate must majorize every member, the
/// minimal candidate must be majorized by every member, and the
/// sum-of-squares ordering must hold.
inline VerificationReport verify_extremal(const TwoBlockSet& set,
                                          const ExtremalCandidates& candidates,
                                          std::size_t sample_count = 1000,
                                          std::uint64_t seed = 20240901,
                                          std::size_t enum_cap = 6) {
    VerificationReport report;

    if (!set.contains(candidates.maximal)) {
        report.failures.push_back("maximal candidate " + to_string(candidates.maximal) +
                                  " is not a member of the set");
    }
    if (!set.contains(candidates.minimal)) {
        report.failures.push_back("minimal candidate " + to_string(candidates.minimal) +
                                  " is not a member of the set");
    }
    if (candidates.minimal_integer && !set.contains(*candidates.minimal_integer)) {
        report.failures.push_back("integerized minimal candidate " +
                                  to_string(*candidates.minimal_integer) +
                                  " is not a member of the set");
    }

    const bool enumerable = set.is_integral() && set.n() <= enum_cap && set.M1() <= 20 + kTol;
    const double f_max = sum_of_squares(candidates.maximal);

    if (enumerable) {
        report.used_enumeration = true;
        const std::vector<OrderedVector> members = enumerate_integer_feasible(set, enum_cap);
        const OrderedVector& min_ref =
            candidates.minimal_integer ? *candidates.minimal_integer : candidates.minimal;
        const double f_min = sum_of_squares(min_ref);
        for (const OrderedVector& x : members) {
            if (!majorizes(candidates.maximal, x)) {
                report.failures.push_back("maximal candidate does not majorize member " +
                                          to_string(x));
            }
            if (!majorizes(x, min_ref)) {
                report.failures.push_back("member " + to_string(x) +
                                          " does not majorize the minimal candidate");
            }
            const double f = sum_of_squares(x);
            if (f < f_min - kTol || f > f_max + kTol) {
                report.failures.push_back("sum-of-squares ordering fails for member " +
                                          to_string(x));
            }
        }
        report.checked = members.size();
    } else {
        const FeasibleSample sample = sample_feasible(set, sample_count, seed);
        const double f_min = sum_of_squares(candidates.minimal);
        for (const OrderedVector& x : sample.vectors) {
            if (!majorizes(candidates.maximal, x)) {
                report.failures.push_back("maximal candidate does not majorize sample " +
                                          to_string(x));
            }
            if (!majorizes(x, candidates.minimal)) {
                report.failures.push_back("sample " + to_string(x) +
                                          " does not majorize the minimal candidate");
            }
            const double f = sum_of_squares(x);
            if (f < f_min - kTol || f > f_max + kTol) {
                report.failures.push_back("sum-of-squares ordering fails for sample " +
                                          to_string(x));
            }
        }
        report.checked = sample.vectors.size();
    }
    return report;
}

} // namespace mz
