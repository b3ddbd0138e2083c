#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mz/errors.hpp"
#include "mz/extremal.hpp"
#include "mz/graph.hpp"
#include "mz/ordered_vector.hpp"
#include "mz/sets.hpp"

namespace mz {

/// Constraint data derived from a degree sequence with pendant vertices.
/// The edge-sum vector (d_u + d_v over edges, sorted nonincreasing) lives in
/// dimension m = edge_count; its first m-h entries are internal edges with
/// sums in [m1, M1] = [d_{n-h} + d_{n-h-1}, d_1 + d_2] and the last h are
/// pendant edges with sums in [m2, M2] = [1 + d_{n-h}, 1 + d_1]. The total
/// is a = sum of d_i^2.
struct PendantClassSpec {
    DegreeSequence sequence;
    std::size_t pendant_count;  ///< h: number of degree-1 vertices
    long long edge_count;       ///< m
    long long total;            ///< a = sum d_i^2
    long long cube_sum;         ///< sum d_i^3
    long long m1, M1, m2, M2;
    TwoBlockSet edge_sum_set;   ///< dimension m, first block of length m-h
};

/// Builds the pendant-class constraint set for a degree sequence. Requires
/// h >= 1 pendant entries, at least two non-pendant vertices, n >= 4, and
/// the class condition 1 + d_1 <= d_{n-h} + d_{n-h-1} (so that every
/// internal edge sum dominates every pendant edge sum).
inline PendantClassSpec build_constraint_set(const DegreeSequence& seq) {
    const std::size_t n = seq.n();
    const std::vector<int>& d = seq.degrees();
    const std::size_t h = seq.pendant_count();

    if (h == 0) {
        throw OutOfClassError(
            "sequence has no pendant vertices (h = 0); the two-block pendant bounds do not "
            "apply - use the single-interval extremal bounds on [d_n + d_{n-1}, d_1 + d_2] "
            "instead");
    }
    if (n < 4) {
        throw OutOfClassError("pendant class requires n >= 4 (got n = " + std::to_string(n) + ")");
    }
    const std::size_t core = n - h;
    if (core < 2) {
        throw OutOfClassError(
            "pendant class requires at least two non-pendant vertices (n-h = " +
            std::to_string(core) + "); the condition 1+d_1 <= d_{n-h}+d_{n-h-1} cannot be met");
    }
    const long long M2 = 1 + d[0];
    const long long m1 = static_cast<long long>(d[core - 1]) + d[core - 2];
    if (M2 > m1) {
        throw OutOfClassError("degree sequence violates the pendant-class condition "
                              "1+d_1 <= d_{n-h}+d_{n-h-1}: 1+" + std::to_string(d[0]) + " = " +
                              std::to_string(M2) + " > " + std::to_string(d[core - 1]) + "+" +
                              std::to_string(d[core - 2]) + " = " + std::to_string(m1));
    }
    const long long m = seq.edge_count();
    const long long internal = m - static_cast<long long>(h);
    if (internal < 1) {
        throw OutOfClassError("sequence admits no internal edges (m-h = " +
                              std::to_string(internal) + "); no connected realization exists");
    }
    const long long M1 = static_cast<long long>(d[0]) + d[1];
    const long long m2 = 1 + d[core - 1];
    const long long a = seq.sum_squares();

    TwoBlockSet set(TwoBlockParams{.n = static_cast<std::size_t>(m),
                                   .h = static_cast<std::size_t>(internal),
                                   .m1 = static_cast<double>(m1),
                                   .M1 = static_cast<double>(M1),
                                   .m2 = static_cast<double>(m2),
                                   .M2 = static_cast<double>(M2),
                                   .total = static_cast<double>(a)});
    return PendantClassSpec{seq,  h, m, a, seq.sum_cubes(), m1, M1, m2, M2, std::move(set)};
}

/// Lower and upper bounds for the second Zagreb index together with the
/// extremal edge-sum vectors that produced them.
struct BoundsReport {
    long long lower = 0;
    long long upper = 0;
    OrderedVector lower_vector;  ///< integerized minimal edge-sum vector
    OrderedVector upper_vector;  ///< maximal edge-sum vector
    ExtremalTrace lower_trace;   ///< holds the (possibly fractional) minimal vector
    ExtremalTrace upper_trace;
    std::optional<long long> das_gutman;  ///< comparison upper bound 2m^2 - (n-1)m
};

/// Comparison upper bound 2m^2 - (n-1)m for a graph with n vertices and
/// m edges.
inline long long das_gutman_upper(long long n, long long m) {
    if (n < 2 || m < 1) {
        throw PreconditionError("das_gutman_upper: need n >= 2 and m >= 1");
    }
    return 2 * m * m - (n - 1) * m;
}

namespace detail {

/// (sum of squares of an integer vector - cube_sum) / 2, checked to be an
/// exact integer.
inline long long half_squares_minus(const OrderedVector& x, long long cube_sum) {
    long long ssq = 0;
    for (double v : x) {
        if (!is_near_integer(v)) {
            throw InternalError("bound vector has a non-integer entry: " + std::to_string(v));
        }
        const long long iv = std::llround(v);
        ssq += iv * iv;
    }
    const long long num = ssq - cube_sum;
    if (num % 2 != 0) {
        throw InternalError("bound numerator is odd; squares and cubes have mismatched parity");
    }
    return num / 2;
}

} // namespace detail

/// Sharp bounds for the second Zagreb index of every connected graph
/// realizing `seq`: the upper bound comes from the maximal edge-sum vector,
/// the lower bound from the integerized minimal one (edge sums are integers,
/// so the integer minimum is valid and sharper whenever rho is fractional).
inline BoundsReport zagreb_bounds(const DegreeSequence& seq) {
    const PendantClassSpec spec = build_constraint_set(seq);
    ExtremalTrace upper_trace = maximal_element_two_block(spec.edge_sum_set);
    ExtremalTrace lower_trace = minimal_element_two_block(spec.edge_sum_set);
    OrderedVector lower_vec = integerize_minimal(spec.edge_sum_set, lower_trace);

    const long long upper = detail::half_squares_minus(upper_trace.vector, spec.cube_sum);
    const long long lower = detail::half_squares_minus(lower_vec, spec.cube_sum);
    if (lower > upper) {
        throw InternalError("zagreb_bounds: lower bound exceeds upper bound");
    }
    return BoundsReport{lower,
                        upper,
                        std::move(lower_vec),
                        upper_trace.vector,
                        std::move(lower_trace),
                        std::move(upper_trace),
                        das_gutman_upper(static_cast<long long>(seq.n()), seq.edge_count())};
}

/// Families of graphs with closed-form Zagreb bounds. TreeI/TreeII/TreeIII
/// are the trees T_{t,s} built from t stars; UniformCoreTree covers all
/// trees whose non-pendant degrees equal k (r of them); RegularPlusPendants
/// attaches s pendants to every vertex of a k-regular graph on r vertices.
enum class GraphFamily {
    TreeI,
    TreeII,
    TreeIII,
    UniformCoreTree,
    RegularPlusPendants,
};

inline std::string family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::TreeI: return "tree_i";
        case GraphFamily::TreeII: return "tree_ii";
        case GraphFamily::TreeIII: return "tree_iii";
        case GraphFamily::UniformCoreTree: return "uniform_core_tree";
        case GraphFamily::RegularPlusPendants: return "regular_plus_pendants";
    }
    throw PreconditionError("family_name: unknown family");
}

inline GraphFamily family_from_name(std::string_view name) {
    if (name == "tree_i") return GraphFamily::TreeI;
    if (name == "tree_ii") return GraphFamily::TreeII;
    if (name == "tree_iii") return GraphFamily::TreeIII;
    if (name == "uniform_core_tree") return GraphFamily::UniformCoreTree;
    if (name == "regular_plus_pendants") return GraphFamily::RegularPlusPendants;
    throw PreconditionError("unknown family '" + std::string(name) +
                            "'; expected tree_i, tree_ii, tree_iii, uniform_core_tree or "
                            "regular_plus_pendants");
}

namespace detail {

inline void require_params(const std::vector<long long>& p, std::size_t count,
                           const char* usage) {
    if (p.size() != count) {
        throw PreconditionError(std::string("closed_form_family: expected params ") + usage);
    }
}

inline std::vector<int> repeat_degrees(std::initializer_list<std::pair<long long, long long>> runs) {
    std::vector<int> d;
    for (const auto& [value, count] : runs) {
        d.insert(d.end(), static_cast<std::size_t>(count), static_cast<int>(value));
    }
    return d;
}

} // namespace detail

/// Degree sequence of a closed-form family member.
inline DegreeSequence family_degree_sequence(GraphFamily family,
                                             const std::vector<long long>& params) {
    switch (family) {
        case GraphFamily::TreeI: {
            detail::require_params(params, 2, "t,s with 2 <= s < t < 2s");
            const long long t = params[0], s = params[1];
            if (!(2 <= s && s < t && t < 2 * s)) {
                throw PreconditionError("tree_i: need 2 <= s < t < 2s");
            }
            return DegreeSequence(detail::repeat_degrees({{t, 1}, {s, t}, {1, t * (s - 1)}}));
        }
        case GraphFamily::TreeII: {
            detail::require_params(params, 2, "t,s with s > t >= 2");
            const long long t = params[0], s = params[1];
            if (!(s > t && t >= 2)) throw PreconditionError("tree_ii: need s > t >= 2");
            return DegreeSequence(detail::repeat_degrees({{s, t}, {t, 1}, {1, t * (s - 1)}}));
        }
        case GraphFamily::TreeIII: {
            detail::require_params(params, 1, "t with t >= 2");
            const long long t = params[0];
            if (t < 2) throw PreconditionError("tree_iii: need t >= 2");
            return DegreeSequence(detail::repeat_degrees({{t, t + 1}, {1, t * (t - 1)}}));
        }
        case GraphFamily::UniformCoreTree: {
            detail::require_params(params, 2, "k,r with k >= 2 and r >= 1");
            const long long k = params[0], r = params[1];
            if (k < 2 || r < 1) throw PreconditionError("uniform_core_tree: need k >= 2 and r >= 1");
            return DegreeSequence(detail::repeat_degrees({{k, r}, {1, r * k - 2 * r + 2}}));
        }
        case GraphFamily::RegularPlusPendants: {
            detail::require_params(params, 3, "k,r,s with 2 <= k <= r-1, kr even, s >= 1");
            const long long k = params[0], r = params[1], s = params[2];
            if (!(2 <= k && k <= r - 1 && (k * r) % 2 == 0 && s >= 1)) {
                throw PreconditionError("regular_plus_pendants: need 2 <= k <= r-1, kr even, s >= 1");
            }
            return DegreeSequence(detail::repeat_degrees({{k + s, r}, {1, s * r}}));
        }
    }
    throw PreconditionError("family_degree_sequence: unknown family");
}

/// Closed-form Zagreb bounds for the supported families, evaluated from the
/// family formulas (not through the general pipeline). The extremal edge-sum
/// vectors are built from their known run shapes; the report is internally
/// cross-checked against the (squares - cubes)/2 identity.
inline BoundsReport closed_form_family(GraphFamily family, const std::vector<long long>& params) {
    const DegreeSequence seq = family_degree_sequence(family, params);

    long long lower = 0;
    long long upper = 0;
    std::vector<double> lower_runs;
    std::vector<double> upper_runs;
    std::string branch;

    const auto run = [](std::vector<double>& out, long long value, long long count) {
        detail::append_run(out, static_cast<double>(value), static_cast<std::size_t>(count));
    };

    switch (family) {
        case GraphFamily::TreeI: {
            const long long t = params[0], s = params[1];
            upper = t * s * (s + t - 1);
            run(upper_runs, t + s, t);
            run(upper_runs, s + 1, s * t - t);
            if (t < 2 * s - 1) {
                lower = t * (3 * t - t * t - 5 * s + 2 * s * t + 3 * s * s) / 2;
                run(lower_runs, 2 * s, t);
                run(lower_runs, s + 2, t * (t - s));
                run(lower_runs, s + 1, t * (2 * s - t - 1));
                branch = "closed-form:tree_i:t<2s-1";
            } else {
                lower = (2 * s - 1) * (3 * s + 3 * s * s - 4) / 2;
                run(lower_runs, 2 * s, t);
                run(lower_runs, s + 2, s * t - t);
                branch = "closed-form:tree_i:t=2s-1";
            }
            break;
        }
        case GraphFamily::TreeII: {
            const long long t = params[0], s = params[1];
            lower = t * s * (s + t - 1);
            upper = t * (t - 2 * s + 2 * s * s);
            run(upper_runs, 2 * s, t);
            run(upper_runs, s + 1, t * (s - 2));
            run(upper_runs, t + 1, t);
            run(lower_runs, s + t, t);
            run(lower_runs, s + 1, s * t - t);
            branch = "closed-form:tree_ii";
            break;
        }
        case GraphFamily::TreeIII: {
            const long long t = params[0];
            lower = upper = 2 * t * t * t - t * t;
            run(upper_runs, 2 * t, t);
            run(upper_runs, t + 1, t * (t - 1));
            lower_runs = upper_runs;
            branch = "closed-form:tree_iii";
            break;
        }
        case GraphFamily::UniformCoreTree: {
            const long long k = params[0], r = params[1];
            lower = upper = k * (2 * k * r - 2 * r - k + 2);
            run(upper_runs, 2 * k, r - 1);
            run(upper_runs, k + 1, r * k - 2 * r + 2);
            lower_runs = upper_runs;
            branch = "closed-form:uniform_core_tree";
            break;
        }
        case GraphFamily::RegularPlusPendants: {
            const long long k = params[0], r = params[1], s = params[2];
            lower = upper = r * (2 * s + k * s + k * k) * (k + s) / 2;
            run(upper_runs, 2 * (k + s), r * k / 2);
            run(upper_runs, k + s + 1, s * r);
            lower_runs = upper_runs;
            branch = "closed-form:regular_plus_pendants";
            break;
        }
    }

    OrderedVector lower_vec((std::vector<double>(lower_runs)));
    OrderedVector upper_vec((std::vector<double>(upper_runs)));

    // Cross-check the formula values against the vectors they came from.
    const long long cube = seq.sum_cubes();
    if (detail::half_squares_minus(lower_vec, cube) != lower ||
        detail::half_squares_minus(upper_vec, cube) != upper ||
        std::llround(lower_vec.total()) != seq.sum_squares() ||
        std::llround(upper_vec.total()) != seq.sum_squares()) {
        throw InternalError("closed_form_family: formula and vector evaluations disagree");
    }

    ExtremalTrace lower_trace{branch, 0, 0, std::nullopt, std::nullopt, lower_vec};
    ExtremalTrace upper_trace{branch, 0, 0, std::nullopt, std::nullopt, upper_vec};
    return BoundsReport{lower,
                        upper,
                        std::move(lower_vec),
                        std::move(upper_vec),
                        std::move(lower_trace),
                        std::move(upper_trace),
                        das_gutman_upper(static_cast<long long>(seq.n()), seq.edge_count())};
}

} // namespace mz
