#pragma once

// Shared fixture data for the unit and acceptance suites.

#include <optional>
#include <string>
#include <vector>

#include "mz/mz.hpp"

namespace fixtures {

inline mz::OrderedVector ov(std::vector<double> entries) {
    return mz::OrderedVector(std::move(entries));
}

/// One constraint set under test; two-block sets also keep their expanded
/// per-coordinate form.
struct SetFixture {
    std::string name;
    std::optional<mz::TwoBlockSet> two_block;
    mz::BoxedSumSet boxed;
};

inline std::vector<SetFixture> extremal_sets() {
    std::vector<SetFixture> out;
    const auto add_two_block = [&](std::string name, mz::TwoBlockParams p) {
        mz::TwoBlockSet tb(p);
        mz::BoxedSumSet boxed = tb.expanded();
        out.push_back({std::move(name), std::move(tb), std::move(boxed)});
    };
    const auto add_boxed = [&](std::string name, std::vector<double> lo, std::vector<double> hi,
                               double total) {
        out.push_back({std::move(name), std::nullopt,
                       mz::BoxedSumSet(ov(std::move(lo)), ov(std::move(hi)), total)});
    };

    add_two_block("star-union-tree", {.n = 6, .h = 3, .m1 = 4, .M1 = 5, .m2 = 3, .M2 = 4, .total = 24});
    add_two_block("unicyclic-13", {.n = 13, .h = 9, .m1 = 4, .M1 = 6, .m2 = 3, .M2 = 4, .total = 60});
    add_two_block("singleton", {.n = 5, .h = 2, .m1 = 3, .M1 = 3, .m2 = 1, .M2 = 1, .total = 9});
    add_two_block("star-union-tree-2", {.n = 6, .h = 2, .m1 = 5, .M1 = 6, .m2 = 3, .M2 = 4, .total = 26});
    add_two_block("mean-feasible", {.n = 4, .h = 2, .m1 = 1, .M1 = 4, .m2 = 0, .M2 = 3, .total = 8});
    add_two_block("whole-vector-block", {.n = 8, .h = 8, .m1 = 1, .M1 = 5, .m2 = 1, .M2 = 5, .total = 17});
    add_two_block("separated-blocks", {.n = 7, .h = 3, .m1 = 6, .M1 = 9, .m2 = 1, .M2 = 4, .total = 30});
    add_two_block("overlapping-blocks", {.n = 9, .h = 4, .m1 = 2, .M1 = 7, .m2 = 1, .M2 = 6, .total = 31});
    add_two_block("short-head", {.n = 3, .h = 1, .m1 = 2, .M1 = 8, .m2 = 0, .M2 = 5, .total = 9});
    add_two_block("pinned-tail", {.n = 10, .h = 5, .m1 = 3, .M1 = 6, .m2 = 3, .M2 = 3, .total = 33});
    add_two_block("wide-head", {.n = 12, .h = 6, .m1 = 4, .M1 = 10, .m2 = 2, .M2 = 3, .total = 40});
    add_two_block("uniform-interval", {.n = 5, .h = 4, .m1 = 0, .M1 = 7, .m2 = 0, .M2 = 7, .total = 13});

    add_boxed("box-mid", {2, 1, 0}, {5, 4, 3}, 9);
    add_boxed("box-high", {2, 1, 0}, {5, 4, 3}, 11);
    add_boxed("box-at-upper", {2, 1, 0}, {5, 4, 3}, 12);
    add_boxed("box-at-lower", {2, 1, 0}, {5, 4, 3}, 3);
    add_boxed("box-disjoint", {7, 4, 2}, {9, 6, 3}, 16);
    add_boxed("box-free", {0, 0, 0, 0}, {10, 10, 10, 10}, 17);
    add_boxed("box-ragged", {3, 3, 2, 1, 0}, {6, 5, 5, 4, 2}, 18);
    add_boxed("box-wide", {2, 2, 2, 2, 1, 1, 1, 1}, {7, 7, 6, 6, 5, 5, 4, 4}, 26);
    return out;
}

/// Pendant-class degree sequences with n <= 8 used for the sandwich checks.
inline std::vector<std::vector<int>> sandwich_sequences() {
    return {
        {2, 2, 1, 1},
        {3, 2, 2, 1},
        {2, 2, 2, 1, 1},
        {3, 3, 3, 1, 1, 1},
        {2, 2, 2, 2, 1, 1},
        {3, 3, 2, 2, 1, 1},
        {3, 3, 3, 3, 2, 1, 1},
        {3, 3, 2, 2, 2, 1, 1},
        {4, 3, 3, 2, 1, 1},
        {3, 3, 3, 3, 2, 2, 1, 1},
    };
}

/// Parameters (n, a, h, alpha) for the one-sided constraint sets.
struct SpecialSetFixture {
    std::size_t n;
    double a;
    std::size_t h;
    double alpha;
};

inline std::vector<SpecialSetFixture> floor_set_fixtures() {
    return {{4, 10, 2, 2}, {5, 12, 3, 2.5}, {6, 9, 1, 4}, {7, 21, 7, 3}};
}

inline std::vector<SpecialSetFixture> ceiling_set_fixtures() {
    return {{4, 10, 2, 1}, {6, 15, 3, 2}, {5, 9, 4, 2.5}, {8, 30, 2, 3}};
}

inline mz::BoxedSumSet floor_set_expanded(const SpecialSetFixture& f) {
    std::vector<double> lo(f.n, 0.0);
    for (std::size_t i = 0; i < f.h; ++i) lo[i] = f.alpha;
    std::vector<double> hi(f.n, f.a);
    return mz::BoxedSumSet(ov(std::move(lo)), ov(std::move(hi)), f.a);
}

inline mz::BoxedSumSet ceiling_set_expanded(const SpecialSetFixture& f) {
    std::vector<double> lo(f.n, 0.0);
    std::vector<double> hi(f.n, f.a);
    for (std::size_t i = f.h; i < f.n; ++i) hi[i] = f.alpha;
    return mz::BoxedSumSet(ov(std::move(lo)), ov(std::move(hi)), f.a);
}

/// Published reference bounds kept as golden data; "x" entries are absent.
struct ReferenceRow {
    const char* source;
    std::optional<double> lower;
    std::optional<double> upper;
};

struct ReferenceTable {
    std::vector<int> degrees;
    long long ours_lower;
    long long ours_upper;
    std::vector<ReferenceRow> rows;
};

inline ReferenceTable table_unicyclic_13() {
    return {{3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1},
            64,
            74,
            {{"bollobas", std::nullopt, 277.9},
             {"das-gutman", std::nullopt, 182},
             {"grassi", 61.462, 77},
             {"lu", -28, 76},
             {"yan", 64, 92}}};
}

inline ReferenceTable table_unicyclic_4() {
    return {{3, 2, 2, 1},
            19,
            20,
            {{"bollobas", std::nullopt, 22.511},
             {"das-gutman", std::nullopt, 20},
             {"grassi", 18.5, 20},
             {"lu", 18, 22},
             {"yan", 19, 19}}};
}

inline ReferenceTable table_bicyclic_7() {
    return {{3, 3, 3, 3, 2, 1, 1},
            54,
            58,
            {{"bollobas", std::nullopt, 99.75},
             {"das-gutman", std::nullopt, 80},
             {"grassi", 51.25, 58},
             {"lu", 40, 59},
             {"zhao", 50, 68}}};
}

} // namespace fixtures
