#include <catch2/catch.hpp>

#include <algorithm>
#include <vector>

#include "fixtures.hpp"
#include "mz/mz.hpp"

using fixtures::ov;
using mz::OrderedVector;
using mz::TwoBlockParams;
using mz::TwoBlockSet;

TEST_CASE("sample_feasible is deterministic and stays inside the set") {
    for (const auto& f : fixtures::extremal_sets()) {
        INFO(f.name);
        const auto first = mz::sample_feasible(f.boxed, 50, 97);
        const auto second = mz::sample_feasible(f.boxed, 50, 97);
        REQUIRE(first.vectors.size() == 50);
        for (std::size_t i = 0; i < first.vectors.size(); ++i) {
            CHECK(mz::approx_equal(first.vectors[i], second.vectors[i], 0.0));
            CHECK(f.boxed.contains(first.vectors[i], 1e-6));
        }
    }
}

TEST_CASE("sampling degenerate sets returns the unique member") {
    SECTION("singleton two-block set") {
        const TwoBlockSet set(TwoBlockParams{.n = 5, .h = 2, .m1 = 3, .M1 = 3, .m2 = 1, .M2 = 1, .total = 9});
        const auto sample = mz::sample_feasible(set, 10, 5);
        for (const auto& x : sample.vectors) {
            CHECK(mz::approx_equal(x, ov({3, 3, 1, 1, 1}), 1e-9));
        }
    }
    SECTION("total at the lower sum pins every coordinate") {
        const mz::BoxedSumSet set(ov({2, 1, 0}), ov({5, 4, 3}), 3);
        const auto sample = mz::sample_feasible(set, 10, 5);
        for (const auto& x : sample.vectors) {
            CHECK(mz::approx_equal(x, ov({2, 1, 0}), 1e-9));
        }
    }
}

TEST_CASE("enumerate_integer_feasible") {
    SECTION("small single-block set") {
        const TwoBlockSet set(TwoBlockParams{.n = 3, .h = 3, .m1 = 0, .M1 = 2, .m2 = 0, .M2 = 2, .total = 3});
        auto members = mz::enumerate_integer_feasible(set);
        REQUIRE(members.size() == 2);
        const bool has_210 = std::any_of(members.begin(), members.end(), [](const OrderedVector& x) {
            return mz::approx_equal(x, ov({2, 1, 0}));
        });
        const bool has_111 = std::any_of(members.begin(), members.end(), [](const OrderedVector& x) {
            return mz::approx_equal(x, ov({1, 1, 1}));
        });
        CHECK(has_210);
        CHECK(has_111);
    }
    SECTION("total at the upper sum leaves only the bound vector") {
        const TwoBlockSet set(TwoBlockParams{.n = 4, .h = 2, .m1 = 1, .M1 = 4, .m2 = 0, .M2 = 3, .total = 14});
        const auto members = mz::enumerate_integer_feasible(set);
        REQUIRE(members.size() == 1);
        CHECK(mz::approx_equal(members.front(), ov({4, 4, 3, 3})));
    }
    SECTION("caps") {
        const TwoBlockSet big(TwoBlockParams{.n = 7, .h = 3, .m1 = 1, .M1 = 3, .m2 = 0, .M2 = 2, .total = 8});
        CHECK_THROWS_AS(mz::enumerate_integer_feasible(big), mz::CapacityError);
        CHECK_NOTHROW(mz::enumerate_integer_feasible(big, 7));
        const TwoBlockSet tall(TwoBlockParams{.n = 3, .h = 2, .m1 = 1, .M1 = 25, .m2 = 0, .M2 = 2, .total = 8});
        CHECK_THROWS_AS(mz::enumerate_integer_feasible(tall), mz::CapacityError);
    }
    SECTION("non-integer data is rejected") {
        const TwoBlockSet frac(TwoBlockParams{.n = 3, .h = 2, .m1 = 0.5, .M1 = 2, .m2 = 0, .M2 = 1, .total = 3});
        CHECK_THROWS_AS(mz::enumerate_integer_feasible(frac), mz::PreconditionError);
    }
    SECTION("unreachable totals are flagged upstream at set construction") {
        // One even coordinate cannot sum to an odd total.
        CHECK_THROWS_AS(TwoBlockSet(TwoBlockParams{.n = 1, .h = 1, .m1 = 2, .M1 = 2, .m2 = 2, .M2 = 2, .total = 3}),
                        mz::InfeasibleSetError);
    }
}

namespace {

mz::ExtremalCandidates candidates_for(const TwoBlockSet& set) {
    const auto max_trace = mz::maximal_element_two_block(set);
    const auto min_trace = mz::minimal_element_two_block(set);
    std::optional<OrderedVector> integer_min;
    if (set.is_integral()) integer_min = mz::integerize_minimal(set, min_trace);
    return {max_trace.vector, min_trace.vector, std::move(integer_min)};
}

} // namespace

TEST_CASE("verify_extremal") {
    SECTION("sampled verification of the 13-edge set passes") {
        const TwoBlockSet set(TwoBlockParams{.n = 13, .h = 9, .m1 = 4, .M1 = 6, .m2 = 3, .M2 = 4, .total = 60});
        const auto report = mz::verify_extremal(set, candidates_for(set), 500, 11);
        CHECK_FALSE(report.used_enumeration);
        CHECK(report.checked == 500);
        CHECK(report.passed());
    }
    SECTION("exhaustive verification of a small integer set passes") {
        const TwoBlockSet set(TwoBlockParams{.n = 6, .h = 3, .m1 = 4, .M1 = 5, .m2 = 3, .M2 = 4, .total = 24});
        const auto report = mz::verify_extremal(set, candidates_for(set));
        CHECK(report.used_enumeration);
        CHECK(report.checked > 0);
        CHECK(report.passed());
    }
    SECTION("singleton sets pass trivially") {
        const TwoBlockSet set(TwoBlockParams{.n = 5, .h = 2, .m1 = 3, .M1 = 3, .m2 = 1, .M2 = 1, .total = 9});
        CHECK(mz::verify_extremal(set, candidates_for(set)).passed());
    }
    SECTION("a corrupted maximal candidate is reported with a counterexample") {
        const TwoBlockSet set(TwoBlockParams{.n = 6, .h = 3, .m1 = 4, .M1 = 5, .m2 = 3, .M2 = 4, .total = 24});
        auto bad = candidates_for(set);
        bad.maximal = ov({5, 4, 4, 4, 4, 3});  // a member, but not maximal
        const auto report = mz::verify_extremal(set, bad);
        CHECK_FALSE(report.passed());
        REQUIRE_FALSE(report.failures.empty());
        CHECK(report.failures.front().find("[") != std::string::npos);
    }
}
