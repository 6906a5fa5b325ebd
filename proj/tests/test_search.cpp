#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

TEST_CASE("FMC(4) pairs are exhausted with no witness") {
    SearchOutcome a = decide_membership(2, 4, 2);
    CHECK(a.verdict == Verdict::ExhaustedNone);
    CHECK(!a.witness.has_value());
    CHECK(a.stats.nodes > 0);

    SearchOutcome b = decide_membership(2, 5, 2);
    CHECK(b.verdict == Verdict::ExhaustedNone);
}

TEST_CASE("the symmetry-broken verdict agrees with a full brute force on (2,4,2)") {
    bool some_free = false;
    long long grids = 0;
    oracle::all_rectangles(2, 4, [&](const std::vector<std::vector<int>>& g) {
        ++grids;
        if (!oracle::has_rainbow_c4(g)) some_free = true;
        return true;
    });
    CHECK(grids == 24 * 9); // 4! first rows, 9 derangement-compatible second rows
    CHECK(!some_free);
    CHECK(decide_membership(2, 4, 2).verdict == Verdict::ExhaustedNone);
}

TEST_CASE("the symmetry-broken verdict agrees with a brute force on (3,6,3)") {
    bool some_free = false;
    oracle::all_rectangles(3, 6, [&](const std::vector<std::vector<int>>& g) {
        if (!oracle::has_rainbow_c6(g)) {
            some_free = true;
            return false; // existence settled
        }
        return true;
    });
    SearchOutcome out = decide_membership(3, 6, 3);
    CHECK(some_free);
    CHECK(out.verdict == Verdict::Found);
    REQUIRE(out.witness.has_value());
    CHECK(!oracle::has_rainbow_c6(oracle::to_grid(*out.witness)));
}

TEST_CASE("(3,7,3) finds the frozen witness class") {
    SearchOutcome out = decide_membership(3, 7, 3);
    REQUIRE(out.verdict == Verdict::Found);
    REQUIRE(out.witness.has_value());
    CHECK(!find_rainbow_cycle(to_coloring(*out.witness), 3).has_value());
    // re-derivation fixed point: the frozen constant is the canonical form
    // of the witness the search produces
    CHECK(canonical_form(*out.witness) == k37_coloring());
}

TEST_CASE("(4,7,3) is exhausted: no coloring of K_{4,7} forbids rainbow C6") {
    SearchOutcome out = decide_membership(4, 7, 3);
    CHECK(out.verdict == Verdict::ExhaustedNone);
}

TEST_CASE("(3,9,3) is exhausted, matching the 5k-6 bound") {
    SearchOutcome out = decide_membership(3, 9, 3);
    CHECK(out.verdict == Verdict::ExhaustedNone);
}

TEST_CASE("a tiny budget yields BudgetExceeded, never ExhaustedNone") {
    SearchOutcome out = decide_membership(4, 7, 3, {.node_budget = 1, .threads = 1});
    CHECK(out.verdict == Verdict::BudgetExceeded);
    CHECK(!out.witness.has_value());
}

TEST_CASE("dimension preconditions are enforced") {
    CHECK_THROWS_AS(decide_membership(1, 4, 2), Error); // m < k
    CHECK_THROWS_AS(decide_membership(3, 2, 3), Error); // n < m
    CHECK_THROWS_AS(decide_membership(2, 3, 2), Error); // n < 2k
    CHECK_THROWS_AS(decide_membership(3, 6, 1), Error); // k < 2
}

TEST_CASE("verdicts and witnesses do not depend on the thread count") {
    SearchOptions two_threads{.node_budget = 1'000'000'000ULL, .threads = 2};
    SearchOutcome a1 = decide_membership(3, 7, 3);
    SearchOutcome a2 = decide_membership(3, 7, 3, two_threads);
    CHECK(a1.verdict == a2.verdict);
    CHECK(a1.witness == a2.witness);

    SearchOutcome b1 = decide_membership(4, 7, 3);
    SearchOutcome b2 = decide_membership(4, 7, 3, two_threads);
    CHECK(b1.verdict == b2.verdict);

    SearchOutcome c1 = decide_membership(2, 5, 2);
    SearchOutcome c2 = decide_membership(2, 5, 2, two_threads);
    CHECK(c1.verdict == c2.verdict);
}

TEST_CASE("membership is monotone in the row count") {
    // every n = 6 pair is a member; check downward closure by search
    for (int m = 6; m >= 3; --m) {
        SearchOutcome out = decide_membership(m, 6, 3);
        CHECK(out.verdict == Verdict::Found);
    }
}

TEST_CASE("collection mode returns the single rainbow-free (3,7) class") {
    CollectOutcome out = collect_free_classes(3, 7, 3);
    CHECK(out.verdict == Verdict::ExhaustedNone);
    REQUIRE(out.classes.size() == 1);
    CHECK(out.classes.front() == k37_coloring());
}

TEST_CASE("collection mode is thread-count independent") {
    CollectOutcome a = collect_free_classes(3, 7, 3);
    CollectOutcome b = collect_free_classes(3, 7, 3, {.node_budget = 1'000'000'000ULL, .threads = 2});
    CHECK(a.classes == b.classes);
}

TEST_CASE("found witnesses always pass independent re-validation") {
    for (auto [m, n] : {std::pair{3, 6}, {4, 6}, {3, 7}, {3, 8}}) {
        SearchOutcome out = decide_membership(m, n, 3);
        REQUIRE(out.verdict == Verdict::Found);
        REQUIRE(out.witness.has_value());
        CHECK_NOTHROW(LatinRectangle::validate(m, n, out.witness->cells()));
        CHECK(!oracle::has_rainbow_c6(oracle::to_grid(*out.witness)));
    }
}
