#include <doctest.h>

#include "nestdig/construct.hpp"
#include "nestdig/recognize.hpp"
#include "support.hpp"

using namespace nestdig;
using nestdig::testing::running_example;

TEST_CASE("stops of a single loop") {
    StopData s = compute_stops(Digraph(1, {{1, 1}}), Ordering::identity(1));
    CHECK(s.sigma_right(1) == 2);
    CHECK(s.sigma_left(1) == 0);
    CHECK(s.tail_right(1).empty());
    CHECK(s.tail_left(1).empty());
}

TEST_CASE("stops of the running example") {
    StopData s = compute_stops(running_example(), Ordering::identity(3));
    CHECK(s.sigma_r == std::vector<int>{2, 4, 4});
    CHECK(s.sigma_l == std::vector<int>{0, 1, 1});
    CHECK(s.tail_right(1) == std::vector<int>{3});
    CHECK(s.tail_right(2).empty());
    CHECK(s.tail_right(3).empty());
    CHECK(s.tail_left(1).empty());
    CHECK(s.tail_left(2).empty());
    CHECK(s.tail_left(3).empty());
}

TEST_CASE("stops respect the ordering, not the labels") {
    // Relabel the running example through the ordering (3, 1, 2): position
    // data must be unchanged from the identity case on the matching digraph.
    Digraph d(3, {{1, 1}, {2, 2}, {3, 3}, {2, 1}, {3, 1}, {1, 3}});
    StopData s = compute_stops(d, Ordering({2, 3, 1}));
    CHECK(s.sigma_r == std::vector<int>{2, 4, 4});
    CHECK(s.sigma_l == std::vector<int>{0, 1, 1});
    CHECK(s.tail_right(1) == std::vector<int>{3});
}

TEST_CASE("stops refuse non-reflexive digraphs") {
    CHECK_THROWS_AS(compute_stops(Digraph(2, {{1, 1}}), Ordering::identity(2)),
                    NotReflexiveError);
}

TEST_CASE("built model of a single loop") {
    IntervalModel m = build_model(Digraph(1, {{1, 1}}), Ordering::identity(1));
    CHECK(m.I(1) == RationalInterval(Rational(1, 2), Rational(3, 2)));
    CHECK(m.J(1) == RationalInterval(Rational(1), Rational(1)));
}

TEST_CASE("built model of the symmetric pair") {
    Digraph d(2, {{1, 1}, {2, 2}, {1, 2}, {2, 1}});
    IntervalModel m = build_model(d, Ordering::identity(2));
    CHECK(m.I(1) == RationalInterval(Rational(1, 2), Rational(5, 2)));
    CHECK(m.I(2) == RationalInterval(Rational(1, 2), Rational(5, 2)));
    CHECK(m.J(1) == RationalInterval(Rational(1), Rational(1)));
    CHECK(m.J(2) == RationalInterval(Rational(2), Rational(2)));
}

TEST_CASE("built model of the running example") {
    IntervalModel m = build_model(running_example(), Ordering::identity(3));
    CHECK(m.I(1) == RationalInterval(Rational(1, 2), Rational(5, 3)));
    CHECK(m.I(2) == RationalInterval(Rational(3, 2), Rational(7, 2)));
    CHECK(m.I(3) == RationalInterval(Rational(3, 2), Rational(7, 2)));
    CHECK(m.J(1) == RationalInterval(Rational(1), Rational(1)));
    CHECK(m.J(2) == RationalInterval(Rational(2), Rational(2)));
    CHECK(m.J(3) == RationalInterval(Rational(5, 3), Rational(3)));
    CHECK(is_nest(m));
    CHECK(realizes(m, running_example()).ok);
}

TEST_CASE("build_model refuses non-nest orderings") {
    Digraph d(3, {{1, 1}, {2, 2}, {3, 3}, {1, 3}});
    try {
        build_model(d, Ordering::identity(3));
        FAIL("expected NotNestOrderingError");
    } catch (const NotNestOrderingError& e) {
        CHECK_FALSE(e.report.ok);
        CHECK_FALSE(e.report.violations.empty());
    }
    // The unchecked entry point still runs the arithmetic.
    IntervalModel m = build_model_unchecked(d, Ordering::identity(3));
    CHECK(m.n() == 3);
}

TEST_CASE("built models are correct under every found nest ordering") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);
        Digraph d = random_digraph(n, 0.35, seed, true);
        auto ord = brute_force_nest_ordering(d);
        if (!ord)
            continue;
        IntervalModel m = build_model(d, *ord);
        CHECK(is_nest(m));
        CHECK(realizes(m, d).ok);
        for (int v = 1; v <= n; ++v) {
            // Endpoints live in position space: everything inside [0, n + 1],
            // with denominators bounded by the tail corrections.
            CHECK(Rational(0) <= m.I(v).left);
            CHECK(m.I(v).right <= Rational(n + 1));
            CHECK(m.I(v).contains(m.J(v)));
            CHECK(m.I(v).left.den() <= n + 2);
            CHECK(m.I(v).right.den() <= n + 2);
            // J endpoints fold I endpoints or integer positions.
            CHECK(m.J(v).left.den() <= n + 2);
            CHECK(m.J(v).right.den() <= n + 2);
        }
    }
}

TEST_CASE("destination interval of a vertex with no proper in-neighbors") {
    // No z != v sends an arc to v, so both fallbacks fire: J_v is the point at
    // v's own position.
    Digraph d(2, {{1, 1}, {2, 2}});
    IntervalModel m = build_model(d, Ordering::identity(2));
    CHECK(m.J(1) == RationalInterval(Rational(1), Rational(1)));
    CHECK(m.J(2) == RationalInterval(Rational(2), Rational(2)));
    CHECK(realizes(m, d).ok);
}
