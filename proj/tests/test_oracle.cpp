#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "george/oracle.hpp"
#include "george/statistics.hpp"
#include "test_util.hpp"

using namespace george;

namespace {

Element elem(Family f, int n, const char* text) {
    return require_valid(make_descriptor(f, n), parse_window(text));
}

}  // namespace

TEST_CASE("a transposition's own cost is optimal") {
    for (const auto& d : testutil::small_descriptors()) {
        for (const Transposition& t : transpositions_with_cost2_at_most(d, 6)) {
            SearchResult res = min_cost(as_element(t), Weight::Cost);
            REQUIRE(res.status == SearchStatus::Found);
            CHECK(res.optimum2 == t.cost2);
            REQUIRE(res.witness.factors.size() == 1);
            CHECK(res.witness.factors[0] == t);
        }
    }
}

TEST_CASE("search results on the worked elements") {
    SearchResult d2 = min_cost(elem(Family::D, 2, "[-1,-2]"), Weight::Cost);
    REQUIRE(d2.status == SearchStatus::Found);
    CHECK(d2.optimum2 == 8);  // cost 4 = 1 + 3
    CHECK(d2.witness.factors.size() == 2);

    SearchResult refl = min_cost(elem(Family::A, 3, "[2,3,1]"), Weight::Unit);
    REQUIRE(refl.status == SearchStatus::Found);
    CHECK(refl.optimum2 / 2 == 2);  // reflection length = n - c(w)

    SearchResult id = min_cost(identity(make_descriptor(Family::AffD, 2)), Weight::Cost);
    CHECK(id.optimum2 == 0);
    CHECK(id.witness.factors.empty());
}

TEST_CASE("reflection length equals n minus the cycle count") {
    for (int n = 2; n <= 4; ++n) {
        for (const Element& w : enumerate_elements(make_descriptor(Family::A, n))) {
            SearchResult res = min_cost(w, Weight::Unit);
            REQUIRE(res.status == SearchStatus::Found);
            CHECK(res.optimum2 / 2 == n - cycle_count(w));
        }
    }
}

TEST_CASE("depth search agrees with the reflection depth formula") {
    for (Family f : {Family::A, Family::B, Family::D}) {
        auto d = make_descriptor(f, 3);
        for (const Transposition& t : transpositions_with_cost2_at_most(d, 100)) {
            SearchResult res = min_cost(as_element(t), Weight::Depth);
            REQUIRE(res.status == SearchStatus::Found);
            // (reflen + length)/2 <= depth and one factor attains it.
            CHECK(res.optimum2 == depth2_of_transposition(t));
        }
    }
}

TEST_CASE("BFS word length equals the class-inversion count") {
    CHECK(word_length(identity(make_descriptor(Family::B, 2))) == 0);
    CHECK(word_length(elem(Family::B, 2, "[-1,2]")) == 1);
    CHECK(word_length(elem(Family::A, 3, "[3,2,1]")) == 3);

    for (const auto& d : testutil::small_descriptors()) {
        if (d.window_size > 3) continue;
        auto ball = enumerate_elements_with_length(d, d.is_finite() ? -1 : 5);
        for (const auto& e : ball) {
            CHECK(word_length(e.element, e.length + 1) == e.length);
            CHECK(coxeter_length(e.element) == e.length);
        }
    }
}

TEST_CASE("budget exhaustion is reported, never silently wrong") {
    SearchOptions tight;
    tight.budget2 = 2;
    SearchResult res = min_cost(elem(Family::A, 4, "[4,3,2,1]"), Weight::Cost, tight);
    CHECK(res.status == SearchStatus::BudgetExhausted);
    CHECK(res.optimum2 == -1);
    CHECK(res.budget2_used == 2);

    CHECK_THROWS_AS(word_length(elem(Family::AffA, 2, "[-1,4]"), 1), std::runtime_error);
}

TEST_CASE("environment variable overrides the derived budget") {
    setenv("GEORGE_COST_BUDGET", "1", 1);
    SearchResult res = min_cost(elem(Family::A, 4, "[4,3,2,1]"), Weight::Cost);
    CHECK(res.status == SearchStatus::BudgetExhausted);
    CHECK(res.budget2_used == 2);
    setenv("GEORGE_COST_BUDGET", "abc", 1);
    CHECK_THROWS_AS(min_cost(elem(Family::A, 4, "[4,3,2,1]"), Weight::Cost),
                    std::invalid_argument);
    unsetenv("GEORGE_COST_BUDGET");
}

TEST_CASE("theorem sweeps agree exactly") {
    SweepReport a3 = verify_theorem(make_descriptor(Family::A, 3), -1);
    CHECK(a3.tested == 6);
    CHECK(a3.agree == 6);
    CHECK(a3.max_deviation2 == 0);

    SweepReport d3 = verify_theorem(make_descriptor(Family::D, 3), -1);
    CHECK(d3.tested == 24);
    CHECK(d3.agree == 24);

    SweepReport c2 = verify_theorem(make_descriptor(Family::AffC, 2), 6);
    CHECK(c2.tested > 0);
    CHECK(c2.agree == c2.tested);
    CHECK(c2.disagreements.empty());
}

TEST_CASE("sweeps are deterministic and parallel-safe") {
    SweepOptions serial;
    serial.keep_rows = true;
    SweepOptions threaded;
    threaded.keep_rows = true;
    threaded.jobs = 4;
    SweepReport one = verify_theorem(make_descriptor(Family::B, 3), -1, serial);
    SweepReport two = verify_theorem(make_descriptor(Family::B, 3), -1, threaded);
    CHECK(one.tested == two.tested);
    CHECK(one.agree == two.agree);
    CHECK(one.total_expanded == two.total_expanded);
    REQUIRE(one.rows.size() == two.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
        CHECK(one.rows[i].element == two.rows[i].element);
        CHECK(one.rows[i].oracle2 == two.rows[i].oracle2);
    }
}

TEST_CASE("the A* heuristic changes no optimum and expands no extra nodes") {
    for (const auto& [d, bound] :
         std::vector<std::pair<GroupDescriptor, long long>>{
             {make_descriptor(Family::A, 4), -1},
             {make_descriptor(Family::B, 3), -1},
             {make_descriptor(Family::AffA, 2), 5},
             {make_descriptor(Family::AffC, 2), 5}}) {
        for (const Element& w : enumerate_elements(d, bound)) {
            SearchOptions plain;
            SearchOptions with_h;
            with_h.astar = true;
            SearchResult dij = min_cost(w, Weight::Cost, plain);
            SearchResult ast = min_cost(w, Weight::Cost, with_h);
            REQUIRE(dij.status == SearchStatus::Found);
            REQUIRE(ast.status == SearchStatus::Found);
            CHECK(dij.optimum2 == ast.optimum2);
            CHECK(ast.expanded_nodes <= dij.expanded_nodes);
        }
    }
}

TEST_CASE("ordering of the natural statistics") {
    // reflen <= (reflen + l)/2 <= depth <= l, via oracles only.
    for (Family f : {Family::A, Family::B, Family::D}) {
        auto d = make_descriptor(f, f == Family::A ? 3 : 2);
        for (const Element& w : enumerate_elements(d)) {
            long long reflen2 = min_cost(w, Weight::Unit).optimum2;
            long long depth2 = min_cost(w, Weight::Depth).optimum2;
            long long len = coxeter_length(w);
            CHECK(reflen2 <= reflen2 / 2 + len);  // reflen <= (reflen + l)/2
            CHECK(reflen2 / 2 + len <= depth2);
            CHECK(depth2 <= 2 * len);
        }
    }

    // The extended chain on unbranched groups: depth <= tvd/2 = $ <= l.
    for (const auto& [d, bound] :
         std::vector<std::pair<GroupDescriptor, long long>>{
             {make_descriptor(Family::A, 3), -1}, {make_descriptor(Family::B, 2), -1}}) {
        for (const Element& w : enumerate_elements(d, bound)) {
            long long depth2 = min_cost(w, Weight::Depth).optimum2;
            long long cost2 = min_cost(w, Weight::Cost).optimum2;
            CHECK(depth2 <= tvd(w));
            CHECK(cost2 == tvd(w));
            CHECK(cost2 <= 2 * coxeter_length(w));
        }
    }

    // Branched families break depth <= tvd/2 <= l already at a simple
    // generator: tvd/2 = 3 > 1 = l for <(1 -2)> in D.
    Transposition s = make_transposition(make_descriptor(Family::D, 2), 1, -2);
    Element e = as_element(s);
    CHECK(tvd(e) / 2 == 3);
    CHECK(coxeter_length(e) == 1);
    CHECK(tvd(e) / 2 > coxeter_length(e));
}
