#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "george/enumerate.hpp"
#include "george/factorization.hpp"
#include "george/statistics.hpp"
#include "test_util.hpp"

using namespace george;

namespace {

Element elem(Family f, int n, const char* text) {
    return require_valid(make_descriptor(f, n), parse_window(text));
}

std::vector<std::pair<GroupDescriptor, long long>> unbranched_sweeps() {
    return {
        {make_descriptor(Family::A, 3), -1},   {make_descriptor(Family::A, 4), -1},
        {make_descriptor(Family::B, 2), -1},   {make_descriptor(Family::B, 4), -1},
        {make_descriptor(Family::AffA, 2), 6}, {make_descriptor(Family::AffA, 3), 6},
        {make_descriptor(Family::AffC, 2), 6},
    };
}

}  // namespace

TEST_CASE("peel pairs follow the deterministic recipes") {
    auto [x1, y1] = find_peel_pair(elem(Family::A, 3, "[2,3,1]"));
    CHECK(x1 == 2);
    CHECK(y1 == 3);

    auto [x2, y2] = find_peel_pair(elem(Family::B, 2, "[-1,2]"));
    CHECK(x2 == -1);
    CHECK(y2 == 1);

    auto [x3, y3] = find_peel_pair(elem(Family::AffA, 2, "[0,3]"));
    CHECK(x3 == 0);
    CHECK(y3 == 1);

    CHECK_THROWS_AS(find_peel_pair(identity(make_descriptor(Family::A, 3))),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_peel_pair(elem(Family::D, 2, "[-1,-2]")), std::invalid_argument);
    CHECK_THROWS_AS(find_peel_pair(identity(make_descriptor(Family::AffB, 2))),
                    std::invalid_argument);
}

TEST_CASE("peeling drops tvd by exactly the transposition's tvd") {
    Element w = elem(Family::A, 3, "[2,3,1]");
    auto [v, t] = peel(w, 2, 3);
    CHECK(v == elem(Family::A, 3, "[2,1,3]"));
    CHECK(tvd(w) == 4);
    CHECK(tvd(v) == 2);
    CHECK(t.cost2 == 2);

    auto [v2, t2] = peel(elem(Family::B, 2, "[-1,2]"), -1, 1);
    CHECK(v2.is_identity());
    CHECK(t2.cost2 == 2);

    // A transposition peeled at its own pair gives the identity.
    for (const auto& [d, bound] : unbranched_sweeps()) {
        for (const Transposition& t3 : transpositions_with_cost2_at_most(d, 6)) {
            auto [rest, peeled] = peel(as_element(t3), t3.i, t3.j);
            CHECK(rest.is_identity());
            CHECK(peeled == t3);
        }
    }

    CHECK_THROWS_AS(peel(elem(Family::A, 3, "[2,3,1]"), 1, 3), std::invalid_argument);
}

TEST_CASE("greedy factorization on the worked examples") {
    Factorization empty = factor_unbranched(identity(make_descriptor(Family::AffC, 3)));
    CHECK(empty.factors.empty());
    CHECK(empty.total_cost2 == 0);

    Factorization f = factor_unbranched(elem(Family::A, 3, "[3,1,2]"));
    CHECK(f.factors.size() == 2);
    CHECK(f.total_cost2 == 4);  // cost 2
    CHECK(factorization_product(f) == elem(Family::A, 3, "[3,1,2]"));

    Factorization g = factor_unbranched(elem(Family::B, 2, "[-1,-2]"));
    CHECK(g.total_cost2 == 6);  // cost 3 = tvd/2
    CHECK(factorization_product(g) == elem(Family::B, 2, "[-1,-2]"));

    CHECK_THROWS_AS(factor_unbranched(elem(Family::D, 2, "[-1,-2]")), std::invalid_argument);
    CHECK_THROWS_AS(factor_unbranched(identity(make_descriptor(Family::AffD, 2))),
                    std::invalid_argument);
}

TEST_CASE("every unbranched element peels to the identity at cost tvd/2") {
    for (const auto& [d, bound] : unbranched_sweeps()) {
        for (const Element& w : enumerate_elements(d, bound)) {
            if (!w.is_identity()) {
                // The advertised pair always exists, satisfies the chain, and
                // is transposable.
                auto [x, y] = find_peel_pair(w);
                CHECK(evaluate(w, x) >= y);
                CHECK(y > x);
                CHECK(x >= evaluate(w, y));
                CHECK(is_transposable(d, x, y));
            }
            Factorization f = factor_unbranched(w);
            CHECK(factorization_product(f) == w);
            CHECK(f.total_cost2 == tvd(w));
            CHECK(static_cast<long long>(f.factors.size()) <= coxeter_length(w));
            long long recomputed = 0;
            for (const Transposition& t : f.factors) recomputed += t.cost2;
            CHECK(recomputed == f.total_cost2);
        }
    }
}

TEST_CASE("witness verification") {
    Element w = elem(Family::A, 3, "[3,1,2]");
    WitnessReport ok = verify_witness(w, factor_unbranched(w));
    CHECK(ok.product_matches);
    CHECK(ok.meets_lower_bound);
    CHECK(ok.known_optimal);
    REQUIRE(ok.formula_cost2.has_value());
    CHECK(*ok.formula_cost2 == 4);

    WitnessReport bad = verify_witness(w, Factorization{w.descriptor, {}, 0});
    CHECK_FALSE(bad.product_matches);

    // t * t = identity: a valid witness, correct but not optimal.
    Transposition t = make_transposition(w.descriptor, 1, 3);
    Factorization tt{w.descriptor, {t, t}, 2 * t.cost2};
    WitnessReport loop = verify_witness(identity(w.descriptor), tt);
    CHECK(loop.product_matches);
    CHECK(loop.total_cost2 == 2 * t.cost2);
    CHECK_FALSE(loop.known_optimal);
    CHECK(!loop.notes.empty());
}
