#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <unordered_set>

#include "george/enumerate.hpp"
#include "george/group.hpp"
#include "test_util.hpp"

using namespace george;

namespace {

Element elem(Family f, int n, const char* text) {
    return require_valid(make_descriptor(f, n), parse_window(text));
}

}  // namespace

TEST_CASE("descriptor ranks and periods") {
    CHECK(make_descriptor(Family::A, 1).period() == 0);
    CHECK(make_descriptor(Family::AffA, 3).period() == 3);
    CHECK(make_descriptor(Family::AffC, 3).period() == 8);
    CHECK(make_descriptor(Family::AffB, 2).period() == 6);
    CHECK_THROWS_AS(make_descriptor(Family::D, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_descriptor(Family::AffA, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_descriptor(Family::AffD, 1), std::invalid_argument);
}

TEST_CASE("evaluation extends the window by the symmetry rules") {
    Element w = elem(Family::AffC, 3, "[-5,6,7]");
    CHECK(evaluate(w, 1) == -5);
    CHECK(evaluate(w, 4) == 4);
    CHECK(evaluate(w, 5) == 1);
    CHECK(evaluate(w, 6) == 2);
    CHECK(evaluate(w, 7) == 13);
    CHECK(evaluate(w, 8) == 8);
    CHECK(evaluate(w, -1) == 5);
    CHECK(evaluate(w, 0) == 0);

    Element id = identity(make_descriptor(Family::B, 3));
    for (long long i = -3; i <= 3; ++i) {
        if (i == 0) continue;
        CHECK(evaluate(id, i) == i);
    }
    CHECK_THROWS_AS(evaluate(id, 0), std::out_of_range);
    CHECK_THROWS_AS(evaluate(id, 4), std::out_of_range);
    CHECK_THROWS_AS(evaluate(elem(Family::A, 3, "[2,1,3]"), 0), std::out_of_range);
}

TEST_CASE("compose and inverse") {
    Element w = elem(Family::A, 3, "[2,3,1]");
    Element id = identity(w.descriptor);
    CHECK(compose(w, id) == w);
    CHECK(compose(id, w) == w);
    CHECK(compose(elem(Family::A, 2, "[2,1]"), elem(Family::A, 2, "[2,1]")).is_identity());

    // Direct evaluation oracle for the frozen product window.
    Element ww = compose(w, w);
    for (long long i = 1; i <= 3; ++i) CHECK(evaluate(ww, i) == evaluate(w, evaluate(w, i)));
    CHECK(ww == elem(Family::A, 3, "[3,1,2]"));

    CHECK(inverse(id) == id);
    CHECK(inverse(w) == elem(Family::A, 3, "[3,1,2]"));
    CHECK(inverse(elem(Family::B, 1, "[-1]")) == elem(Family::B, 1, "[-1]"));

    Element u = elem(Family::B, 2, "[2,1]");
    CHECK_THROWS_AS(compose(u, elem(Family::A, 2, "[2,1]")), std::invalid_argument);
    // Same window, different family: descriptors must not alias.
    CHECK_FALSE(elem(Family::B, 2, "[2,1]") == elem(Family::D, 2, "[2,1]"));
}

TEST_CASE("compose and inverse across every family, against pointwise evaluation") {
    std::mt19937_64 rng(20240817);
    for (const auto& d : testutil::small_descriptors()) {
        for (int rep = 0; rep < 25; ++rep) {
            Element u = testutil::random_element(d, rng);
            Element w = testutil::random_element(d, rng);
            Element uw = compose(u, w);
            Element winv = inverse(w);
            const long long lo = d.is_signed() || d.is_affine() ? -2LL * d.window_size : 1;
            const long long hi = 2LL * d.window_size;
            for (long long i = lo; i <= hi; ++i) {
                if (d.is_finite()) {
                    if (i < 1 && !d.is_signed()) continue;
                    if (i == 0 || i < -d.window_size || i > d.window_size) continue;
                }
                CHECK(evaluate(uw, i) == evaluate(u, evaluate(w, i)));
                CHECK(evaluate(winv, evaluate(w, i)) == i);
            }
            CHECK(compose(w, winv).is_identity());
            CHECK(compose(winv, w).is_identity());
        }
    }
}

TEST_CASE("validation accepts members and names every violation") {
    CHECK(validate(make_descriptor(Family::AffA, 3), parse_window("[2,1,3]")).ok);

    // s_0's window has one sign change, so it fails the ~B parity condition.
    Validation v = validate(make_descriptor(Family::AffB, 2), parse_window("[-1,2]"));
    CHECK_FALSE(v.ok);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].find("parity") != std::string::npos);
    CHECK(v.violations[0].find("odd") != std::string::npos);

    Validation dup = validate(make_descriptor(Family::A, 3), parse_window("[1,1,2]"));
    CHECK_FALSE(dup.ok);
    CHECK(!dup.violations.empty());

    // Multiple violations are all reported.
    Validation multi = validate(make_descriptor(Family::A, 3), parse_window("[0,0,5]"));
    CHECK(multi.violations.size() >= 2);

    CHECK_FALSE(validate(make_descriptor(Family::D, 2), parse_window("[-1,2]")).ok);
    CHECK(validate(make_descriptor(Family::D, 2), parse_window("[-1,-2]")).ok);

    // Window values in a fixed class are rejected for affine signed families.
    CHECK_FALSE(validate(make_descriptor(Family::AffC, 2), parse_window("[3,2]")).ok);

    // The ~D membership example: s_n' = [1,...,n,n+2] fails the second parity.
    Validation affd = validate(make_descriptor(Family::AffD, 3), parse_window("[1,2,5]"));
    CHECK_FALSE(affd.ok);
    REQUIRE(affd.violations.size() == 1);
    CHECK(affd.violations[0].find("n+1") != std::string::npos);
}

TEST_CASE("symmetry classes") {
    CHECK(same_symmetry_class(make_descriptor(Family::B, 3), 2, -2));
    CHECK(same_symmetry_class(make_descriptor(Family::AffC, 3), 3, 5));  // 5 = -3 mod 8
    CHECK_FALSE(same_symmetry_class(make_descriptor(Family::A, 3), 1, 2));
    CHECK(same_symmetry_class(make_descriptor(Family::AffA, 3), 1, 7));
    CHECK_FALSE(same_symmetry_class(make_descriptor(Family::AffA, 3), 1, 3));

    // Multiples of n+1 sit in singleton classes.
    auto affc = make_descriptor(Family::AffC, 3);
    CHECK_FALSE(same_symmetry_class(affc, 0, 8));
    CHECK_FALSE(same_symmetry_class(affc, 4, 12));
    CHECK(same_symmetry_class(affc, 4, 4));
    CHECK(symmetry_class_of(affc, 13) == symmetry_class_of(affc, -3));
}

TEST_CASE("affine signed elements fix every multiple of n+1") {
    std::mt19937_64 rng(7);
    for (Family f : {Family::AffB, Family::AffC, Family::AffD}) {
        auto d = make_descriptor(f, 3);
        for (int rep = 0; rep < 20; ++rep) {
            Element w = testutil::random_element(d, rng);
            for (long long k = -2; k <= 2; ++k) {
                CHECK(evaluate(w, k * (d.window_size + 1)) == k * (d.window_size + 1));
            }
        }
    }
}

TEST_CASE("signed and affine symmetry identities hold over three periods") {
    std::mt19937_64 rng(99);
    for (const auto& d : testutil::small_descriptors()) {
        for (int rep = 0; rep < 10; ++rep) {
            Element w = testutil::random_element(d, rng);
            const long long period = d.period();
            if (d.is_signed() && d.is_finite()) {
                for (long long i = 1; i <= d.window_size; ++i) {
                    CHECK(evaluate(w, -i) == -evaluate(w, i));
                }
            }
            if (period > 0) {
                for (long long i = -period; i <= 2 * period; ++i) {
                    if (d.is_signed()) CHECK(evaluate(w, -i) == -evaluate(w, i));
                    CHECK(evaluate(w, i + period) == evaluate(w, i) + period);
                }
            }
        }
    }
}

TEST_CASE("enumeration counts, uniqueness, and length order") {
    CHECK(enumerate_elements(make_descriptor(Family::A, 3)).size() == 6);
    CHECK(enumerate_elements(make_descriptor(Family::B, 2)).size() == 8);
    CHECK(enumerate_elements(make_descriptor(Family::AffA, 2), 3).size() == 7);

    long long factorial[] = {1, 1, 2, 6, 24};
    for (int n = 1; n <= 4; ++n) {
        CHECK(enumerate_elements(make_descriptor(Family::A, n)).size() ==
              static_cast<std::size_t>(factorial[n]));
        CHECK(enumerate_elements(make_descriptor(Family::B, n)).size() ==
              static_cast<std::size_t>((1LL << n) * factorial[n]));
        if (n >= 2) {
            CHECK(enumerate_elements(make_descriptor(Family::D, n)).size() ==
                  static_cast<std::size_t>((1LL << (n - 1)) * factorial[n]));
        }
    }

    CHECK_THROWS_AS(enumerate_elements(make_descriptor(Family::AffC, 2)),
                    std::invalid_argument);

    for (const auto& d : testutil::small_descriptors()) {
        auto ball = enumerate_elements_with_length(d, d.is_finite() ? -1 : 4);
        std::unordered_set<Window, WindowHash> seen;
        long long prev = 0;
        for (const auto& e : ball) {
            CHECK(seen.insert(e.element.window).second);
            CHECK(e.length >= prev);
            prev = e.length;
            CHECK(validate(d, e.element.window).ok);
        }
    }
}

TEST_CASE("window grammar round-trips") {
    CHECK(parse_window("[-5, 6,7 ]") == Window{-5, 6, 7});
    CHECK(format_window(Window{-5, 6, 7}) == "[-5,6,7]");
    CHECK(parse_window(format_window(Window{-3, -1, 2, -4, 7, 6, 8, -5})) ==
          Window{-3, -1, 2, -4, 7, 6, 8, -5});
    CHECK_THROWS_AS(parse_window("[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_window("[1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_window("[1,,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_window("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_window("[1,2]x"), std::invalid_argument);
}
