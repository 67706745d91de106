#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "george/group.hpp"
#include "george/transposition.hpp"

namespace george {

// An ordered product of transpositions; factors multiply left to right.
struct Factorization {
    GroupDescriptor descriptor;
    std::vector<Transposition> factors;
    long long total_cost2 = 0;
};

Element factorization_product(const Factorization& f);

// A transposable pair {x, y} with w(x) >= y > x >= w(y), which always exists
// for a non-identity element of an unbranched family (A, B, ~A, ~C).
// Deterministic: A/B take the position of the smallest non-fixed value in
// the (doubled) window; ~A/~C take the smallest valid anti-exceedance in
// [1, period] and its nearest lower non-fixed point.
std::pair<long long, long long> find_peel_pair(const Element& w);

// v = w * <(x y)> with tvd(v) = tvd(w) - tvd(<(x y)>) exactly and
// length(v) < length(w).  Throws if the pair breaks the inequality chain.
std::pair<Element, Transposition> peel(const Element& w, long long x, long long y);

// Repeated peeling; the returned factors multiply left to right to w and
// total_cost2 == tvd(w).
Factorization factor_unbranched(const Element& w);

struct WitnessReport {
    bool product_matches = false;
    long long total_cost2 = 0;
    std::optional<long long> formula_cost2;  // when the family has a proved formula
    bool meets_lower_bound = false;          // total_cost2 >= tvd(w)
    bool known_optimal = false;              // total_cost2 == formula
    std::vector<std::string> notes;
};

WitnessReport verify_witness(const Element& w, const Factorization& f);

}  // namespace george
