#include "george/factorization.hpp"

#include <algorithm>
#include <stdexcept>

#include "george/statistics.hpp"

namespace george {

Element factorization_product(const Factorization& f) {
    Element p = identity(f.descriptor);
    for (const Transposition& t : f.factors) p = compose(p, as_element(t));
    return p;
}

namespace {

// A and B: y holds the smallest non-fixed value of the (doubled) window,
// x is the leftmost position with w(x) >= y.  Everything left of w(y) is
// already in place, so x lands in [w(y), y-1] automatically.
std::pair<long long, long long> peel_pair_smallest_value(const Element& w) {
    const long long n = w.descriptor.window_size;
    const bool doubled = w.descriptor.family == Family::B;
    std::vector<long long> positions;
    if (doubled) {
        for (long long p = -n; p <= -1; ++p) positions.push_back(p);
    }
    for (long long p = 1; p <= n; ++p) positions.push_back(p);

    bool have = false;
    long long best_value = 0, y = 0;
    for (long long p : positions) {
        long long v = evaluate(w, p);
        if (v != p && (!have || v < best_value)) {
            have = true;
            best_value = v;
            y = p;
        }
    }
    if (!have) throw std::invalid_argument("find_peel_pair: identity element");

    for (long long p : positions) {
        if (evaluate(w, p) >= y) return {p, y};
    }
    throw std::logic_error("find_peel_pair: no position maps weakly above y");
}

// ~A and ~C: smallest anti-exceedance y in [1, period] whose nearest lower
// non-fixed point is an exceedance.
std::pair<long long, long long> peel_pair_exceedance(const Element& w) {
    const GroupDescriptor& d = w.descriptor;
    const long long period = d.period();
    auto non_fixed = [&](long long z) { return evaluate(w, z) != z; };

    for (long long y = 1; y <= period; ++y) {
        if (evaluate(w, y) >= y) continue;  // need an anti-exceedance
        long long x = y - 1;
        while (!non_fixed(x)) --x;  // hits y - period at the latest
        if (evaluate(w, x) > x) return {x, y};
    }
    throw std::logic_error("find_peel_pair: no anti-exceedance with an exceedance below it");
}

}  // namespace

std::pair<long long, long long> find_peel_pair(const Element& w) {
    const GroupDescriptor& d = w.descriptor;
    if (!d.is_unbranched()) {
        throw std::invalid_argument("find_peel_pair: family " + family_name(d.family) +
                                    " is branched");
    }
    if (w.is_identity()) throw std::invalid_argument("find_peel_pair: identity element");
    if (d.family == Family::A || d.family == Family::B) return peel_pair_smallest_value(w);
    return peel_pair_exceedance(w);
}

std::pair<Element, Transposition> peel(const Element& w, long long x, long long y) {
    if (!(evaluate(w, x) >= y && y > x && x >= evaluate(w, y))) {
        throw std::invalid_argument("peel: pair (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") violates w(x) >= y > x >= w(y)");
    }
    Transposition t = make_transposition(w.descriptor, x, y);
    Element v = compose(w, as_element(t));
    if (tvd(v) != tvd(w) - t.cost2) {
        throw std::logic_error("peel: tvd did not drop by tvd(t)");
    }
    if (coxeter_length(v) >= coxeter_length(w)) {
        throw std::logic_error("peel: length did not decrease");
    }
    return {std::move(v), std::move(t)};
}

Factorization factor_unbranched(const Element& w) {
    if (!w.descriptor.is_unbranched()) {
        throw std::invalid_argument("factor_unbranched: family " +
                                    family_name(w.descriptor.family) + " is branched");
    }
    Factorization out{w.descriptor, {}, 0};
    Element v = w;
    while (!v.is_identity()) {
        auto [x, y] = find_peel_pair(v);
        auto [next, t] = peel(v, x, y);
        out.total_cost2 += t.cost2;
        out.factors.push_back(std::move(t));
        v = std::move(next);
    }
    // Peeling multiplies on the right, so reverse to read as a product.
    std::reverse(out.factors.begin(), out.factors.end());
    return out;
}

WitnessReport verify_witness(const Element& w, const Factorization& f) {
    WitnessReport rep;
    if (f.descriptor != w.descriptor) {
        rep.notes.push_back("descriptor mismatch");
        return rep;
    }
    Element p = factorization_product(f);
    rep.product_matches = p == w;
    if (!rep.product_matches) {
        rep.notes.push_back("product is " + format_window(p.window) + ", not " +
                            format_window(w.window));
    }
    for (const Transposition& t : f.factors) rep.total_cost2 += t.cost2;
    if (rep.total_cost2 != f.total_cost2) {
        rep.notes.push_back("stored total_cost2 " + std::to_string(f.total_cost2) +
                            " != recomputed " + std::to_string(rep.total_cost2));
    }
    rep.meets_lower_bound = rep.total_cost2 >= tvd(w);
    if (!rep.meets_lower_bound) {
        rep.notes.push_back("total cost below tvd/2 lower bound");
    }
    try {
        rep.formula_cost2 = cost_formula2(w);
        rep.known_optimal = rep.product_matches && rep.total_cost2 == *rep.formula_cost2;
        if (rep.product_matches && !rep.known_optimal) {
            rep.notes.push_back("not optimal: formula value is " +
                                std::to_string(*rep.formula_cost2) + " (doubled)");
        }
    } catch (const std::domain_error&) {
        // no proved formula for this family
    }
    return rep;
}

}  // namespace george
