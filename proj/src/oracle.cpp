#include "george/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "george/parallel.hpp"
#include "george/statistics.hpp"

namespace george {

namespace {

long long env_budget2() {
    const char* s = std::getenv("GEORGE_COST_BUDGET");
    if (!s || !*s) return -1;
    char* end = nullptr;
    long long plain = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0' || plain < 0) {
        throw std::invalid_argument("GEORGE_COST_BUDGET must be a nonnegative integer");
    }
    return 2 * plain;
}

long long max_simple_generator_cost2(const GroupDescriptor& d) {
    long long worst = 0;
    for (const Transposition& t : simple_generators(d)) worst = std::max(worst, t.cost2);
    return worst;
}

long long derive_budget2(const Element& w, Weight weight) {
    switch (weight) {
        case Weight::Cost:
            if (w.descriptor.is_unbranched()) {
                return factor_unbranched(w).total_cost2;  // a concrete witness
            } else {
                // w is a product of length(w) simple generators, so their
                // worst cost times the length bounds $(w).  That worst cost
                // is 3 everywhere except the degenerate ~D rank 2 diagram,
                // whose fourth node costs 5.
                return max_simple_generator_cost2(w.descriptor) * coxeter_length(w);
            }
        case Weight::Depth:
        case Weight::Unit:
            // A reduced word is a factorization with depth 1 / count 1 per factor.
            return 2 * coxeter_length(w);
    }
    throw std::logic_error("derive_budget2: unknown weight");
}

struct PQEntry {
    long long priority2;  // g2, plus the heuristic under A*
    long long g2;
    Window window;
};

struct PQOrder {
    bool operator()(const PQEntry& a, const PQEntry& b) const {
        // std::priority_queue pops the largest; invert for a min-heap with
        // lexicographic window tie-breaking for reproducible witnesses.
        if (a.priority2 != b.priority2) return a.priority2 > b.priority2;
        return a.window > b.window;
    }
};

}  // namespace

SearchResult min_cost(const Element& w, Weight weight, SearchOptions opts) {
    const GroupDescriptor& d = w.descriptor;
    SearchResult res;
    res.target = w;
    res.witness.descriptor = d;

    long long budget2 = opts.budget2;
    if (budget2 < 0) budget2 = env_budget2();
    if (budget2 < 0) budget2 = derive_budget2(w, weight);
    res.budget2_used = budget2;

    // Generator frontier.  Exact for cost weight (a factor above the budget
    // cannot appear in a within-budget factorization); finite families get
    // their full transposition set for the other weights; affine depth/unit
    // searches use a configurable cap.
    long long gen_cap2 = budget2;
    if (weight != Weight::Cost) {
        if (d.is_finite()) {
            gen_cap2 = 4LL * d.window_size;  // above every finite transposition cost
        } else {
            gen_cap2 = opts.generator_cost2_cap > 0
                           ? opts.generator_cost2_cap
                           : std::max(2 * tvd(w), 4 * coxeter_length(w)) + 8;
        }
    }
    std::vector<Transposition> gens = transpositions_with_cost2_at_most(d, gen_cap2);
    std::vector<Element> gen_elements;
    std::vector<long long> gen_weight2;
    gen_elements.reserve(gens.size());
    for (const Transposition& t : gens) {
        gen_elements.push_back(as_element(t));
        switch (weight) {
            case Weight::Cost: gen_weight2.push_back(t.cost2); break;
            case Weight::Depth: gen_weight2.push_back(depth2_of_transposition(t)); break;
            case Weight::Unit: gen_weight2.push_back(2); break;
        }
    }

    const bool astar = opts.astar && weight == Weight::Cost;
    auto heuristic2 = [&](const Element& u) -> long long {
        if (!astar) return 0;
        return tvd(compose(inverse(u), w));  // = 2 * cost lower bound of the quotient
    };

    std::unordered_map<Window, long long, WindowHash> dist;
    std::unordered_map<Window, std::pair<Window, int>, WindowHash> parent;
    std::priority_queue<PQEntry, std::vector<PQEntry>, PQOrder> pq;

    Element start = identity(d);
    dist[start.window] = 0;
    pq.push({heuristic2(start), 0, start.window});

    while (!pq.empty()) {
        PQEntry cur = pq.top();
        pq.pop();
        auto it = dist.find(cur.window);
        if (it == dist.end() || it->second < cur.g2) continue;  // stale entry
        ++res.expanded_nodes;

        if (cur.window == w.window) {
            res.status = SearchStatus::Found;
            res.optimum2 = cur.g2;
            // Rebuild the witness from the parent chain.
            std::vector<Transposition> factors;
            Window at = cur.window;
            while (at != start.window) {
                auto [prev, gi] = parent.at(at);
                factors.push_back(gens[gi]);
                at = prev;
            }
            std::reverse(factors.begin(), factors.end());
            res.witness.factors = std::move(factors);
            res.witness.total_cost2 = 0;
            for (const Transposition& t : res.witness.factors) {
                res.witness.total_cost2 += t.cost2;
            }
            // Self-checks: the witness must reproduce the target and its
            // weight must match the reported optimum.
            if (factorization_product(res.witness) != w) {
                throw std::logic_error("min_cost: witness does not reproduce the target");
            }
            long long witness_weight2 = 0;
            for (const Transposition& t : res.witness.factors) {
                switch (weight) {
                    case Weight::Cost: witness_weight2 += t.cost2; break;
                    case Weight::Depth: witness_weight2 += depth2_of_transposition(t); break;
                    case Weight::Unit: witness_weight2 += 2; break;
                }
            }
            if (witness_weight2 != res.optimum2) {
                throw std::logic_error("min_cost: witness weight differs from optimum");
            }
            if (weight == Weight::Cost && res.optimum2 < tvd(w)) {
                throw std::logic_error("min_cost: optimum below the tvd/2 lower bound");
            }
            return res;
        }

        Element cur_element{d, cur.window};
        for (std::size_t gi = 0; gi < gen_elements.size(); ++gi) {
            long long g2 = cur.g2 + gen_weight2[gi];
            if (g2 > budget2) continue;
            Element next = compose(cur_element, gen_elements[gi]);
            auto found = dist.find(next.window);
            if (found != dist.end() && found->second <= g2) continue;
            dist[next.window] = g2;
            parent[next.window] = {cur.window, static_cast<int>(gi)};
            pq.push({g2 + heuristic2(next), g2, std::move(next.window)});
        }
    }

    res.status = SearchStatus::BudgetExhausted;
    return res;
}

long long word_length(const Element& w, long long max_length) {
    const GroupDescriptor& d = w.descriptor;
    if (max_length < 0) {
        max_length = d.is_finite() ? -1 : 2 * coxeter_length(w) + 32;
    }
    std::vector<Element> gens;
    for (const Transposition& t : simple_generators(d)) gens.push_back(as_element(t));

    std::unordered_set<Window, WindowHash> seen;
    std::deque<std::pair<Element, long long>> queue;
    queue.emplace_back(identity(d), 0);
    seen.insert(queue.front().first.window);
    while (!queue.empty()) {
        auto [cur, len] = std::move(queue.front());
        queue.pop_front();
        if (cur == w) return len;
        if (max_length >= 0 && len >= max_length) continue;
        for (const Element& s : gens) {
            Element next = compose(cur, s);
            if (seen.insert(next.window).second) queue.emplace_back(std::move(next), len + 1);
        }
    }
    throw std::runtime_error("word_length: budget exhausted at length " +
                             std::to_string(max_length));
}

SweepReport verify_theorem(const GroupDescriptor& d, long long length_bound, SweepOptions opts) {
    SweepReport rep;
    rep.descriptor = d;
    rep.length_bound = length_bound;

    std::vector<Element> elems = enumerate_elements(d, length_bound);
    std::vector<SweepRow> rows(elems.size());
    std::vector<long long> expanded(elems.size(), 0);

    parallel_for_index(elems.size(), opts.jobs, [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.element = elems[i];
        row.tvd = tvd(elems[i]);
        row.formula2 = cost_formula2(elems[i]);
        SearchOptions so;
        so.astar = opts.astar;
        SearchResult res = min_cost(elems[i], Weight::Cost, so);
        if (res.status != SearchStatus::Found) {
            throw std::logic_error("verify_theorem: budget exhausted on " +
                                   format_window(elems[i].window));
        }
        row.oracle2 = res.optimum2;
        row.agree = row.oracle2 == row.formula2;
        expanded[i] = res.expanded_nodes;
    });

    for (std::size_t i = 0; i < rows.size(); ++i) {
        ++rep.tested;
        rep.total_expanded += expanded[i];
        if (rows[i].agree) {
            ++rep.agree;
        } else {
            rep.disagreements.push_back(rows[i]);
        }
        rep.max_deviation2 =
            std::max(rep.max_deviation2, std::abs(rows[i].oracle2 - rows[i].formula2));
    }
    if (opts.keep_rows) rep.rows = std::move(rows);
    return rep;
}

}  // namespace george
