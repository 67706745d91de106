#pragma once

#include <optional>
#include <string>
#include <vector>

#include "george/enumerate.hpp"
#include "george/factorization.hpp"
#include "george/group.hpp"

namespace george {

// Ground truth independent of the closed-form theorems: exact best-first
// search over the weighted Cayley graph on transpositions.

enum class Weight { Cost, Depth, Unit };
enum class SearchStatus { Found, BudgetExhausted };

struct SearchOptions {
    // Total-weight cap, in doubled units.  -1 = derive: the greedy witness
    // total for unbranched cost searches, otherwise 6 * length(w) for cost
    // (every simple generator costs at most 3) and 2 * length(w) for depth
    // and unit weights (simple generators have depth 1 and count 1).
    // The GEORGE_COST_BUDGET environment variable (plain cost units)
    // overrides the derived value.
    long long budget2 = -1;
    // Use tvd of the remaining quotient as an admissible A* heuristic
    // (cost weight only).
    bool astar = false;
    // Affine depth/unit searches need a finite generator frontier; this caps
    // the doubled cost of candidate transpositions.  -1 = derive.
    long long generator_cost2_cap = -1;
};

struct SearchResult {
    Element target;
    SearchStatus status = SearchStatus::BudgetExhausted;
    long long optimum2 = -1;  // doubled cost/depth; unit searches report 2 per factor
    Factorization witness;
    long long expanded_nodes = 0;
    long long budget2_used = 0;
};

// Exact minimum over transposition factorizations of the chosen weight.
// Self-checking: a found witness must reproduce the target, match the
// reported optimum, and (cost weight) respect the tvd/2 lower bound.
SearchResult min_cost(const Element& w, Weight weight, SearchOptions opts = {});

// BFS distance from the identity over the simple generators; must agree
// with the class-inversion count.  max_length = -1 derives a generous cap.
long long word_length(const Element& w, long long max_length = -1);

struct SweepRow {
    Element element;
    long long tvd = 0;
    long long formula2 = 0;
    long long oracle2 = 0;
    bool agree = false;
};

struct SweepReport {
    GroupDescriptor descriptor;
    long long length_bound = -1;
    long long tested = 0;
    long long agree = 0;
    long long max_deviation2 = 0;
    long long total_expanded = 0;
    std::vector<SweepRow> rows;           // kept when requested
    std::vector<SweepRow> disagreements;  // always kept
};

struct SweepOptions {
    int jobs = 1;
    bool keep_rows = false;
    bool astar = false;
};

// Assert min_cost(w, Cost) == cost_formula2(w) over the enumerated elements
// of a family with a proved formula.
SweepReport verify_theorem(const GroupDescriptor& d, long long length_bound,
                           SweepOptions opts = {});

}  // namespace george
