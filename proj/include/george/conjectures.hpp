#pragma once

#include <string>
#include <vector>

#include "george/factorization.hpp"
#include "george/group.hpp"
#include "george/oracle.hpp"

namespace george {

// Empirical sweeps for the statements without proofs.  Proved facts inside
// a sweep (the tvd/2 lower bound) are asserted; conjectured ones are
// reported, never asserted.

enum class ConjectureId { AffB_formula, AffD_bounds, AffD_equality_class, Bounded_gap };

std::string conjecture_name(ConjectureId id);

struct Counterexample {
    Element element;
    long long expected2 = 0;
    long long observed2 = 0;
    Factorization witness;  // replayable via verify_witness
    std::string note;
};

struct ConjectureReport {
    ConjectureId id;
    GroupDescriptor descriptor;
    long long length_bound = 0;
    long long tested = 0;  // = agree + counterexamples
    long long agree = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<Element> inconclusive;  // oracle budget exhausted twice
    long long max_gap2 = 0;             // max observed 2*$(w) - tvd(w)
    std::vector<Element> equality_elements;   // AffD: $(w) = tvd(w), tvd > 0
    long long identity_seen = 0;  // k = 0 case of the AffD equality form, listed apart

    bool found_counterexample() const { return !counterexamples.empty(); }
    bool has_inconclusive() const { return !inconclusive.empty(); }
};

// Conjectured ~B formula $(w) = tvd/2 + bl^C~ - bl^B~ against the oracle.
ConjectureReport check_affB_formula(int n, long long length_bound, int jobs = 1);

struct AffDReports {
    ConjectureReport bounds;    // tvd/2 <= $(w) <= tvd
    ConjectureReport equality;  // $(w) = tvd(w) iff one window entry shifted by 2k(2n+2)
};

AffDReports check_affD_bounds(int n, long long length_bound, int jobs = 1);

// Max observed $(w) - tvd(w)/2; asserted <= n for families with proved
// formulas, reported only for ~B and ~D.
ConjectureReport check_bounded_gap(const GroupDescriptor& d, long long length_bound,
                                   int jobs = 1);

// True iff the window is the identity except for one entry i shifted by a
// nonzero even multiple of the period (the conjectured ~D equality family).
bool is_affD_equality_form(const Element& w);

}  // namespace george
