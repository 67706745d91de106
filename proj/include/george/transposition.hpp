#pragma once

#include <utility>
#include <vector>

#include "george/group.hpp"

namespace george {

// The extension of a swap i <-> j under the family's symmetry rules: an
// order-2 group element (a reflection).  Stored by its canonical pair so
// symmetry-equivalent pairs compare equal.
struct Transposition {
    GroupDescriptor descriptor;
    long long i = 0;  // canonical pair, i < j
    long long j = 0;
    bool same_class = false;
    long long cost2 = 0;  // doubled cost = tvd of the element

    bool operator==(const Transposition& o) const {
        return descriptor == o.descriptor && i == o.i && j == o.j;
    }
};

struct TranspositionHash {
    std::size_t operator()(const Transposition& t) const;
};

// True iff some group element swaps i and j.  Families with parity
// conditions are decided by constructing the swap's closure and validating.
bool is_transposable(const GroupDescriptor& d, long long i, long long j);

Transposition make_transposition(const GroupDescriptor& d, long long i, long long j);

Element as_element(const Transposition& t);

// Image of x under the symmetry closure of the swap i <-> j.
long long swap_image(const GroupDescriptor& d, long long i, long long j, long long x);

// One name per group element: smallest-|i-j| orbit representative, translated
// so min(i,j) falls in [1, period] (affine) or rewritten to the
// lexicographically smaller of (i,j) and (-j,-i) (signed finite).
std::pair<long long, long long> canonical_pair(const GroupDescriptor& d, long long i,
                                               long long j);

std::vector<Transposition> simple_generators(const GroupDescriptor& d);

// Every transposition of the family with doubled cost <= budget2, each once,
// sorted by (cost2, i, j).  Finite even for affine families.
std::vector<Transposition> transpositions_with_cost2_at_most(const GroupDescriptor& d,
                                                             long long budget2);

std::string format_transposition(const Transposition& t);

}  // namespace george
