#pragma once

#include <vector>

#include "george/group.hpp"
#include "george/transposition.hpp"

namespace george {

// Total displacement sum |w(i) - i| over the window.  Even for every valid
// element of every family implemented here.
long long tvd(const Element& w);

// Transpositions <(i j)> of the family with i < j and w(i) > w(j), each
// counted once.  Their number equals the Coxeter length.
std::vector<Transposition> class_inversions(const Element& w);
long long coxeter_length(const Element& w);

// #{i in [n] : w(i) < 0}; signed families only.
long long neg_count(const Element& w);

enum class BlockFlavor { A, B, D };

// Direct-sum decomposition into indecomposable summands.  Flavor D merges
// consecutive flavor-B summands minimally so each block is even-signed.
// Block elements carry family A (flavor A) or family B (flavors B, D)
// descriptors of their own size.
struct BlockDecomposition {
    BlockFlavor flavor;
    std::vector<Element> blocks;

    int count() const { return static_cast<int>(blocks.size()); }
};

BlockDecomposition blocks(const Element& w, BlockFlavor flavor);
long long block_count(const Element& w, BlockFlavor flavor);

// Good value j: w restricts to a bijection of +-[j]; very good: that
// restriction is even-signed.  Affine signed families only.
struct AffineBlockData {
    std::vector<int> good_values;
    std::vector<int> very_good_values;
    int bl_C = 0;  // 1 + #good
    int bl_B = 0;  // 1 + #very good
};

AffineBlockData affine_block_data(const Element& w);

// Doubled minimum factorization cost by the proved closed forms:
// tvd for A/B/~A/~C, tvd + 2(bl^B - bl^D) for D.  Throws std::domain_error
// for ~B and ~D, where no formula is proved.
long long cost_formula2(const Element& w);

// The conjectural ~B value tvd + 2(bl^C~ - bl^B~); family ~B only.
long long conjectured_cost_formula2_affB(const Element& w);

// Doubled depth of a reflection: 1 + Coxeter length.
long long depth2_of_transposition(const Transposition& t);

// Family A only; n - cycle_count is the reflection length.
int cycle_count(const Element& w);

}  // namespace george
