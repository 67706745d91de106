#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "george/group.hpp"
#include "george/transposition.hpp"

namespace george::testutil {

// Uniform window shuffle for finite families, random generator word for
// affine ones.  Deterministic given the engine state.
inline Element random_element(const GroupDescriptor& d, std::mt19937_64& rng,
                              int max_word = 12) {
    const int n = d.window_size;
    if (d.family == Family::A) {
        Window win(n);
        std::iota(win.begin(), win.end(), 1);
        std::shuffle(win.begin(), win.end(), rng);
        return require_valid(d, win);
    }
    if (d.family == Family::B || d.family == Family::D) {
        Window win(n);
        std::iota(win.begin(), win.end(), 1);
        std::shuffle(win.begin(), win.end(), rng);
        int negs = 0;
        for (auto& v : win) {
            if (rng() & 1) {
                v = -v;
                ++negs;
            }
        }
        if (d.family == Family::D && negs % 2 != 0) win[0] = -win[0];
        return require_valid(d, win);
    }
    auto gens = simple_generators(d);
    Element w = identity(d);
    std::uniform_int_distribution<int> len_dist(0, max_word);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    int len = len_dist(rng);
    for (int k = 0; k < len; ++k) w = compose(w, as_element(gens[pick(rng)]));
    return w;
}

inline std::vector<GroupDescriptor> small_descriptors() {
    return {
        make_descriptor(Family::A, 3),    make_descriptor(Family::A, 5),
        make_descriptor(Family::B, 2),    make_descriptor(Family::B, 4),
        make_descriptor(Family::D, 2),    make_descriptor(Family::D, 4),
        make_descriptor(Family::AffA, 2), make_descriptor(Family::AffA, 3),
        make_descriptor(Family::AffB, 2), make_descriptor(Family::AffB, 3),
        make_descriptor(Family::AffC, 2), make_descriptor(Family::AffC, 3),
        make_descriptor(Family::AffD, 2), make_descriptor(Family::AffD, 3),
    };
}

}  // namespace george::testutil
