#include "george/statistics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace george {

long long tvd(const Element& w) {
    long long total = 0;
    for (std::size_t i = 0; i < w.window.size(); ++i) {
        long long diff = w.window[i] - static_cast<long long>(i) - 1;
        total += diff < 0 ? -diff : diff;
    }
    return total;
}

std::vector<Transposition> class_inversions(const Element& w) {
    const GroupDescriptor& d = w.descriptor;
    const long long n = d.window_size;
    std::set<std::pair<long long, long long>> seen;
    std::vector<Transposition> out;

    auto consider = [&](long long x, long long y) {  // x < y
        if (!is_transposable(d, x, y)) return;
        if (evaluate(w, x) <= evaluate(w, y)) return;
        Transposition t = make_transposition(d, x, y);
        if (seen.insert({t.i, t.j}).second) out.push_back(t);
    };

    if (d.is_finite()) {
        const long long lo = d.is_signed() ? -n : 1;
        for (long long x = lo; x <= n; ++x) {
            for (long long y = x + 1; y <= n; ++y) consider(x, y);
        }
    } else {
        // w(x) > w(y) with x < y forces y - x < 2M where M is the largest
        // window displacement (displacements are constant on symmetry classes).
        long long m = 0;
        for (std::size_t i = 0; i < w.window.size(); ++i) {
            long long diff = w.window[i] - static_cast<long long>(i) - 1;
            m = std::max(m, diff < 0 ? -diff : diff);
        }
        const long long region = d.period();
        for (long long x = 1; x <= region; ++x) {
            for (long long y = x + 1; y <= x + 2 * m - 1; ++y) consider(x, y);
        }
    }

    std::sort(out.begin(), out.end(), [](const Transposition& a, const Transposition& b) {
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    return out;
}

long long coxeter_length(const Element& w) {
    return static_cast<long long>(class_inversions(w).size());
}

long long neg_count(const Element& w) {
    if (!w.descriptor.is_signed()) {
        throw std::domain_error("neg_count: family " + family_name(w.descriptor.family) +
                                " is not signed");
    }
    long long count = 0;
    for (long long v : w.window) {
        if (v < 0) ++count;
    }
    return count;
}

namespace {

std::vector<int> block_cuts(const Element& w, bool use_abs) {
    // Positions p with {|w(1)|,...,|w(p)|} = {1,...,p}; the window splits there.
    std::vector<int> cuts;
    long long running_max = 0;
    for (int p = 1; p <= w.descriptor.window_size; ++p) {
        long long v = w.window[p - 1];
        if (use_abs && v < 0) v = -v;
        running_max = std::max(running_max, v);
        if (running_max == p) cuts.push_back(p);
    }
    return cuts;
}

Element slice_block(const Element& w, int begin, int end, Family block_family) {
    // Window positions (begin, end] re-indexed to start at 1.
    Window win;
    win.reserve(end - begin);
    for (int p = begin + 1; p <= end; ++p) {
        long long v = w.window[p - 1];
        win.push_back(v > 0 ? v - begin : v + begin);
    }
    return require_valid(GroupDescriptor{block_family, end - begin}, win);
}

}  // namespace

BlockDecomposition blocks(const Element& w, BlockFlavor flavor) {
    const Family fam = w.descriptor.family;
    if (flavor == BlockFlavor::A) {
        if (fam != Family::A) {
            throw std::domain_error("blocks: flavor A needs an unsigned permutation");
        }
    } else {
        if (fam != Family::B && fam != Family::D) {
            throw std::domain_error("blocks: flavors B and D need a finite signed permutation");
        }
        if (flavor == BlockFlavor::D && neg_count(w) % 2 != 0) {
            throw std::domain_error("blocks: flavor D needs an even-signed permutation");
        }
    }

    const bool use_abs = flavor != BlockFlavor::A;
    std::vector<int> cuts = block_cuts(w, use_abs);

    BlockDecomposition out{flavor, {}};
    const Family block_family = flavor == BlockFlavor::A ? Family::A : Family::B;
    int begin = 0;
    if (flavor == BlockFlavor::D) {
        // Merge consecutive summands until each merged block is even-signed.
        long long parity = 0;
        int block_start = 0;
        for (int cut : cuts) {
            for (int p = begin + 1; p <= cut; ++p) {
                if (w.window[p - 1] < 0) parity ^= 1;
            }
            begin = cut;
            if (parity == 0) {
                out.blocks.push_back(slice_block(w, block_start, cut, block_family));
                block_start = cut;
            }
        }
    } else {
        for (int cut : cuts) {
            out.blocks.push_back(slice_block(w, begin, cut, block_family));
            begin = cut;
        }
    }
    return out;
}

long long block_count(const Element& w, BlockFlavor flavor) {
    return blocks(w, flavor).count();
}

AffineBlockData affine_block_data(const Element& w) {
    const Family fam = w.descriptor.family;
    if (fam != Family::AffB && fam != Family::AffC && fam != Family::AffD) {
        throw std::domain_error("affine_block_data: family " + family_name(fam) +
                                " is not affine signed");
    }
    AffineBlockData out;
    const int n = w.descriptor.window_size;
    long long max_abs = 0;
    long long negs = 0;
    for (int j = 1; j <= n - 1; ++j) {
        long long v = w.window[j - 1];
        max_abs = std::max(max_abs, v < 0 ? -v : v);
        if (v < 0) ++negs;
        if (max_abs <= j) {
            out.good_values.push_back(j);
            if (negs % 2 == 0) out.very_good_values.push_back(j);
        }
    }
    out.bl_C = 1 + static_cast<int>(out.good_values.size());
    out.bl_B = 1 + static_cast<int>(out.very_good_values.size());
    return out;
}

long long cost_formula2(const Element& w) {
    switch (w.descriptor.family) {
        case Family::A:
        case Family::B:
        case Family::AffA:
        case Family::AffC:
            return tvd(w);
        case Family::D:
            return tvd(w) + 2 * (block_count(w, BlockFlavor::B) - block_count(w, BlockFlavor::D));
        case Family::AffB:
        case Family::AffD:
            throw std::domain_error("cost_formula2: no proved formula for family " +
                                    family_name(w.descriptor.family) +
                                    "; see the conjecture checks");
    }
    throw std::logic_error("cost_formula2: unknown family");
}

long long conjectured_cost_formula2_affB(const Element& w) {
    if (w.descriptor.family != Family::AffB) {
        throw std::domain_error("conjectured_cost_formula2_affB: family must be ~B");
    }
    AffineBlockData data = affine_block_data(w);
    return tvd(w) + 2 * (data.bl_C - data.bl_B);
}

long long depth2_of_transposition(const Transposition& t) {
    return 1 + coxeter_length(as_element(t));
}

int cycle_count(const Element& w) {
    if (w.descriptor.family != Family::A) {
        throw std::domain_error("cycle_count: family must be A");
    }
    const int n = w.descriptor.window_size;
    std::vector<char> seen(n + 1, 0);
    int cycles = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<int>(w.window[j - 1]);
        }
    }
    return cycles;
}

}  // namespace george
