#include "george/transposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "george/statistics.hpp"

namespace george {

using detail::floor_div;
using detail::mod_floor;

std::size_t TranspositionHash::operator()(const Transposition& t) const {
    std::size_t h = static_cast<std::size_t>(t.i) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<std::size_t>(t.j) + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(t.descriptor.family) << 3;
    return h;
}

long long swap_image(const GroupDescriptor& d, long long i, long long j, long long x) {
    const long long n = d.window_size;
    switch (d.family) {
        case Family::A:
            if (x == i) return j;
            if (x == j) return i;
            return x;
        case Family::B:
        case Family::D:
            if (x == i) return j;
            if (x == j) return i;
            if (x == -i) return -j;
            if (x == -j) return -i;
            return x;
        case Family::AffA:
            if (mod_floor(x - i, n) == 0) return j + (x - i);
            if (mod_floor(x - j, n) == 0) return i + (x - j);
            return x;
        case Family::AffB:
        case Family::AffC:
        case Family::AffD: {
            const long long m = 2 * n + 2;
            if (mod_floor(x - i, m) == 0) return j + (x - i);
            if (mod_floor(x - j, m) == 0) return i + (x - j);
            if (mod_floor(x + i, m) == 0) return -j + (x + i);
            if (mod_floor(x + j, m) == 0) return -i + (x + j);
            return x;
        }
    }
    throw std::logic_error("swap_image: unknown family");
}

namespace {

Window swap_window(const GroupDescriptor& d, long long i, long long j) {
    Window win(d.window_size);
    for (long long p = 1; p <= d.window_size; ++p) {
        win[p - 1] = swap_image(d, i, j, p);
    }
    return win;
}

bool in_signed_domain(const GroupDescriptor& d, long long x) {
    return x != 0 && x >= -d.window_size && x <= d.window_size;
}

}  // namespace

bool is_transposable(const GroupDescriptor& d, long long i, long long j) {
    if (i == j) return false;
    const long long n = d.window_size;
    switch (d.family) {
        case Family::A:
            return i >= 1 && i <= n && j >= 1 && j <= n;
        case Family::B:
            return in_signed_domain(d, i) && in_signed_domain(d, j);
        case Family::D:
            return in_signed_domain(d, i) && in_signed_domain(d, j) && i != -j;
        case Family::AffA:
            return mod_floor(i - j, n) != 0;
        case Family::AffC:
            return !is_fixed_class(d, i) && !is_fixed_class(d, j) &&
                   mod_floor(i - j, 2 * n + 2) != 0;
        case Family::AffB:
        case Family::AffD: {
            // The swap's closure must satisfy the family's parity conditions;
            // construct it and ask.
            if (is_fixed_class(d, i) || is_fixed_class(d, j)) return false;
            if (mod_floor(i - j, 2 * n + 2) == 0) return false;
            return validate(d, swap_window(d, i, j)).ok;
        }
    }
    return false;
}

std::pair<long long, long long> canonical_pair(const GroupDescriptor& d, long long i,
                                               long long j) {
    long long a = std::min(i, j);
    long long b = std::max(i, j);
    switch (d.family) {
        case Family::A:
            return {a, b};
        case Family::B:
        case Family::D: {
            std::pair<long long, long long> p{a, b};
            std::pair<long long, long long> q{-b, -a};
            return std::min(p, q);
        }
        case Family::AffA: {
            const long long period = d.period();
            long long shift = -floor_div(a - 1, period) * period;  // a + shift in [1, period]
            return {a + shift, b + shift};
        }
        case Family::AffB:
        case Family::AffC:
        case Family::AffD: {
            const long long period = d.period();
            auto shifted = [&](long long p, long long q) {
                long long shift = -floor_div(p - 1, period) * period;
                return std::pair<long long, long long>{p + shift, q + shift};
            };
            return std::min(shifted(a, b), shifted(-b, -a));
        }
    }
    throw std::logic_error("canonical_pair: unknown family");
}

Transposition make_transposition(const GroupDescriptor& d, long long i, long long j) {
    if (!is_transposable(d, i, j)) {
        throw std::invalid_argument("pair {" + std::to_string(i) + "," + std::to_string(j) +
                                    "} is not transposable in " + family_name(d.family) +
                                    " with n=" + std::to_string(d.window_size));
    }
    auto [a, b] = canonical_pair(d, i, j);
    Transposition t{d, a, b, same_symmetry_class(d, a, b), 0};
    t.cost2 = tvd(as_element(t));
    return t;
}

Element as_element(const Transposition& t) {
    return require_valid(t.descriptor, swap_window(t.descriptor, t.i, t.j));
}

std::vector<Transposition> simple_generators(const GroupDescriptor& d) {
    const long long n = d.window_size;
    std::vector<Transposition> out;
    auto add = [&](long long i, long long j) { out.push_back(make_transposition(d, i, j)); };
    switch (d.family) {
        case Family::A:
            for (long long i = 1; i < n; ++i) add(i, i + 1);
            break;
        case Family::B:
            add(1, -1);
            for (long long i = 1; i < n; ++i) add(i, i + 1);
            break;
        case Family::D:
            add(1, -2);
            for (long long i = 1; i < n; ++i) add(i, i + 1);
            break;
        case Family::AffA:
            for (long long i = 1; i < n; ++i) add(i, i + 1);
            add(n, n + 1);
            break;
        case Family::AffC:
            add(1, -1);
            for (long long i = 1; i < n; ++i) add(i, i + 1);
            add(n, n + 2);
            break;
        case Family::AffB:
            add(1, -2);
            for (long long i = 1; i < n; ++i) add(i, i + 1);
            add(n, n + 2);
            break;
        case Family::AffD:
            add(1, -2);
            for (long long i = 1; i < n; ++i) add(i, i + 1);
            add(n - 1, n + 2);
            // n = 2 degenerates to two commuting infinite dihedral factors;
            // the diagram has four nodes, not three.
            if (n == 2) add(n, 2 * n + 3);
            break;
    }
    return out;
}

std::vector<Transposition> transpositions_with_cost2_at_most(const GroupDescriptor& d,
                                                             long long budget2) {
    std::vector<Transposition> out;
    if (budget2 <= 0) return out;
    const long long n = d.window_size;
    std::set<std::pair<long long, long long>> seen;

    auto consider = [&](long long a, long long b) {
        if (!is_transposable(d, a, b)) return;
        Transposition t = make_transposition(d, a, b);
        if (t.cost2 > budget2) return;
        if (seen.insert({t.i, t.j}).second) out.push_back(t);
    };

    if (d.is_finite()) {
        const long long lo = d.is_signed() ? -n : 1;
        for (long long a = lo; a <= n; ++a) {
            for (long long b = a + 1; b <= n; ++b) consider(a, b);
        }
    } else {
        // Canonical pairs have min in [1, period] and |i-j| <= cost2.
        for (long long a = 1; a <= d.period(); ++a) {
            for (long long b = a + 1; b <= a + budget2; ++b) {
                if (!is_transposable(d, a, b)) continue;
                if (canonical_pair(d, a, b) != std::pair<long long, long long>{a, b}) continue;
                consider(a, b);
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const Transposition& x, const Transposition& y) {
        return std::tie(x.cost2, x.i, x.j) < std::tie(y.cost2, y.i, y.j);
    });
    return out;
}

std::string format_transposition(const Transposition& t) {
    return "<(" + std::to_string(t.i) + " " + std::to_string(t.j) + ")>";
}

}  // namespace george
