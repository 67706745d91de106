#include "george/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace george {

namespace detail {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    long long r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

long long mod_floor(long long a, long long b) { return a - floor_div(a, b) * b; }

}  // namespace detail

using detail::floor_div;
using detail::mod_floor;

namespace {

long long ceil_div_pos(long long a, long long b) { return (a + b - 1) / b; }  // a, b > 0

std::string window_entry_list(const Window& w) { return format_window(w); }

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::AffA: return "~A";
        case Family::AffB: return "~B";
        case Family::AffC: return "~C";
        case Family::AffD: return "~D";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "D") return Family::D;
    if (s == "~A") return Family::AffA;
    if (s == "~B") return Family::AffB;
    if (s == "~C") return Family::AffC;
    if (s == "~D") return Family::AffD;
    return std::nullopt;
}

bool GroupDescriptor::is_affine() const {
    return family == Family::AffA || family == Family::AffB || family == Family::AffC ||
           family == Family::AffD;
}

bool GroupDescriptor::is_finite() const { return !is_affine(); }

bool GroupDescriptor::is_signed() const {
    return family == Family::B || family == Family::D || family == Family::AffB ||
           family == Family::AffC || family == Family::AffD;
}

bool GroupDescriptor::is_unbranched() const {
    return family == Family::A || family == Family::B || family == Family::AffA ||
           family == Family::AffC;
}

long long GroupDescriptor::period() const {
    if (is_finite()) return 0;
    if (family == Family::AffA) return window_size;
    return 2LL * window_size + 2;
}

GroupDescriptor make_descriptor(Family f, int n) {
    int min_rank = (f == Family::A || f == Family::B) ? 1 : 2;
    if (n < min_rank) {
        throw std::invalid_argument("family " + family_name(f) + " requires window size >= " +
                                    std::to_string(min_rank) + ", got " + std::to_string(n));
    }
    return GroupDescriptor{f, n};
}

bool Element::is_identity() const {
    for (std::size_t i = 0; i < window.size(); ++i) {
        if (window[i] != static_cast<long long>(i) + 1) return false;
    }
    return true;
}

std::size_t WindowHash::operator()(const Window& w) const {
    std::size_t h = 1469598103934665603ull;
    for (long long v : w) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

std::size_t ElementHash::operator()(const Element& w) const {
    std::size_t h = WindowHash{}(w.window);
    h ^= static_cast<std::size_t>(w.descriptor.family) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<std::size_t>(w.descriptor.window_size) << 7;
    return h;
}

Element identity(const GroupDescriptor& d) {
    Window win(d.window_size);
    std::iota(win.begin(), win.end(), 1);
    return Element{d, std::move(win)};
}

namespace detail {

long long evaluate_window(const GroupDescriptor& d, const Window& win, long long i) {
    const long long n = d.window_size;
    switch (d.family) {
        case Family::A:
            if (i < 1 || i > n) {
                throw std::out_of_range("evaluate: position " + std::to_string(i) +
                                        " outside [1," + std::to_string(n) + "]");
            }
            return win[i - 1];
        case Family::B:
        case Family::D:
            if (i == 0 || i < -n || i > n) {
                throw std::out_of_range("evaluate: position " + std::to_string(i) +
                                        " outside +-[" + std::to_string(n) + "]");
            }
            return i > 0 ? win[i - 1] : -win[-i - 1];
        case Family::AffA: {
            long long r = mod_floor(i - 1, n) + 1;  // in [1, n]
            long long k = (i - r) / n;
            return win[r - 1] + k * n;
        }
        case Family::AffB:
        case Family::AffC:
        case Family::AffD: {
            const long long m = 2 * n + 2;
            long long r = mod_floor(i, m);  // in [0, m)
            long long k = (i - r) / m;
            if (r == 0 || r == n + 1) return i;  // multiples of n+1 are fixed
            if (r <= n) return win[r - 1] + k * m;
            return (m - win[m - r - 1]) + k * m;  // w(m - j) = m - w(j)
        }
    }
    throw std::logic_error("evaluate_window: unknown family");
}

}  // namespace detail

long long evaluate(const Element& w, long long i) {
    return detail::evaluate_window(w.descriptor, w.window, i);
}

Element compose(const Element& u, const Element& w) {
    if (u.descriptor != w.descriptor) {
        throw std::invalid_argument("compose: descriptor mismatch (" +
                                    family_name(u.descriptor.family) + " n=" +
                                    std::to_string(u.descriptor.window_size) + " vs " +
                                    family_name(w.descriptor.family) + " n=" +
                                    std::to_string(w.descriptor.window_size) + ")");
    }
    Window out(u.descriptor.window_size);
    for (int i = 0; i < u.descriptor.window_size; ++i) {
        out[i] = evaluate(u, w.window[i]);
    }
    return require_valid(u.descriptor, out);
}

Element inverse(const Element& w) {
    const GroupDescriptor& d = w.descriptor;
    const long long n = d.window_size;
    Window out(n);
    switch (d.family) {
        case Family::A:
            for (long long i = 1; i <= n; ++i) out[w.window[i - 1] - 1] = i;
            break;
        case Family::B:
        case Family::D:
            for (long long i = 1; i <= n; ++i) {
                long long v = w.window[i - 1];
                if (v > 0) {
                    out[v - 1] = i;
                } else {
                    out[-v - 1] = -i;
                }
            }
            break;
        case Family::AffA:
            for (long long p = 1; p <= n; ++p) {
                long long v = w.window[p - 1];
                long long r = mod_floor(v - 1, n) + 1;
                long long k = (v - r) / n;  // w(p - kn) = r
                out[r - 1] = p - k * n;
            }
            break;
        case Family::AffB:
        case Family::AffC:
        case Family::AffD: {
            const long long m = 2 * n + 2;
            for (long long p = 1; p <= n; ++p) {
                long long v = w.window[p - 1];
                long long r = class_representative(d, v);  // in [1, n]
                if (mod_floor(v - r, m) == 0) {
                    out[r - 1] = p - (v - r) / m * m;  // w(p - km) = r with km = v - r
                } else {
                    // v = -r + km, so w(-p + km) = r
                    out[r - 1] = -p + (v + r);
                }
            }
            break;
        }
    }
    return require_valid(d, out);
}

namespace {

// #{i > 0 : w(i) < 0}.  Finite because w(j + km) = w(j) + km; each positive
// start j contributes ceil(-w(j) / m) translates below zero.
long long count_negative_at_positive_positions(const GroupDescriptor& d, const Window& win) {
    const long long n = d.window_size;
    const long long m = 2 * n + 2;
    long long total = 0;
    for (long long j = 1; j <= 2 * n + 1; ++j) {
        if (j == n + 1) continue;
        long long v = detail::evaluate_window(d, win, j);
        if (v < 0) total += ceil_div_pos(-v, m);
    }
    return total;
}

// #{i > n+1 : w(i) < n+1}: the previous count for the window recentred at n+1.
long long count_below_center_at_right_positions(const GroupDescriptor& d, const Window& win) {
    const long long n = d.window_size;
    const long long m = 2 * n + 2;
    long long total = 0;
    for (long long q = 1; q <= 2 * n + 1; ++q) {
        if (q == n + 1) continue;
        long long v = detail::evaluate_window(d, win, (n + 1) + q) - (n + 1);
        if (v < 0) total += ceil_div_pos(-v, m);
    }
    return total;
}

}  // namespace

Validation validate(const GroupDescriptor& d, const Window& win) {
    Validation out;
    auto& bad = out.violations;
    const long long n = d.window_size;

    if (static_cast<long long>(win.size()) != n) {
        bad.push_back("window has " + std::to_string(win.size()) + " entries, expected " +
                      std::to_string(n));
        return out;
    }

    bool structure_ok = true;
    auto note = [&](std::string msg) {
        bad.push_back(std::move(msg));
        structure_ok = false;
    };

    switch (d.family) {
        case Family::A: {
            std::vector<int> seen(n + 1, 0);
            for (long long i = 1; i <= n; ++i) {
                long long v = win[i - 1];
                if (v < 1 || v > n) {
                    note("w(" + std::to_string(i) + ") = " + std::to_string(v) +
                         " outside {1,...," + std::to_string(n) + "}");
                } else if (++seen[v] > 1) {
                    note("not a bijection: value " + std::to_string(v) + " repeats");
                }
            }
            break;
        }
        case Family::B:
        case Family::D: {
            std::vector<int> seen(n + 1, 0);
            long long negs = 0;
            for (long long i = 1; i <= n; ++i) {
                long long v = win[i - 1];
                long long a = v < 0 ? -v : v;
                if (a < 1 || a > n) {
                    note("w(" + std::to_string(i) + ") = " + std::to_string(v) +
                         " outside +-{1,...," + std::to_string(n) + "}");
                } else if (++seen[a] > 1) {
                    note("not a bijection: symmetry class of " + std::to_string(a) + " repeats");
                }
                if (v < 0) ++negs;
            }
            if (d.family == Family::D && structure_ok && negs % 2 != 0) {
                bad.push_back("type D requires an even number of negative window entries, found " +
                              std::to_string(negs));
            }
            break;
        }
        case Family::AffA: {
            std::vector<int> seen(n, 0);
            for (long long i = 1; i <= n; ++i) {
                long long r = mod_floor(win[i - 1], n);
                if (++seen[r] > 1) {
                    note("window entries share the residue class " + std::to_string(r) + " mod " +
                         std::to_string(n));
                }
            }
            long long sum = std::accumulate(win.begin(), win.end(), 0LL);
            long long want = n * (n + 1) / 2;
            if (sum != want) {
                note("window sum " + std::to_string(sum) + " != " + std::to_string(want));
            }
            break;
        }
        case Family::AffB:
        case Family::AffC:
        case Family::AffD: {
            std::vector<int> seen(n + 1, 0);
            for (long long i = 1; i <= n; ++i) {
                long long v = win[i - 1];
                if (mod_floor(v, n + 1) == 0) {
                    note("w(" + std::to_string(i) + ") = " + std::to_string(v) +
                         " lies in a fixed symmetry class (multiple of " + std::to_string(n + 1) +
                         ")");
                    continue;
                }
                long long r = class_representative(d, v);  // in [1, n]
                if (++seen[r] > 1) {
                    note("window entries share the symmetry class of " + std::to_string(r));
                }
            }
            if (structure_ok && (d.family == Family::AffB || d.family == Family::AffD)) {
                long long c1 = count_negative_at_positive_positions(d, win);
                if (c1 % 2 != 0) {
                    bad.push_back("parity: #{i>0 : w(i)<0} = " + std::to_string(c1) + " is odd");
                }
                if (d.family == Family::AffD) {
                    long long c2 = count_below_center_at_right_positions(d, win);
                    if (c2 % 2 != 0) {
                        bad.push_back("parity: #{i>n+1 : w(i)<n+1} = " + std::to_string(c2) +
                                      " is odd");
                    }
                }
            }
            break;
        }
    }

    if (bad.empty()) {
        out.ok = true;
        out.element = Element{d, win};
    }
    return out;
}

Element require_valid(const GroupDescriptor& d, const Window& win) {
    Validation v = validate(d, win);
    if (!v.ok) {
        std::string msg = "invalid " + family_name(d.family) + " window " +
                          window_entry_list(win) + ":";
        for (const auto& reason : v.violations) msg += " " + reason + ";";
        throw std::invalid_argument(msg);
    }
    return *std::move(v.element);
}

long long class_representative(const GroupDescriptor& d, long long i) {
    const long long n = d.window_size;
    switch (d.family) {
        case Family::A:
            if (i < 1 || i > n) {
                throw std::out_of_range("class_representative: " + std::to_string(i) +
                                        " outside [1," + std::to_string(n) + "]");
            }
            return i;
        case Family::B:
        case Family::D: {
            long long a = i < 0 ? -i : i;
            if (a < 1 || a > n) {
                throw std::out_of_range("class_representative: " + std::to_string(i) +
                                        " outside +-[" + std::to_string(n) + "]");
            }
            return a;
        }
        case Family::AffA:
            return mod_floor(i - 1, n) + 1;
        case Family::AffB:
        case Family::AffC:
        case Family::AffD: {
            if (mod_floor(i, n + 1) == 0) return i;  // trivial singleton class
            const long long m = 2 * n + 2;
            long long r = mod_floor(i, m);
            return std::min(r, m - r);
        }
    }
    throw std::logic_error("class_representative: unknown family");
}

SymmetryClass symmetry_class_of(const GroupDescriptor& d, long long i) {
    return SymmetryClass{d, class_representative(d, i)};
}

bool same_symmetry_class(const GroupDescriptor& d, long long i, long long j) {
    return class_representative(d, i) == class_representative(d, j);
}

bool is_fixed_class(const GroupDescriptor& d, long long i) {
    if (!d.is_affine() || d.family == Family::AffA) return false;
    return mod_floor(i, d.window_size + 1) == 0;
}

Window parse_window(const std::string& text) {
    const char* p = text.data();
    const char* end = p + text.size();
    auto skip_ws = [&] {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r')) ++p;
    };
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("window parse error at offset " +
                                    std::to_string(p - text.data()) + ": " + why);
    };

    skip_ws();
    if (p >= end || *p != '[') fail("expected '['");
    ++p;
    Window out;
    while (true) {
        skip_ws();
        const char* num_begin = p;
        if (p < end && (*p == '-' || *p == '+')) ++p;
        while (p < end && *p >= '0' && *p <= '9') ++p;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(num_begin, p, value);
        if (ec != std::errc{} || ptr != p || p == num_begin) fail("expected an integer");
        out.push_back(value);
        skip_ws();
        if (p < end && *p == ',') {
            ++p;
            continue;
        }
        if (p < end && *p == ']') {
            ++p;
            break;
        }
        fail("expected ',' or ']'");
    }
    skip_ws();
    if (p != end) fail("trailing characters after ']'");
    return out;
}

std::string format_window(const Window& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    out += "]";
    return out;
}

}  // namespace george
