#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Window-notation permutation groups: the classical finite and affine Weyl
// groups realized as bijections of (a subset of) the integers that commute
// with a family of mirror/translation symmetries.  Every element is stored
// as its window [w(1), ..., w(n)]; values anywhere else follow from the
// symmetry rules of the family.

namespace george {

enum class Family { A, B, D, AffA, AffB, AffC, AffD };

std::string family_name(Family f);                       // "A", "B", "D", "~A", "~B", "~C", "~D"
std::optional<Family> family_from_name(std::string_view s);

struct GroupDescriptor {
    Family family;
    int window_size;  // n

    bool operator==(const GroupDescriptor&) const = default;

    bool is_affine() const;
    bool is_finite() const;
    bool is_signed() const;      // commutes with i -> -i
    bool is_unbranched() const;  // A, B, ~A, ~C
    // Translation symmetry: 0 for finite families, n for ~A, 2n+2 for ~B/~C/~D.
    long long period() const;
};

// Throws std::invalid_argument for ranks the family does not admit
// (D and every affine family need n >= 2).
GroupDescriptor make_descriptor(Family f, int n);

using Window = std::vector<long long>;

struct Element {
    GroupDescriptor descriptor;
    Window window;  // window[i-1] = w(i)

    bool operator==(const Element&) const = default;
    bool is_identity() const;
};

struct WindowHash {
    std::size_t operator()(const Window& w) const;
};
struct ElementHash {
    std::size_t operator()(const Element& w) const;
};

Element identity(const GroupDescriptor& d);

// w(i) for any i the family's domain admits.  Finite families reject i
// outside [n] resp. +-[n]; affine families accept every integer and extend
// the window by the symmetry rules.
long long evaluate(const Element& w, long long i);

// (uw)(i) = u(w(i)).  The result window is recomputed and revalidated.
Element compose(const Element& u, const Element& w);
Element inverse(const Element& w);

struct Validation {
    bool ok = false;
    std::vector<std::string> violations;  // every failed membership condition
    std::optional<Element> element;
};

Validation validate(const GroupDescriptor& d, const Window& window);
// validate() that throws std::invalid_argument listing all violations.
Element require_valid(const GroupDescriptor& d, const Window& window);

// Symmetry classes: singletons for A, {i,-i} for B/D, residues mod n for ~A,
// {m : m = +-i mod 2n+2} for the affine signed families plus the trivial
// singleton classes at the multiples of n+1.
struct SymmetryClass {
    GroupDescriptor descriptor;
    long long representative;

    bool operator==(const SymmetryClass&) const = default;
};

SymmetryClass symmetry_class_of(const GroupDescriptor& d, long long i);
long long class_representative(const GroupDescriptor& d, long long i);
bool same_symmetry_class(const GroupDescriptor& d, long long i, long long j);
// Affine signed families fix every multiple of n+1.
bool is_fixed_class(const GroupDescriptor& d, long long i);

// Window grammar: '[' int (',' int)* ']' with optional whitespace.
Window parse_window(const std::string& text);  // throws std::invalid_argument
std::string format_window(const Window& w);

namespace detail {
// Window evaluation usable before an Element exists (validation needs it).
long long evaluate_window(const GroupDescriptor& d, const Window& win, long long i);
long long floor_div(long long a, long long b);
long long mod_floor(long long a, long long b);
}  // namespace detail

}  // namespace george
