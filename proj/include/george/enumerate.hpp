#pragma once

#include <vector>

#include "george/group.hpp"

namespace george {

struct EnumeratedElement {
    Element element;
    long long length;  // BFS word length over the simple generators
};

// Breadth-first closure under right multiplication by the simple generators.
// Finite families may pass max_length = -1 and receive the whole group;
// affine families must bound the length.  Elements come out exactly once, in
// nondecreasing length order, deterministically.
std::vector<EnumeratedElement> enumerate_elements_with_length(const GroupDescriptor& d,
                                                              long long max_length = -1);
std::vector<Element> enumerate_elements(const GroupDescriptor& d, long long max_length = -1);

}  // namespace george
