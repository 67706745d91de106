#include "george/enumerate.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "george/transposition.hpp"

namespace george {

std::vector<EnumeratedElement> enumerate_elements_with_length(const GroupDescriptor& d,
                                                              long long max_length) {
    if (d.is_affine() && max_length < 0) {
        throw std::invalid_argument("enumerate_elements: affine family " +
                                    family_name(d.family) + " needs a length bound");
    }
    std::vector<Element> gens;
    for (const Transposition& t : simple_generators(d)) gens.push_back(as_element(t));

    std::vector<EnumeratedElement> out;
    std::unordered_set<Window, WindowHash> seen;
    std::deque<EnumeratedElement> queue;
    queue.push_back({identity(d), 0});
    seen.insert(queue.front().element.window);

    while (!queue.empty()) {
        EnumeratedElement cur = std::move(queue.front());
        queue.pop_front();
        if (max_length < 0 || cur.length < max_length) {
            for (const Element& s : gens) {
                Element next = compose(cur.element, s);
                if (seen.insert(next.window).second) {
                    queue.push_back({std::move(next), cur.length + 1});
                }
            }
        }
        out.push_back(std::move(cur));
    }
    return out;
}

std::vector<Element> enumerate_elements(const GroupDescriptor& d, long long max_length) {
    std::vector<Element> out;
    for (auto& e : enumerate_elements_with_length(d, max_length)) {
        out.push_back(std::move(e.element));
    }
    return out;
}

}  // namespace george
