#include "chered/group_element.hpp"

#include <stdexcept>

namespace chered {

namespace {
int norm_mod(int k, int d) {
    k %= d;
    return k < 0 ? k + d : k;
}
}  // namespace

GroupElement GroupElement::rotation(int k, int d) { return {false, norm_mod(k, d)}; }

GroupElement GroupElement::make_reflection(int j, int d) { return {true, norm_mod(j, d)}; }

std::string GroupElement::str() const {
    if (reflection) return "s" + std::to_string(index);
    if (index == 0) return "e";
    return "r^" + std::to_string(index);
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b, int d) {
    if (d < 1) throw std::invalid_argument("group_mul: bad d");
    if (!a.reflection && !b.reflection) return GroupElement::rotation(a.index + b.index, d);
    if (!a.reflection && b.reflection) return GroupElement::make_reflection(b.index + a.index, d);
    if (a.reflection && !b.reflection) return GroupElement::make_reflection(a.index - b.index, d);
    return GroupElement::rotation(a.index - b.index, d);
}

GroupElement group_inv(const GroupElement& a, int d) {
    if (a.reflection) return a;
    return GroupElement::rotation(-a.index, d);
}

std::vector<GroupElement> all_elements(int d) {
    std::vector<GroupElement> v;
    v.reserve(2 * d);
    for (int k = 0; k < d; ++k) v.push_back(GroupElement::rotation(k, d));
    for (int j = 0; j < d; ++j) v.push_back(GroupElement::make_reflection(j, d));
    return v;
}

}  // namespace chered
