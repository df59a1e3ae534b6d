#pragma once

#include <string>
#include <vector>

namespace chered {

// Element of the dihedral group I2(d): a rotation r^k or a reflection s_j
// with s_j : z -> w^j zbar, w = exp(2*pi*i/d).  Indices are kept in [0, d);
// s_0 is the reflection z -> zbar.  The rotation generator is fixed as
// r = s_2 s_1, so that r acts on the coordinate z by w^{-1} z.
//
// Multiplication table (indices mod d):
//   r^a r^b   = r^{a+b}
//   r^a s_j   = s_{j+a}
//   s_j r^a   = s_{j-a}
//   s_i s_j   = r^{i-j}
struct GroupElement {
    bool reflection = false;
    int index = 0;

    static GroupElement rotation(int k, int d);
    static GroupElement make_reflection(int j, int d);
    static GroupElement identity() { return {}; }

    bool is_identity() const { return !reflection && index == 0; }
    bool operator==(const GroupElement& o) const = default;

    std::string str() const;
};

GroupElement group_mul(const GroupElement& a, const GroupElement& b, int d);
GroupElement group_inv(const GroupElement& a, int d);

// All 2d elements: rotations r^0..r^{d-1}, then reflections s_0..s_{d-1}.
std::vector<GroupElement> all_elements(int d);

}  // namespace chered
