#pragma once

#include <string>

#include "chered/dihedral.hpp"
#include "chered/rational.hpp"

namespace chered {

// Deformation parameters of the rational Cherednik algebra of I2(d):
// a single rational c when d is odd, a pair (k1, k2) when d is even,
// with k(s_j) = k1 for odd j and k2 for even j.  Only exact rationals
// are admitted; nothing in the engine touches floating point.
struct Params {
    int d = 3;
    bool is_even = false;
    Rat c;       // odd d
    Rat k1, k2;  // even d

    static Params odd(int d, const Rat& c);
    static Params even(int d, const Rat& k1, const Rat& k2);

    int m() const { return d / 2; }

    Rat k_of_reflection(int j) const;

    // r = d*c (odd d only).
    Rat r() const;
    // R = m(k1+k2), R' = m(k1-k2) (even d only).
    Rat R() const;
    Rat Rp() const;

    bool operator==(const Params&) const = default;
    std::string str() const;
};

// Lowest h-weight of the standard module with lowest W-type V:
// h0(V) = (1/2) dim h - (sum_s k(s) s)|_V, dim h = 2.
Rat h_weight(const Params& p, const IrrepLabel& v);

// Parameter function twisted by a linear character: (eps k)(s) = eps(s) k(s).
Params twist_params(const Params& p, const IrrepLabel& eps);

}  // namespace chered
