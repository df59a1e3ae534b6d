#pragma once

#include <stdexcept>
#include <string>

#include "chered/linalg.hpp"
#include "chered/params.hpp"

namespace chered {

// Representation of the dihedral Hecke algebra H(q1, q2) with defining
// relations (T_j - 1)(T_j + q_j) = 0 and the d-factor braid relation.
// The parameters are q_j = e^{-2 pi i k_j}, exact roots of unity for
// rational k, and sqrt(q1 q2) is fixed as e^{-pi i (k1 + k2)}.
struct HeckeRep {
    int d = 3;
    Cyc q1, q2;  // equal when d is odd
    CycMat t1, t2;
    IrrepLabel deforms;
    int dim() const { return t1.rows(); }
};

// Thrown when the explicit 2x2 matrix form is requested outside its
// validity range; the builder refuses rather than guessing a limit.
struct HeckeDegenerateError : std::runtime_error {
    explicit HeckeDegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Explicit representation deforming the W-irrep V.
//
// One-dimensional labels map T_j to 1 or -q_j according to the sign of V
// on the corresponding reflection class.  Tau(l) maps
//
//   T1 -> [[1, 0], [c_l, -q1]],   T2 -> [[-q2, c_l'], [0, 1]]
//
// with c_l c_l' = q(2 + w^l + w^{-l}) for odd d and
// c_l c_l' = q1 + q2 + sqrt(q1 q2)(w^l + w^{-l}) for even d.  Only the
// product is constrained; the gauge here is c_l = 1, c_l' = product,
// except on the product-zero locus where the triangular direction is
// chosen to match the submodule side (c_l' = 0 for R' > 0, c_l = 0 for
// R' < 0).  Intertwiner dimensions are gauge-invariant away from that
// locus.
HeckeRep build_rep(int d, const IrrepLabel& v, const Params& p);

// Same with an explicit gauge factor: c_l = gauge, c_l' = product/gauge.
HeckeRep build_rep_gauged(int d, const IrrepLabel& v, const Params& p, const Cyc& gauge);

bool quadratic_check(const HeckeRep& rep);

// T1 T2 T1 ... = T2 T1 T2 ... with d factors on both sides.
bool braid_check(const HeckeRep& rep);

// dim { X : X a(T_j) = b(T_j) X }, the space of H-module maps a -> b,
// by exact nullspace computation.  Requires matching d and q-parameters.
int intertwiner_dim(const HeckeRep& a, const HeckeRep& b);

}  // namespace chered
