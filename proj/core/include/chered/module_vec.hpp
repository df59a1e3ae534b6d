#pragma once

#include <map>
#include <vector>

#include "chered/dihedral.hpp"
#include "chered/polyalg.hpp"

namespace chered {

// Element of a graded slice M(V)_n = (degree-n polynomials) (x) V, stored
// as one BiPoly per V-basis vector.  The group acts diagonally: on the
// polynomial part through apply_group and on the V-part through
// irrep_matrix.
struct ModuleVec {
    int d = 3;
    IrrepLabel rep;
    std::vector<BiPoly> parts;  // size rep.dim()

    static ModuleVec zero(int d, const IrrepLabel& rep);
    // Lowest-weight vector 1 (x) e_i.
    static ModuleVec unit(int d, const IrrepLabel& rep, int i);
    // f (x) e_i.
    static ModuleVec wrap(int d, const IrrepLabel& rep, const BiPoly& f, int i = 0);

    bool is_zero() const;
    // Common total degree; -1 for zero, throws if parts are inhomogeneous
    // or of mixed degrees.
    int degree() const;

    ModuleVec operator-() const;
    ModuleVec& operator+=(const ModuleVec& o);
    ModuleVec& operator-=(const ModuleVec& o);
    friend ModuleVec operator+(ModuleVec a, const ModuleVec& b) { return a += b; }
    friend ModuleVec operator-(ModuleVec a, const ModuleVec& b) { return a -= b; }
    ModuleVec scaled(const Cyc& s) const;
    // Multiplication by a polynomial (the x-action of C[h]).
    ModuleVec mul_poly(const BiPoly& f) const;

    bool operator==(const ModuleVec& o) const;

    std::string str() const;
};

ModuleVec act(const GroupElement& g, const ModuleVec& v);

// Coordinates in the fixed slice basis slice_basis(n) (x) V-basis; index
// = monomial_index * dim(V) + v_index.
int slice_dim(int n, const IrrepLabel& rep);
std::vector<Cyc> to_coords(const ModuleVec& v, int n);
ModuleVec from_coords(int d, const IrrepLabel& rep, int n, const std::vector<Cyc>& coords);

// Matrix of g on the slice-n coordinate space.
CycMat group_action_matrix(const GroupElement& g, int d, const IrrepLabel& rep, int n);

// Basis of the U-isotypic component of a W-stable span, via the character
// projector (dim U/|W|) sum_g chi_U(g^{-1}) g.  Projectors for distinct U
// annihilate each other and sum to the identity on any stable space.
std::vector<ModuleVec> isotypic_component(const IrrepLabel& u, const std::vector<ModuleVec>& space);

// Isotypic decomposition: dimension of each isotypic piece of the span.
std::map<IrrepLabel, int> isotypic_dims(const std::vector<ModuleVec>& space);

}  // namespace chered
