#pragma once

#include <string>
#include <vector>

#include "chered/group_element.hpp"
#include "chered/linalg.hpp"

namespace chered {

// Label of an irreducible representation of I2(d).
//
//   d = 2m+1:  Triv, Sgn, Tau(l) for 1 <= l <= m
//   d = 2m:    Triv, Sgn, Eps1, Eps2, Tau(l) for 1 <= l < m
//
// Eps1 takes the value +1 on odd-index reflections and -1 on even-index
// ones; Eps2 = Eps1 (x) Sgn.  Tau(l) is realized on span{z^l, zbar^l} in
// that basis order; every 2x2 matrix downstream is written in this basis.
struct IrrepLabel {
    enum class Kind { Triv, Sgn, Eps1, Eps2, Tau };
    Kind kind = Kind::Triv;
    int l = 0;  // meaningful for Tau only

    static IrrepLabel triv() { return {Kind::Triv, 0}; }
    static IrrepLabel sgn() { return {Kind::Sgn, 0}; }
    static IrrepLabel eps1() { return {Kind::Eps1, 0}; }
    static IrrepLabel eps2() { return {Kind::Eps2, 0}; }
    static IrrepLabel tau(int l) { return {Kind::Tau, l}; }

    bool operator==(const IrrepLabel&) const = default;
    bool operator<(const IrrepLabel& o) const {
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        return l < o.l;
    }

    bool is_tau() const { return kind == Kind::Tau; }
    bool one_dimensional() const { return !is_tau(); }
    int dim() const { return is_tau() ? 2 : 1; }

    std::string str() const;
    // Parses "triv", "sgn", "eps1", "eps2", "tau1", "tau2", ...
    static IrrepLabel parse(const std::string& s);
};

bool valid_irrep(const IrrepLabel& v, int d);

// Complete, irredundant list for I2(d), in the fixed order
// Triv, Sgn, [Eps1, Eps2,] Tau(1), Tau(2), ...
std::vector<IrrepLabel> list_irreps(int d);

// Tensor product with a one-dimensional label:
//   sgn (x) tau_l = tau_l,  eps_i (x) tau_l = tau_{m-l}  (even d).
IrrepLabel tensor_one_dim(const IrrepLabel& eps, const IrrepLabel& v, int d);

// Matrix of g in the fixed basis; satisfies rho(g) rho(h) = rho(gh).
CycMat irrep_matrix(const IrrepLabel& v, const GroupElement& g, int d);

Cyc irrep_character(const IrrepLabel& v, const GroupElement& g, int d);

struct ConjClass {
    GroupElement rep;
    std::vector<GroupElement> members;
    int size() const { return static_cast<int>(members.size()); }
};

// Partition of all 2d elements into conjugacy classes, in the fixed order:
// rotations r^0, r^1, ..., r^{floor(d/2)}, then the reflection class of
// s_0, then (even d only) the class of s_1.  This order is the contract
// for every character table and character series.
std::vector<ConjClass> conjugacy_classes(int d);

struct CharacterTable {
    int d;
    std::vector<ConjClass> classes;
    std::vector<IrrepLabel> irreps;
    // values[i][j] = character of irreps[i] at classes[j].rep
    std::vector<std::vector<Cyc>> values;
};

CharacterTable character_table(int d);

}  // namespace chered
