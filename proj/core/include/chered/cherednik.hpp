#pragma once

#include <map>
#include <string>
#include <vector>

#include "chered/characters.hpp"
#include "chered/linalg.hpp"
#include "chered/module_vec.hpp"
#include "chered/params.hpp"

namespace chered {

// Coordinate conventions, fixed once for the whole engine:
//
//   h* basis       x1 = z, x2 = zbar
//   bilinear form  (z,z) = (zbar,zbar) = 0, (z,zbar) = 2
//   roots          alpha_j = z - w^j zbar   (vanishing on the mirror of s_j)
//   h basis        y1, y2 dual to (z, zbar) under the natural pairing
//
// which gives coroot pairings <alpha_j^v, z> = 1, <alpha_j^v, zbar> =
// -w^{-j}, and Dunkl operators on M(V) = C[z,zbar] (x) V
//
//   D_1 (f(x)v) = d_z f (x) v    - sum_j k(s_j)        ((f - s_j f)/alpha_j) (x) s_j v
//   D_2 (f(x)v) = d_zbar f (x) v + sum_j k(s_j) w^j    ((f - s_j f)/alpha_j) (x) s_j v
//
// This keeps every coefficient inside Q(zeta_d).  The convention is
// validated operationally by algebra_relation_check, which must pass
// before any classification run is trusted.
class StandardModule {
  public:
    StandardModule(const Params& p, const IrrepLabel& rep);

    const Params& params() const { return p_; }
    const IrrepLabel& rep() const { return rep_; }
    int d() const { return p_.d; }
    int dim_slice(int n) const { return slice_dim(n, rep_); }
    Rat h0() const { return h0_; }

    // Dunkl operator D_{y_index}, y_index in {1, 2}; degree 0 maps to 0.
    ModuleVec dunkl(int y_index, const ModuleVec& v) const;

    // Matrix of D_{y_index} from slice n to slice n-1 (cached).
    const CycMat& dunkl_matrix(int y_index, int n);

    // Matrix of multiplication by z (x_index 1) or zbar (2), slice n -> n+1.
    CycMat mult_matrix(int x_index, int n) const;

    // Matrix of g on slice n (cached).
    const CycMat& action_matrix(const GroupElement& g, int n);

    // ker(D_1) cap ker(D_2) on slice n, with isotypic decomposition.
    struct SingularSlice {
        int degree = 0;
        std::vector<ModuleVec> basis;
        std::map<IrrepLabel, std::vector<ModuleVec>> by_type;
        std::map<IrrepLabel, int> type_dims;  // total dimension per W-type
        int dim() const { return static_cast<int>(basis.size()); }
    };
    SingularSlice singular_vectors(int n);

    // Gram matrix of the contravariant form on slice n in the
    // slice_basis (x) V-basis order.  B pairs multiplication against the
    // Dunkl action through the form identification, B(z a, b) = B(a, D2 b)
    // and B(zbar a, b) = B(a, D1 b); the degree-0 form B0 is the identity
    // on one-dimensional V and the (z^l, zbar^l)-pairing (antidiagonal)
    // on tau_l, the W-invariant choice in that basis.  B is symmetric and
    // W-invariant, and its radical is the maximal proper graded
    // submodule, so rank(Gram_n) = dim L(V)_n.
    const CycMat& gram(int n);
    int gram_rank(int n);

    // Rows spanning the radical of the form on slice n.
    const EchelonSpan& radical(int n);

    struct GradedDims {
        std::vector<long> dims;  // indices 0..cutoff
        int cutoff = 0;
        bool finite = false;  // certified by a zero slice at some n <= cutoff
        long total = -1;      // sum of dims when finite
    };

    // dims[n] = rank of the Gram matrix at degree n = dim L(V)_n.  Once a
    // slice rank hits zero every later slice is zero (the quotient is
    // generated in degree 0), so computation stops there.
    GradedDims l_graded_dims(int cutoff);

    // Graded slices of the submodule generated by the W-saturation of the
    // given singular vectors; rejects non-singular generators.
    struct Submodule {
        std::vector<EchelonSpan> spans;  // per degree 0..cutoff
        GradedDims dims;
        GradedDims quotient;
    };
    Submodule submodule_slices(const std::vector<ModuleVec>& generators, int cutoff);

    // Characters (per conjugacy class, offset h0(V)).
    CharacterSeries module_character(int cutoff);                 // of M(V)
    CharacterSeries l_character(int cutoff);                      // of M/radical
    CharacterSeries quotient_character(const std::vector<ModuleVec>& generators, int cutoff);

    // Trace of each class representative on slice n of M(V) (closed form).
    Cyc slice_trace(const GroupElement& g, int n) const;

  private:
    CycMat build_dunkl_matrix(int y_index, int n) const;
    Cyc span_trace(const EchelonSpan& span, const GroupElement& g, int n);

    Params p_;
    IrrepLabel rep_;
    Rat h0_;
    std::vector<Rat> refl_k_;                   // k(s_j), j = 0..d-1
    std::vector<CycMat> rho_refl_;              // irrep matrices of s_j
    std::map<std::pair<int, int>, CycMat> dunkl_cache_;
    std::map<int, CycMat> gram_cache_;
    std::map<int, EchelonSpan> radical_cache_;
    std::map<std::pair<std::string, int>, CycMat> action_cache_;
};

// Free-function forms of the operations above.
ModuleVec dunkl_apply(const Params& p, int y_index, const ModuleVec& v);

struct AlgebraCheckReport {
    bool pass = true;
    int cutoff = 0;
    int checks_run = 0;
    struct Failure {
        std::string identity;
        int degree;
        std::string detail;
    };
    std::vector<Failure> failures;
};

// Verifies, on every slice n <= cutoff of M(triv):
//   (a) [D1, D2] = 0
//   (b) w D_y w^{-1} = D_{w(y)} for all group elements
//   (c) [y, x] = (y,x) - sum_s k(s) (y,alpha_s)(alpha_s^v,x) s as operators
//   (d) h = (1/2) sum_i (x_i y_i + y_i x_i) acts on slice n by h0 + n
//   (e) the sl2 relations for E = (1/2) z zbar, F = -2 D1 D2:
//       [h,E] = 2E, [h,F] = -2F, [E,F] = h.
// A failure pinpoints the first slice and identity that broke; it signals
// a convention error, not bad input.
AlgebraCheckReport algebra_relation_check(const Params& p, int cutoff);

}  // namespace chered
