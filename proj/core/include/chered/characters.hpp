#pragma once

#include <string>
#include <vector>

#include "chered/cyclotomic.hpp"
#include "chered/params.hpp"

namespace chered {

// Truncated character of a graded module: a rational lowest-weight offset
// h0 and, per conjugacy class (in the fixed conjugacy_classes order), the
// coefficient sequence of t^{h0} * sum_n c_n t^n for n = 0..cutoff.
//
// Coefficients are traces of finite-order group elements on graded
// slices, hence cyclotomic integers; they are rational integers on the
// identity class (where they equal the graded dimensions) but genuinely
// irrational on rotation classes once d > 4.  Every coefficient is
// asserted integral in Z[zeta]; a violation indicates an expansion bug.
struct CharacterSeries {
    int d = 3;
    Rat h0;
    int cutoff = 0;
    std::vector<std::vector<Cyc>> coeffs;  // [class][degree 0..cutoff]

    // Identity-class coefficients as plain integers (the graded dims).
    std::vector<long> identity_dims() const;

    void assert_integral() const;
};

struct SeriesMatch {
    bool match = false;
    bool offset_mismatch = false;
    int cls = -1;     // first mismatching class, when !match
    int degree = -1;  // first mismatching degree
    std::string message;
};

// Exact comparison; requires same d and cutoff.  An h0 mismatch is
// reported distinctly from a coefficient mismatch.
SeriesMatch compare_series(const CharacterSeries& a, const CharacterSeries& b);

// chi_V(g) t^{h0(V)} / det|_h (1 - g t), expanded to the cutoff.
CharacterSeries standard_character(const Params& p, const IrrepLabel& v, int cutoff);

// Coefficients of 1/det|_h(1 - g t): complete homogeneous sums of the two
// eigenvalues of g on the reflection representation.
std::vector<Cyc> det_inverse_series(int d, const GroupElement& g, int cutoff);

// Selector for a closed-form irreducible-quotient character.  case_id is
// one of:
//   odd1dim-1, odd1dim-2, odd1dim-generic,
//   odd2dim-1, odd2dim-2, odd2dim-generic,
//   even1dim-i .. even1dim-vii,
//   even2dim-i, even2dim-ii, even2dim-iii, even2dim-iv.
// l is the tau index where the case needs one; r and rp are the integer
// line witnesses; nested selects the containment branch of even2dim-iii.
// twist (a one-dimensional label) transports a case for M(triv) at
// twisted parameters to M(twist); the evaluator multiplies class values
// by twist(g).  For twisted cases, p is the *original* parameter point.
struct TheoremSelector {
    std::string case_id;
    int l = 0;
    long r = 0;
    long rp = 0;
    bool nested = false;
    IrrepLabel twist = IrrepLabel::triv();
};

CharacterSeries theorem_character(const TheoremSelector& sel, const Params& p, int cutoff);

}  // namespace chered
