#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chered/cherednik.hpp"

namespace chered {

// Case identifiers:
//   odd1dim-1, odd1dim-2, odd1dim-generic          (M(triv), odd d)
//   odd2dim-1, odd2dim-2, odd2dim-generic          (M(tau_l), odd d)
//   even1dim-i .. even1dim-vii                     (M(triv), even d)
//   even2dim-i .. even2dim-iv                      (M(tau_l), even d)
//   boundary-unclassified                          (k_j = 1/2 boundaries
//      outside every stated hypothesis; only the singular-vector content
//      is predicted there)
//
// One-dimensional V other than triv is classified through the twist
// equivalence: M_k(V) corresponds to M_{Vk}(triv), and predicted W-types
// come back tensored by V.  The case conditions partition parameter
// space, so exactly one case holds per (theorem, point).
struct SingularPrediction {
    IrrepLabel type;
    int degree = 0;
    int copies = 1;
    bool operator==(const SingularPrediction&) const = default;
};

struct Witnesses {
    std::optional<long> r;       // integer on E+ / odd lines (signed)
    std::optional<long> rp;      // integer on E- lines (signed)
    std::optional<int> l;        // tau index
    std::optional<long> i, ip;   // half-integer line indices
};

struct Classification {
    Params p;
    IrrepLabel rep;
    std::string case_id;
    Witnesses w;
    IrrepLabel twist = IrrepLabel::triv();  // Triv when no twist applied
    bool nested = false;                    // even2dim-iii containment branch (predicted)
    std::string l1_or_l2;                   // "L1"/"L2" variant for even1dim-iv/v

    // Machine-checkable prediction.
    std::vector<SingularPrediction> singular;
    bool singular_complete = true;
    bool finite = false;
    Rat dim;  // meaningful when finite
    std::string char_case;  // theorem-character case; empty when none applies

    TheoremSelector selector() const;
};

Classification classify_params(const Params& p, const IrrepLabel& v);

// Fills the prediction fields from the case + witnesses; classify_params
// already calls this, exposed separately for tests.
void predict_structure(Classification& cls);

struct Assertion {
    std::string kind;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerifyReport {
    Classification cls;
    int cutoff = 0;
    std::vector<Assertion> assertions;
    std::vector<std::string> warnings;
    bool pass = false;
    // Computed evidence useful downstream.
    std::vector<long> l_dims;
    bool l_finite = false;
    long l_total = -1;
};

// Runs singular_vectors, l_graded_dims, character comparisons, and the
// case-specific submodule-lattice checks against the prediction.
VerifyReport verify_prediction(const Classification& cls, int cutoff);

// Cutoff policy: finite predictions use twice the predicted top degree
// plus two (so the zero tail is certified), infinite ones default to 20.
int default_cutoff(const Classification& cls);

}  // namespace chered
