#include "chered/hecke.hpp"

#include <numeric>

namespace chered {

namespace {

// e^{-2 pi i k} for rational k.
Cyc exp_minus_2pi_i(const Rat& k) {
    const long den = rat_denominator(k);
    const long num = rat_to_long(k * den);
    return Cyc::root_of_unity(den, -num);
}

// e^{-pi i k} = e^{-2 pi i (k/2)}.
Cyc exp_minus_pi_i(const Rat& k) { return exp_minus_2pi_i(k / 2); }

CycMat scalar1x1(const Cyc& v) {
    CycMat m(1, 1);
    m.at(0, 0) = v;
    return m;
}

}  // namespace

HeckeRep build_rep_gauged(int d, const IrrepLabel& v, const Params& p, const Cyc& gauge) {
    if (!valid_irrep(v, d)) throw std::invalid_argument("build_rep: invalid irrep for d");
    if (p.d != d) throw std::invalid_argument("build_rep: parameter/group mismatch");

    HeckeRep rep;
    rep.d = d;
    rep.deforms = v;
    const Rat kk1 = p.is_even ? p.k1 : p.c;
    const Rat kk2 = p.is_even ? p.k2 : p.c;
    rep.q1 = exp_minus_2pi_i(kk1);
    rep.q2 = exp_minus_2pi_i(kk2);

    if (v.one_dimensional()) {
        // T_j deforms the +-1 value of V on the corresponding reflection
        // class: +1 -> 1, -1 -> -q_j.  T1 carries the odd-index class.
        auto scalar_for = [&](const Cyc& q, int refl_index) {
            const Rat val =
                irrep_character(v, GroupElement::make_reflection(refl_index, d), d).rational_value();
            return val == 1 ? Cyc(1) : -q;
        };
        rep.t1 = scalar1x1(scalar_for(rep.q1, 1));
        rep.t2 = scalar1x1(scalar_for(rep.q2, 0));
        return rep;
    }

    // Validity of the explicit 2x2 form (tau_l): refused when the
    // deformed module sits on the positive exceptional locus, and on
    // q_j = -1 where the quadratic relation degenerates.
    const int l = v.l;
    if (!p.is_even) {
        const Rat r = p.r();
        if (is_integer(r) && r > 0) {
            const long rl = rat_to_long(r);
            if ((rl - l) % d == 0 || (rl + l) % d == 0)
                throw HeckeDegenerateError("tau rep of H(q): c = " + rat_str(p.c) +
                                           " lies on the positive locus r = " + std::to_string(rl) +
                                           " = +-" + std::to_string(l) + " (mod " + std::to_string(d) +
                                           ")");
        }
        if (rep.q1 == Cyc(-1))
            throw HeckeDegenerateError("tau rep of H(q): q = -1 (c half-integer)");
    } else {
        const int m = p.m();
        const Rat bigr = p.R();
        if (is_integer(bigr) && bigr > 0) {
            const long rl = rat_to_long(bigr);
            if ((rl - l) % (2 * m) == 0 || (rl + l) % (2 * m) == 0)
                throw HeckeDegenerateError("tau rep of H(q1,q2): R = " + std::to_string(rl) +
                                           " = +-" + std::to_string(l) + " (mod " +
                                           std::to_string(2 * m) + "), positive locus");
        }
        if (rep.q1 == Cyc(-1) || rep.q2 == Cyc(-1))
            throw HeckeDegenerateError("tau rep of H(q1,q2): a parameter q_j = -1");
    }

    Cyc product;
    if (!p.is_even) {
        const Cyc omega_l = Cyc::root_of_unity(d, l);
        const Cyc omega_ml = Cyc::root_of_unity(d, -l);
        product = rep.q1 * (Cyc(2) + omega_l + omega_ml);
    } else {
        const Cyc root = exp_minus_pi_i(p.k1 + p.k2);
        const Cyc omega_l = Cyc::root_of_unity(d, l);
        const Cyc omega_ml = Cyc::root_of_unity(d, -l);
        product = rep.q1 + rep.q2 + root * (omega_l + omega_ml);
    }

    Cyc cl, clp;
    if (product.is_zero()) {
        // Product-zero points lie on the minus-family lines (even d); the
        // triangular direction is fixed by the sign of R' so that the
        // one-dimensional submodule matches the module side.
        if (p.is_even && p.Rp() < 0) {
            cl = Cyc(0);
            clp = Cyc(1);
        } else {
            cl = Cyc(1);
            clp = Cyc(0);
        }
    } else {
        if (gauge.is_zero()) throw std::invalid_argument("build_rep: zero gauge");
        cl = gauge;
        clp = product * gauge.inverse();
    }

    rep.t1 = CycMat(2, 2);
    rep.t1.at(0, 0) = Cyc(1);
    rep.t1.at(1, 0) = cl;
    rep.t1.at(1, 1) = -rep.q1;
    rep.t2 = CycMat(2, 2);
    rep.t2.at(0, 0) = -rep.q2;
    rep.t2.at(0, 1) = clp;
    rep.t2.at(1, 1) = Cyc(1);
    return rep;
}

HeckeRep build_rep(int d, const IrrepLabel& v, const Params& p) {
    return build_rep_gauged(d, v, p, Cyc(1));
}

bool quadratic_check(const HeckeRep& rep) {
    const CycMat id = CycMat::identity(rep.dim());
    const CycMat z1 = (rep.t1 - id) * (rep.t1 + id.scaled(rep.q1));
    const CycMat z2 = (rep.t2 - id) * (rep.t2 + id.scaled(rep.q2));
    return z1.is_zero() && z2.is_zero();
}

bool braid_check(const HeckeRep& rep) {
    CycMat lhs = CycMat::identity(rep.dim());
    CycMat rhs = CycMat::identity(rep.dim());
    for (int i = 0; i < rep.d; ++i) {
        lhs = lhs * (i % 2 == 0 ? rep.t1 : rep.t2);
        rhs = rhs * (i % 2 == 0 ? rep.t2 : rep.t1);
    }
    return lhs == rhs;
}

int intertwiner_dim(const HeckeRep& a, const HeckeRep& b) {
    if (a.d != b.d) throw std::invalid_argument("intertwiner_dim: different groups");
    if (a.q1 != b.q1 || a.q2 != b.q2)
        throw std::invalid_argument("intertwiner_dim: mismatched Hecke parameters");
    // Unknowns X (dim(b) x dim(a)) with X a(T_j) = b(T_j) X; vectorize
    // row-major and stack both generator constraints.
    const int ra = a.dim(), rb = b.dim();
    const int unknowns = ra * rb;
    CycMat sys(2 * unknowns, unknowns);
    int row = 0;
    for (int j = 0; j < 2; ++j) {
        const CycMat& ta = (j == 0) ? a.t1 : a.t2;
        const CycMat& tb = (j == 0) ? b.t1 : b.t2;
        for (int i = 0; i < rb; ++i)
            for (int k = 0; k < ra; ++k) {
                // (X ta - tb X)_{ik} = sum_s X_{is} ta_{sk} - sum_s tb_{is} X_{sk}
                for (int s = 0; s < ra; ++s) sys.at(row, i * ra + s) += ta.at(s, k);
                for (int s = 0; s < rb; ++s) sys.at(row, s * ra + k) -= tb.at(i, s);
                ++row;
            }
    }
    return unknowns - rank(sys);
}

}  // namespace chered
