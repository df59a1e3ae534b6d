#include "chered/params.hpp"

#include <stdexcept>

namespace chered {

Params Params::odd(int d, const Rat& c) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("Params::odd: d must be odd >= 3");
    Params p;
    p.d = d;
    p.is_even = false;
    p.c = c;
    return p;
}

Params Params::even(int d, const Rat& k1, const Rat& k2) {
    if (d < 4 || d % 2 == 1) throw std::invalid_argument("Params::even: d must be even >= 4");
    Params p;
    p.d = d;
    p.is_even = true;
    p.k1 = k1;
    p.k2 = k2;
    return p;
}

Rat Params::k_of_reflection(int j) const {
    if (!is_even) return c;
    j %= 2;
    if (j < 0) j += 2;
    return j == 1 ? k1 : k2;
}

Rat Params::r() const {
    if (is_even) throw std::logic_error("Params::r: even parameters");
    return Rat(d) * c;
}

Rat Params::R() const {
    if (!is_even) throw std::logic_error("Params::R: odd parameters");
    return Rat(m()) * (k1 + k2);
}

Rat Params::Rp() const {
    if (!is_even) throw std::logic_error("Params::Rp: odd parameters");
    return Rat(m()) * (k1 - k2);
}

std::string Params::str() const {
    if (!is_even) return "d=" + std::to_string(d) + ", c=" + rat_str(c);
    return "d=" + std::to_string(d) + ", k=(" + rat_str(k1) + "," + rat_str(k2) + ")";
}

Rat h_weight(const Params& p, const IrrepLabel& v) {
    if (!valid_irrep(v, p.d)) throw std::invalid_argument("h_weight: invalid irrep");
    // (sum_s k(s) s) acts on irreducible V by the scalar
    // (1/dim V) sum_s k(s) chi_V(s).
    Rat acc(0);
    for (int j = 0; j < p.d; ++j) {
        const Cyc chi = irrep_character(v, GroupElement::make_reflection(j, p.d), p.d);
        if (chi.is_zero()) continue;
        acc += p.k_of_reflection(j) * chi.rational_value();
    }
    return Rat(1) - acc / Rat(v.dim());
}

Params twist_params(const Params& p, const IrrepLabel& eps) {
    if (!eps.one_dimensional()) throw std::invalid_argument("twist_params: twist must be 1-dim");
    if (!p.is_even) {
        if (eps.kind == IrrepLabel::Kind::Sgn) return Params::odd(p.d, Rat(-p.c));
        return p;
    }
    // Multiply k(s_j) by eps(s_j), constant on each parity class.
    const Rat e1 = irrep_character(eps, GroupElement::make_reflection(1, p.d), p.d).rational_value();
    const Rat e2 = irrep_character(eps, GroupElement::make_reflection(0, p.d), p.d).rational_value();
    return Params::even(p.d, e1 * p.k1, e2 * p.k2);
}

}  // namespace chered
