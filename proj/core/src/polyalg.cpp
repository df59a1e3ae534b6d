#include "chered/polyalg.hpp"

#include <sstream>
#include <stdexcept>

namespace chered {

BiPoly BiPoly::monomial(int a, int b, const Cyc& coeff) {
    BiPoly p;
    if (a < 0 || b < 0) throw std::invalid_argument("BiPoly::monomial: negative exponent");
    if (!coeff.is_zero()) p.terms_[{a, b}] = coeff;
    return p;
}

int BiPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

bool BiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int n = terms_.begin()->first.total();
    for (const auto& [m, c] : terms_)
        if (m.total() != n) return false;
    return true;
}

Cyc BiPoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Cyc() : it->second;
}

void BiPoly::add_term(const Bidegree& m, const Cyc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BiPoly BiPoly::operator-() const {
    BiPoly p;
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BiPoly BiPoly::scaled(const Cyc& s) const {
    BiPoly p;
    if (s.is_zero()) return p;
    for (const auto& [m, c] : terms_) {
        Cyc x = c * s;
        if (!x.is_zero()) p.terms_[m] = std::move(x);
    }
    return p;
}

BiPoly BiPoly::homogeneous_part(int n) const {
    BiPoly p;
    for (const auto& [m, c] : terms_)
        if (m.total() == n) p.terms_[m] = c;
    return p;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool negated = false;
        if (c.is_rational() && c.rational_value() < 0) {
            cs = (-c).str();
            negated = true;
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        const bool is_const = (m.a == 0 && m.b == 0);
        const bool unit = (cs == "1") && !is_const;
        const bool needs_parens = cs.find(' ') != std::string::npos;
        if (!unit) {
            if (needs_parens) os << "(" << cs << ")";
            else os << cs;
            if (!is_const) os << "*";
        }
        if (m.a > 0) {
            os << "z";
            if (m.a > 1) os << "^" << m.a;
        }
        if (m.b > 0) {
            if (m.a > 0) os << "*";
            os << "zb";
            if (m.b > 1) os << "^" << m.b;
        }
    }
    return os.str();
}

BiPoly poly_mul(const BiPoly& f, const BiPoly& g) {
    BiPoly p;
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms())
            p.add_term({mf.a + mg.a, mf.b + mg.b}, cf * cg);
    return p;
}

BiPoly apply_group(const GroupElement& g, const BiPoly& f, int d) {
    BiPoly p;
    if (!g.reflection) {
        // z^a zbar^b -> w^{k(b-a)} z^a zbar^b
        for (const auto& [m, c] : f.terms())
            p.add_term(m, c * Cyc::root_of_unity(d, static_cast<long>(g.index) * (m.b - m.a)));
    } else {
        // z^a zbar^b -> w^{j(a-b)} z^b zbar^a
        for (const auto& [m, c] : f.terms())
            p.add_term({m.b, m.a}, c * Cyc::root_of_unity(d, static_cast<long>(g.index) * (m.a - m.b)));
    }
    return p;
}

BiPoly d_dz(const BiPoly& f) {
    BiPoly p;
    for (const auto& [m, c] : f.terms())
        if (m.a > 0) p.add_term({m.a - 1, m.b}, Cyc(Rat(m.a)) * c);
    return p;
}

BiPoly d_dzbar(const BiPoly& f) {
    BiPoly p;
    for (const auto& [m, c] : f.terms())
        if (m.b > 0) p.add_term({m.a, m.b - 1}, Cyc(Rat(m.b)) * c);
    return p;
}

BiPoly exact_divide_linear(const BiPoly& f, const BiPoly& alpha) {
    if (alpha.degree() != 1 || !alpha.is_homogeneous())
        throw std::invalid_argument("exact_divide_linear: divisor must be homogeneous linear");
    const Cyc c1 = alpha.coeff(1, 0);
    const Cyc c2 = alpha.coeff(0, 1);

    BiPoly rem = f;
    BiPoly quot;
    if (!c1.is_zero()) {
        const Cyc inv = c1.inverse();
        // Repeatedly kill the term of highest z-degree.
        while (!rem.is_zero()) {
            const auto& terms = rem.terms();
            auto lead = terms.end();
            for (auto it = terms.begin(); it != terms.end(); ++it)
                if (lead == terms.end() || it->first.a > lead->first.a) lead = it;
            if (lead->first.a == 0) break;
            const Bidegree qm{lead->first.a - 1, lead->first.b};
            const Cyc qc = lead->second * inv;
            quot.add_term(qm, qc);
            rem.add_term({qm.a + 1, qm.b}, -(qc * c1));
            rem.add_term({qm.a, qm.b + 1}, -(qc * c2));
        }
    } else {
        const Cyc inv = c2.inverse();
        while (!rem.is_zero()) {
            auto lead = rem.terms().begin();
            if (lead->first.b == 0) break;
            const Bidegree qm{lead->first.a, lead->first.b - 1};
            const Cyc qc = lead->second * inv;
            quot.add_term(qm, qc);
            rem.add_term({qm.a, qm.b + 1}, -(qc * c2));
        }
    }
    if (!rem.is_zero())
        throw std::domain_error("exact_divide_linear: nonzero remainder " + rem.str());
    return quot;
}

std::vector<Bidegree> slice_basis(int n) {
    if (n < 0) throw std::invalid_argument("slice_basis: negative degree");
    std::vector<Bidegree> v;
    v.reserve(n + 1);
    for (int a = n; a >= 0; --a) v.push_back({a, n - a});
    return v;
}

}  // namespace chered
