#include "chered/dihedral.hpp"

#include <stdexcept>

namespace chered {

std::string IrrepLabel::str() const {
    switch (kind) {
        case Kind::Triv: return "triv";
        case Kind::Sgn: return "sgn";
        case Kind::Eps1: return "eps1";
        case Kind::Eps2: return "eps2";
        case Kind::Tau: return "tau" + std::to_string(l);
    }
    return "?";
}

IrrepLabel IrrepLabel::parse(const std::string& s) {
    if (s == "triv") return triv();
    if (s == "sgn") return sgn();
    if (s == "eps1") return eps1();
    if (s == "eps2") return eps2();
    if (s.rfind("tau", 0) == 0 && s.size() > 3) {
        const int l = std::stoi(s.substr(3));
        return tau(l);
    }
    throw std::invalid_argument("IrrepLabel::parse: unknown label '" + s + "'");
}

bool valid_irrep(const IrrepLabel& v, int d) {
    const bool even = (d % 2 == 0);
    const int m = d / 2;
    switch (v.kind) {
        case IrrepLabel::Kind::Triv:
        case IrrepLabel::Kind::Sgn: return true;
        case IrrepLabel::Kind::Eps1:
        case IrrepLabel::Kind::Eps2: return even;
        case IrrepLabel::Kind::Tau: return even ? (v.l >= 1 && v.l < m) : (v.l >= 1 && v.l <= m);
    }
    return false;
}

std::vector<IrrepLabel> list_irreps(int d) {
    std::vector<IrrepLabel> v{IrrepLabel::triv(), IrrepLabel::sgn()};
    const bool even = (d % 2 == 0);
    const int m = d / 2;
    if (even) {
        v.push_back(IrrepLabel::eps1());
        v.push_back(IrrepLabel::eps2());
    }
    const int lmax = even ? m - 1 : m;
    for (int l = 1; l <= lmax; ++l) v.push_back(IrrepLabel::tau(l));
    return v;
}

IrrepLabel tensor_one_dim(const IrrepLabel& eps, const IrrepLabel& v, int d) {
    if (!eps.one_dimensional()) throw std::invalid_argument("tensor_one_dim: twist must be 1-dim");
    using K = IrrepLabel::Kind;
    if (v.is_tau()) {
        if (eps.kind == K::Triv || eps.kind == K::Sgn) return v;
        return IrrepLabel::tau(d / 2 - v.l);
    }
    // Multiply the two characters inside {triv, sgn, eps1, eps2} ~ Z/2 x Z/2.
    auto bits = [](const IrrepLabel& x) -> std::pair<int, int> {
        switch (x.kind) {
            case K::Triv: return {0, 0};
            case K::Sgn: return {1, 1};   // -1 on both reflection families
            case K::Eps1: return {1, 0};  // -1 on even-index reflections
            case K::Eps2: return {0, 1};  // -1 on odd-index reflections
            default: throw std::logic_error("tensor_one_dim");
        }
    };
    const auto [a1, a2] = bits(eps);
    const auto [b1, b2] = bits(v);
    const int c1 = (a1 + b1) % 2, c2 = (a2 + b2) % 2;
    if (c1 == 0 && c2 == 0) return IrrepLabel::triv();
    if (c1 == 1 && c2 == 1) return IrrepLabel::sgn();
    if (c1 == 1 && c2 == 0) return IrrepLabel::eps1();
    return IrrepLabel::eps2();
}

namespace {

// eps1(s_j) = +1 for odd j, -1 for even j; eps1(r^k) = (-1)^k.
int eps1_value(const GroupElement& g) {
    if (g.reflection) return (g.index % 2 == 1) ? 1 : -1;
    return (g.index % 2 == 0) ? 1 : -1;
}

}  // namespace

CycMat irrep_matrix(const IrrepLabel& v, const GroupElement& g, int d) {
    if (!valid_irrep(v, d)) throw std::invalid_argument("irrep_matrix: invalid irrep for d");
    using K = IrrepLabel::Kind;
    if (v.one_dimensional()) {
        CycMat m(1, 1);
        int val = 1;
        switch (v.kind) {
            case K::Triv: val = 1; break;
            case K::Sgn: val = g.reflection ? -1 : 1; break;
            case K::Eps1: val = eps1_value(g); break;
            case K::Eps2: val = eps1_value(g) * (g.reflection ? -1 : 1); break;
            default: break;
        }
        m.at(0, 0) = Cyc(val);
        return m;
    }
    // Tau(l) on (z^l, zbar^l):
    //   r^k: diag(w^{-lk}, w^{lk});  s_j: offdiag(w^{-jl} ; w^{jl}).
    CycMat m(2, 2);
    const long l = v.l;
    if (!g.reflection) {
        m.at(0, 0) = Cyc::root_of_unity(d, -l * g.index);
        m.at(1, 1) = Cyc::root_of_unity(d, l * g.index);
    } else {
        m.at(0, 1) = Cyc::root_of_unity(d, -l * g.index);
        m.at(1, 0) = Cyc::root_of_unity(d, l * g.index);
    }
    return m;
}

Cyc irrep_character(const IrrepLabel& v, const GroupElement& g, int d) {
    return irrep_matrix(v, g, d).trace();
}

std::vector<ConjClass> conjugacy_classes(int d) {
    if (d < 3) throw std::invalid_argument("conjugacy_classes: d must be >= 3");
    std::vector<ConjClass> out;
    for (int k = 0; k <= d / 2; ++k) {
        ConjClass c;
        c.rep = GroupElement::rotation(k, d);
        c.members.push_back(c.rep);
        if (k != 0 && 2 * k != d) c.members.push_back(GroupElement::rotation(d - k, d));
        out.push_back(std::move(c));
    }
    if (d % 2 == 1) {
        ConjClass c;
        c.rep = GroupElement::make_reflection(0, d);
        for (int j = 0; j < d; ++j) c.members.push_back(GroupElement::make_reflection(j, d));
        out.push_back(std::move(c));
    } else {
        ConjClass even, odd;
        even.rep = GroupElement::make_reflection(0, d);
        odd.rep = GroupElement::make_reflection(1, d);
        for (int j = 0; j < d; j += 2) even.members.push_back(GroupElement::make_reflection(j, d));
        for (int j = 1; j < d; j += 2) odd.members.push_back(GroupElement::make_reflection(j, d));
        out.push_back(std::move(even));
        out.push_back(std::move(odd));
    }
    return out;
}

CharacterTable character_table(int d) {
    CharacterTable t;
    t.d = d;
    t.classes = conjugacy_classes(d);
    t.irreps = list_irreps(d);
    t.values.resize(t.irreps.size());
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        t.values[i].reserve(t.classes.size());
        for (const auto& c : t.classes) t.values[i].push_back(irrep_character(t.irreps[i], c.rep, d));
    }
    return t;
}

}  // namespace chered
