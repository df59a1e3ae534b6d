#include "chered/module_vec.hpp"

#include <sstream>
#include <stdexcept>

namespace chered {

ModuleVec ModuleVec::zero(int d, const IrrepLabel& rep) {
    ModuleVec v;
    v.d = d;
    v.rep = rep;
    v.parts.assign(rep.dim(), BiPoly::zero());
    return v;
}

ModuleVec ModuleVec::unit(int d, const IrrepLabel& rep, int i) {
    return wrap(d, rep, BiPoly::constant(Cyc(1)), i);
}

ModuleVec ModuleVec::wrap(int d, const IrrepLabel& rep, const BiPoly& f, int i) {
    ModuleVec v = zero(d, rep);
    if (i < 0 || i >= rep.dim()) throw std::invalid_argument("ModuleVec::wrap: bad index");
    v.parts[i] = f;
    return v;
}

bool ModuleVec::is_zero() const {
    for (const auto& p : parts)
        if (!p.is_zero()) return false;
    return true;
}

int ModuleVec::degree() const {
    int n = -1;
    for (const auto& p : parts) {
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) throw std::logic_error("ModuleVec::degree: inhomogeneous part");
        if (n < 0) n = p.degree();
        else if (n != p.degree()) throw std::logic_error("ModuleVec::degree: mixed degrees");
    }
    return n;
}

ModuleVec ModuleVec::operator-() const {
    ModuleVec v = *this;
    for (auto& p : v.parts) p = -p;
    return v;
}

ModuleVec& ModuleVec::operator+=(const ModuleVec& o) {
    if (rep != o.rep || d != o.d) throw std::invalid_argument("ModuleVec::+=: mismatched modules");
    for (size_t i = 0; i < parts.size(); ++i) parts[i] += o.parts[i];
    return *this;
}

ModuleVec& ModuleVec::operator-=(const ModuleVec& o) {
    if (rep != o.rep || d != o.d) throw std::invalid_argument("ModuleVec::-=: mismatched modules");
    for (size_t i = 0; i < parts.size(); ++i) parts[i] -= o.parts[i];
    return *this;
}

ModuleVec ModuleVec::scaled(const Cyc& s) const {
    ModuleVec v = *this;
    for (auto& p : v.parts) p = p.scaled(s);
    return v;
}

ModuleVec ModuleVec::mul_poly(const BiPoly& f) const {
    ModuleVec v = *this;
    for (auto& p : v.parts) p = poly_mul(p, f);
    return v;
}

bool ModuleVec::operator==(const ModuleVec& o) const {
    return d == o.d && rep == o.rep && parts == o.parts;
}

std::string ModuleVec::str() const {
    if (rep.one_dimensional()) return parts[0].str();
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << " , ";
        os << "(" << parts[i].str() << ")e" << i;
    }
    return os.str();
}

ModuleVec act(const GroupElement& g, const ModuleVec& v) {
    const CycMat rho = irrep_matrix(v.rep, g, v.d);
    ModuleVec out = ModuleVec::zero(v.d, v.rep);
    for (int q = 0; q < rho.rows(); ++q)
        for (int p = 0; p < rho.cols(); ++p) {
            if (rho.at(q, p).is_zero() || v.parts[p].is_zero()) continue;
            out.parts[q] += apply_group(g, v.parts[p], v.d).scaled(rho.at(q, p));
        }
    return out;
}

int slice_dim(int n, const IrrepLabel& rep) { return (n + 1) * rep.dim(); }

std::vector<Cyc> to_coords(const ModuleVec& v, int n) {
    const int dim = v.rep.dim();
    std::vector<Cyc> coords(slice_dim(n, v.rep));
    for (int p = 0; p < dim; ++p) {
        for (const auto& [m, c] : v.parts[p].terms()) {
            if (m.total() != n) throw std::logic_error("to_coords: degree mismatch");
            const int mono_idx = n - m.a;  // slice_basis order: a = n .. 0
            coords[static_cast<size_t>(mono_idx) * dim + p] = c;
        }
    }
    return coords;
}

ModuleVec from_coords(int d, const IrrepLabel& rep, int n, const std::vector<Cyc>& coords) {
    if (static_cast<int>(coords.size()) != slice_dim(n, rep))
        throw std::invalid_argument("from_coords: size mismatch");
    ModuleVec v = ModuleVec::zero(d, rep);
    const int dim = rep.dim();
    const auto basis = slice_basis(n);
    for (size_t mi = 0; mi < basis.size(); ++mi)
        for (int p = 0; p < dim; ++p) v.parts[p].add_term(basis[mi], coords[mi * dim + p]);
    return v;
}

CycMat group_action_matrix(const GroupElement& g, int d, const IrrepLabel& rep, int n) {
    const int dim = rep.dim();
    const int nn = slice_dim(n, rep);
    const CycMat rho = irrep_matrix(rep, g, d);
    CycMat m(nn, nn);
    const auto basis = slice_basis(n);
    for (size_t mi = 0; mi < basis.size(); ++mi) {
        // Monomials map to single monomials under the action.
        const Bidegree b = basis[mi];
        Bidegree img;
        Cyc scale;
        if (!g.reflection) {
            img = b;
            scale = Cyc::root_of_unity(d, static_cast<long>(g.index) * (b.b - b.a));
        } else {
            img = {b.b, b.a};
            scale = Cyc::root_of_unity(d, static_cast<long>(g.index) * (b.a - b.b));
        }
        const int img_idx = n - img.a;
        for (int p = 0; p < dim; ++p)
            for (int q = 0; q < dim; ++q) {
                const Cyc& r = rho.at(q, p);
                if (r.is_zero()) continue;
                m.at(static_cast<int>(img_idx) * dim + q, static_cast<int>(mi) * dim + p) = scale * r;
            }
    }
    return m;
}

std::vector<ModuleVec> isotypic_component(const IrrepLabel& u, const std::vector<ModuleVec>& space) {
    if (space.empty()) return {};
    const int d = space.front().d;
    const IrrepLabel rep = space.front().rep;
    const int n = space.front().degree();
    if (!valid_irrep(u, d)) throw std::invalid_argument("isotypic_component: invalid irrep");

    const Cyc norm = Cyc(Rat(u.dim(), 2 * d));
    EchelonSpan span(slice_dim(n, rep));
    std::vector<ModuleVec> basis;
    for (const auto& v : space) {
        ModuleVec img = ModuleVec::zero(d, rep);
        for (const auto& g : all_elements(d)) {
            const Cyc chi = irrep_character(u, group_inv(g, d), d);
            if (chi.is_zero()) continue;
            img += act(g, v).scaled(chi);
        }
        img = img.scaled(norm);
        if (img.is_zero()) continue;
        if (span.insert(to_coords(img, n))) basis.push_back(std::move(img));
    }
    return basis;
}

std::map<IrrepLabel, int> isotypic_dims(const std::vector<ModuleVec>& space) {
    std::map<IrrepLabel, int> out;
    if (space.empty()) return out;
    const int d = space.front().d;
    for (const auto& u : list_irreps(d)) {
        const auto comp = isotypic_component(u, space);
        if (!comp.empty()) out[u] = static_cast<int>(comp.size());
    }
    return out;
}

}  // namespace chered
