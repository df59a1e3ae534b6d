#include "chered/cherednik.hpp"

#include <stdexcept>

namespace chered {

StandardModule::StandardModule(const Params& p, const IrrepLabel& rep) : p_(p), rep_(rep) {
    if (!valid_irrep(rep, p.d)) throw std::invalid_argument("StandardModule: invalid irrep for d");
    h0_ = h_weight(p, rep);
    refl_k_.reserve(p.d);
    rho_refl_.reserve(p.d);
    for (int j = 0; j < p.d; ++j) {
        refl_k_.push_back(p.k_of_reflection(j));
        rho_refl_.push_back(irrep_matrix(rep, GroupElement::make_reflection(j, p.d), p.d));
    }
}

ModuleVec StandardModule::dunkl(int y_index, const ModuleVec& v) const {
    if (y_index != 1 && y_index != 2) throw std::invalid_argument("dunkl: y_index must be 1 or 2");
    const int d = p_.d;
    const int dim = rep_.dim();
    ModuleVec out = ModuleVec::zero(d, rep_);

    for (int q = 0; q < dim; ++q)
        out.parts[q] = (y_index == 1) ? d_dz(v.parts[q]) : d_dzbar(v.parts[q]);

    for (int j = 0; j < d; ++j) {
        if (refl_k_[j] == 0) continue;
        const GroupElement s = GroupElement::make_reflection(j, d);
        const BiPoly alpha = BiPoly::monomial(1, 0, Cyc(1)) -
                             BiPoly::monomial(0, 1, Cyc::root_of_unity(d, j));
        // <y1, alpha_j> = 1, <y2, alpha_j> = -w^j; the operator subtracts
        // k(s_j) <y, alpha_j> ((f - s_j f)/alpha_j) (x) s_j v.
        Cyc factor = Cyc(Rat(-refl_k_[j]));
        if (y_index == 2) factor *= -Cyc::root_of_unity(d, j);
        for (int pidx = 0; pidx < dim; ++pidx) {
            if (v.parts[pidx].is_zero()) continue;
            const BiPoly diff = v.parts[pidx] - apply_group(s, v.parts[pidx], d);
            if (diff.is_zero()) continue;
            const BiPoly quot = exact_divide_linear(diff, alpha);
            for (int q = 0; q < dim; ++q) {
                const Cyc& r = rho_refl_[j].at(q, pidx);
                if (r.is_zero()) continue;
                out.parts[q] += quot.scaled(factor * r);
            }
        }
    }
    return out;
}

CycMat StandardModule::build_dunkl_matrix(int y_index, int n) const {
    const int cols = dim_slice(n);
    const int rows = n >= 1 ? dim_slice(n - 1) : 0;
    CycMat m(rows, cols);
    if (n < 1) return m;
    const auto basis = slice_basis(n);
    const int dim = rep_.dim();
    for (size_t mi = 0; mi < basis.size(); ++mi)
        for (int pidx = 0; pidx < dim; ++pidx) {
            const ModuleVec img =
                dunkl(y_index, ModuleVec::wrap(p_.d, rep_, BiPoly::monomial(basis[mi].a, basis[mi].b, Cyc(1)), pidx));
            if (img.is_zero()) continue;
            const auto coords = to_coords(img, n - 1);
            const int col = static_cast<int>(mi) * dim + pidx;
            for (int r = 0; r < rows; ++r) m.at(r, col) = coords[r];
        }
    return m;
}

const CycMat& StandardModule::dunkl_matrix(int y_index, int n) {
    const auto key = std::make_pair(y_index, n);
    auto it = dunkl_cache_.find(key);
    if (it != dunkl_cache_.end()) return it->second;
    return dunkl_cache_.emplace(key, build_dunkl_matrix(y_index, n)).first->second;
}

CycMat StandardModule::mult_matrix(int x_index, int n) const {
    const int dim = rep_.dim();
    CycMat m(dim_slice(n + 1), dim_slice(n));
    const auto basis = slice_basis(n);
    for (size_t mi = 0; mi < basis.size(); ++mi) {
        // z * z^a zbar^b sits at slice position (n+1) - (a+1) = n - a = mi;
        // zbar shifts it one step further.
        const int target = (x_index == 1) ? static_cast<int>(mi) : static_cast<int>(mi) + 1;
        for (int pidx = 0; pidx < dim; ++pidx)
            m.at(target * dim + pidx, static_cast<int>(mi) * dim + pidx) = Cyc(1);
    }
    return m;
}

const CycMat& StandardModule::action_matrix(const GroupElement& g, int n) {
    const auto key = std::make_pair(g.str(), n);
    auto it = action_cache_.find(key);
    if (it != action_cache_.end()) return it->second;
    return action_cache_.emplace(key, group_action_matrix(g, p_.d, rep_, n)).first->second;
}

StandardModule::SingularSlice StandardModule::singular_vectors(int n) {
    if (n < 1) throw std::invalid_argument("singular_vectors: degree must be >= 1");
    SingularSlice out;
    out.degree = n;
    const CycMat stacked = dunkl_matrix(1, n).stacked(dunkl_matrix(2, n));
    const CycMat ker = kernel_basis(stacked);
    for (int i = 0; i < ker.rows(); ++i)
        out.basis.push_back(from_coords(p_.d, rep_, n, ker.row(i)));
    if (out.basis.empty()) return out;

    int covered = 0;
    for (const auto& u : list_irreps(p_.d)) {
        auto comp = isotypic_component(u, out.basis);
        if (comp.empty()) continue;
        covered += static_cast<int>(comp.size());
        out.type_dims[u] = static_cast<int>(comp.size());
        out.by_type[u] = std::move(comp);
    }
    // The kernel is W-stable, so the isotypic pieces must exhaust it.
    if (covered != out.dim())
        throw std::logic_error("singular_vectors: isotypic decomposition does not exhaust kernel");
    return out;
}

const CycMat& StandardModule::gram(int n) {
    auto it = gram_cache_.find(n);
    if (it != gram_cache_.end()) return it->second;
    if (n == 0) {
        const int dim = rep_.dim();
        CycMat b0(dim, dim);
        if (dim == 1) {
            b0.at(0, 0) = Cyc(1);
        } else {
            b0.at(0, 1) = Cyc(1);
            b0.at(1, 0) = Cyc(1);
        }
        return gram_cache_.emplace(0, std::move(b0)).first->second;
    }
    // Peel one x off the row label through the W-equivariant form
    // identification h* -> h, which sends z to y2 and zbar to y1 (up to a
    // harmless global scale): B(z a', b) = B(a', D2 b) and B(zbar a', b) =
    // B(a', D1 b).  Pairing z with D1 instead would break W-invariance of
    // the form.  The row for z^a zbar^{n-a} with a >= 1 comes from
    // G_{n-1} D2 at the parent z^{a-1} zbar^{n-a}; the pure zbar^n row
    // comes from G_{n-1} D1.
    const CycMat& prev = gram(n - 1);
    const CycMat peel_z = prev * dunkl_matrix(2, n);
    const CycMat peel_zbar = prev * dunkl_matrix(1, n);
    const int dim = rep_.dim();
    CycMat g(dim_slice(n), dim_slice(n));
    for (int mi = 0; mi <= n; ++mi)
        for (int pidx = 0; pidx < dim; ++pidx) {
            const int row = mi * dim + pidx;
            if (mi <= n - 1)
                g.set_row(row, peel_z.row(mi * dim + pidx));
            else
                g.set_row(row, peel_zbar.row((n - 1) * dim + pidx));
        }
    return gram_cache_.emplace(n, std::move(g)).first->second;
}

int StandardModule::gram_rank(int n) { return rank(gram(n)); }

const EchelonSpan& StandardModule::radical(int n) {
    auto it = radical_cache_.find(n);
    if (it != radical_cache_.end()) return it->second;
    EchelonSpan span(dim_slice(n));
    const CycMat ker = kernel_basis(gram(n));
    for (int i = 0; i < ker.rows(); ++i) span.insert(ker.row(i));
    return radical_cache_.emplace(n, std::move(span)).first->second;
}

StandardModule::GradedDims StandardModule::l_graded_dims(int cutoff) {
    GradedDims out;
    out.cutoff = cutoff;
    out.dims.assign(cutoff + 1, 0);
    long sum = 0;
    for (int n = 0; n <= cutoff; ++n) {
        const int r = gram_rank(n);
        out.dims[n] = r;
        sum += r;
        if (r == 0) {
            out.finite = true;
            out.total = sum;
            break;
        }
    }
    return out;
}

StandardModule::Submodule StandardModule::submodule_slices(const std::vector<ModuleVec>& generators,
                                                           int cutoff) {
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!dunkl(1, g).is_zero() || !dunkl(2, g).is_zero())
            throw std::invalid_argument("submodule_slices: generator is not singular: " + g.str());
    }

    Submodule out;
    std::vector<std::vector<ModuleVec>> bases(cutoff + 1);
    const auto elements = all_elements(p_.d);
    const BiPoly z = BiPoly::monomial(1, 0, Cyc(1));
    const BiPoly zbar = BiPoly::monomial(0, 1, Cyc(1));

    for (int n = 0; n <= cutoff; ++n) {
        EchelonSpan span(dim_slice(n));
        std::vector<ModuleVec>& basis = bases[n];
        // Slice n of the submodule is x-multiplication applied to slice
        // n-1 plus the W-orbits of any degree-n generators; this exhausts
        // the H-module generated by singular W-stable spans.
        if (n > 0) {
            for (const auto& v : bases[n - 1]) {
                for (const BiPoly* x : {&z, &zbar}) {
                    ModuleVec w = v.mul_poly(*x);
                    if (span.insert(to_coords(w, n))) basis.push_back(std::move(w));
                }
            }
        }
        for (const auto& g : generators) {
            if (g.is_zero() || g.degree() != n) continue;
            for (const auto& w : elements) {
                ModuleVec img = act(w, g);
                if (span.insert(to_coords(img, n))) basis.push_back(std::move(img));
            }
        }
        out.spans.push_back(std::move(span));
    }

    out.dims.cutoff = cutoff;
    out.quotient.cutoff = cutoff;
    long qsum = 0;
    bool qfinite = false;
    for (int n = 0; n <= cutoff; ++n) {
        const long sub = out.spans[n].rank();
        const long quot = dim_slice(n) - sub;
        out.dims.dims.push_back(sub);
        out.quotient.dims.push_back(quot);
        qsum += quot;
        if (quot == 0) qfinite = true;
    }
    out.quotient.finite = qfinite;
    if (qfinite) out.quotient.total = qsum;
    return out;
}

Cyc StandardModule::slice_trace(const GroupElement& g, int n) const {
    // Trace on degree-n polynomials times the V-character.
    Cyc poly_tr;
    if (g.reflection) {
        poly_tr = Cyc((n % 2 == 0) ? 1 : 0);
    } else {
        for (int i = 0; i <= n; ++i)
            poly_tr += Cyc::root_of_unity(p_.d, static_cast<long>(g.index) * (n - 2 * i));
    }
    return poly_tr * irrep_character(rep_, g, p_.d);
}

Cyc StandardModule::span_trace(const EchelonSpan& span, const GroupElement& g, int n) {
    if (span.rank() == 0) return Cyc();
    const CycMat& a = action_matrix(g, n);
    Cyc tr;
    const auto& rows = span.basis();
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto img = mat_vec(a, rows[i]);
        tr += span.coords(img)[i];
    }
    return tr;
}

CharacterSeries StandardModule::module_character(int cutoff) {
    const auto classes = conjugacy_classes(p_.d);
    CharacterSeries s;
    s.d = p_.d;
    s.h0 = h0_;
    s.cutoff = cutoff;
    s.coeffs.assign(classes.size(), std::vector<Cyc>(cutoff + 1));
    for (size_t ci = 0; ci < classes.size(); ++ci)
        for (int n = 0; n <= cutoff; ++n) s.coeffs[ci][n] = slice_trace(classes[ci].rep, n);
    s.assert_integral();
    return s;
}

CharacterSeries StandardModule::l_character(int cutoff) {
    const auto classes = conjugacy_classes(p_.d);
    CharacterSeries s;
    s.d = p_.d;
    s.h0 = h0_;
    s.cutoff = cutoff;
    s.coeffs.assign(classes.size(), std::vector<Cyc>(cutoff + 1));
    // Once a slice of L vanishes all later slices vanish, so the radical
    // is the full slice from there on and contributes the whole trace.
    int zero_from = cutoff + 1;
    for (int n = 0; n <= cutoff; ++n)
        if (gram_rank(n) == 0) {
            zero_from = n;
            break;
        }
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        const GroupElement& g = classes[ci].rep;
        for (int n = 0; n <= cutoff; ++n) {
            if (n >= zero_from) continue;  // coefficient 0
            s.coeffs[ci][n] = slice_trace(g, n) - span_trace(radical(n), g, n);
        }
    }
    s.assert_integral();
    return s;
}

CharacterSeries StandardModule::quotient_character(const std::vector<ModuleVec>& generators,
                                                   int cutoff) {
    Submodule sub = submodule_slices(generators, cutoff);
    const auto classes = conjugacy_classes(p_.d);
    CharacterSeries s;
    s.d = p_.d;
    s.h0 = h0_;
    s.cutoff = cutoff;
    s.coeffs.assign(classes.size(), std::vector<Cyc>(cutoff + 1));
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        const GroupElement& g = classes[ci].rep;
        for (int n = 0; n <= cutoff; ++n)
            s.coeffs[ci][n] = slice_trace(g, n) - span_trace(sub.spans[n], g, n);
    }
    s.assert_integral();
    return s;
}

ModuleVec dunkl_apply(const Params& p, int y_index, const ModuleVec& v) {
    return StandardModule(p, v.rep).dunkl(y_index, v);
}

namespace {

void record(AlgebraCheckReport& rep, bool ok, const std::string& identity, int degree,
            const std::string& detail) {
    ++rep.checks_run;
    if (ok) return;
    rep.pass = false;
    rep.failures.push_back({identity, degree, detail});
}

}  // namespace

AlgebraCheckReport algebra_relation_check(const Params& p, int cutoff) {
    AlgebraCheckReport rep;
    rep.cutoff = cutoff;
    StandardModule mod(p, IrrepLabel::triv());
    const int d = p.d;
    const Rat h0 = mod.h0();

    // Operator matrices up to slice cutoff+2 feed the shifted identities.
    auto D = [&](int y, int n) -> const CycMat& { return mod.dunkl_matrix(y, n); };
    auto X = [&](int x, int n) { return mod.mult_matrix(x, n); };

    for (int n = 0; n <= cutoff; ++n) {
        // (a) [D1, D2] = 0 on slice n.
        if (n >= 2)
            record(rep, D(1, n - 1) * D(2, n) == D(2, n - 1) * D(1, n), "[D1,D2]=0", n, "");

        // (b) w D_y w^{-1} = D_{w(y)}.
        if (n >= 1) {
            for (const auto& w : all_elements(d)) {
                const CycMat& aw_prev = mod.action_matrix(w, n - 1);
                const CycMat& awinv = mod.action_matrix(group_inv(w, d), n);
                for (int y = 1; y <= 2; ++y) {
                    const CycMat lhs = (aw_prev * D(y, n)) * awinv;
                    // w(y1) = w^k y1 (rotation r^k) or w^{-j} y2 (s_j);
                    // w(y2) = w^{-k} y2 or w^j y1.
                    CycMat rhs(mod.dim_slice(n - 1), mod.dim_slice(n));
                    if (!w.reflection) {
                        const Cyc f = Cyc::root_of_unity(d, (y == 1 ? 1 : -1) * w.index);
                        rhs = D(y, n).scaled(f);
                    } else {
                        const Cyc f = Cyc::root_of_unity(d, (y == 1 ? -1 : 1) * w.index);
                        rhs = D(y == 1 ? 2 : 1, n).scaled(f);
                    }
                    record(rep, lhs == rhs, "equivariance w D_y w^-1 = D_w(y)", n,
                           "w = " + w.str() + ", y = y" + std::to_string(y));
                }
            }
        }

        // (c) [y, x] = (y,x) - sum_j k_j (y,alpha_j)(alpha_j^v,x) s_j.
        for (int y = 1; y <= 2; ++y)
            for (int x = 1; x <= 2; ++x) {
                CycMat lhs = D(y, n + 1) * X(x, n);
                if (n >= 1) lhs = lhs - X(x, n - 1) * D(y, n);
                CycMat rhs(mod.dim_slice(n), mod.dim_slice(n));
                const Rat pairing = (x == y) ? Rat(1) : Rat(0);
                if (pairing != 0) rhs = CycMat::identity(mod.dim_slice(n)).scaled(Cyc(pairing));
                for (int j = 0; j < d; ++j) {
                    const Rat kj = p.k_of_reflection(j);
                    if (kj == 0) continue;
                    // (y1,alpha_j) = 1, (y2,alpha_j) = -w^j;
                    // (alpha_j^v, z) = 1, (alpha_j^v, zbar) = -w^{-j}.
                    Cyc coeff = Cyc(Rat(-kj));
                    if (y == 2) coeff *= -Cyc::root_of_unity(d, j);
                    if (x == 2) coeff *= -Cyc::root_of_unity(d, -j);
                    rhs = rhs + mod.action_matrix(GroupElement::make_reflection(j, d), n).scaled(coeff);
                }
                record(rep, lhs == rhs, "[y,x] commutation relation", n,
                       "y = y" + std::to_string(y) + ", x = " + (x == 1 ? "z" : "zbar"));
            }

        // (d) h = (1/2) sum (x_i y_i + y_i x_i) acts by h0 + n.
        {
            CycMat h = D(1, n + 1) * X(1, n) + D(2, n + 1) * X(2, n);
            if (n >= 1) h = h + X(1, n - 1) * D(1, n) + X(2, n - 1) * D(2, n);
            const CycMat expected =
                CycMat::identity(mod.dim_slice(n)).scaled(Cyc(Rat(2) * (h0 + n)));
            record(rep, h == expected, "h acts by h0 + n", n, "expected " + rat_str(h0 + n));
        }

        // (e) sl2 relations for E = (1/2) z zbar, F = -2 D1 D2.
        {
            auto E = [&](int k) { return (X(2, k + 1) * X(1, k)).scaled(Cyc(Rat(1, 2))); };
            auto F = [&](int k) {
                return (D(1, std::max(k - 1, 0)) * D(2, k)).scaled(Cyc(Rat(-2)));
            };
            auto H = [&](int k) {
                CycMat h = D(1, k + 1) * X(1, k) + D(2, k + 1) * X(2, k);
                if (k >= 1) h = h + X(1, k - 1) * D(1, k) + X(2, k - 1) * D(2, k);
                return h.scaled(Cyc(Rat(1, 2)));
            };
            record(rep, H(n + 2) * E(n) - E(n) * H(n) == E(n).scaled(Cyc(2)), "[h,E] = 2E", n, "");
            if (n >= 2)
                record(rep, H(n - 2) * F(n) - F(n) * H(n) == F(n).scaled(Cyc(-2)), "[h,F] = -2F",
                       n, "");
            CycMat ef(mod.dim_slice(n), mod.dim_slice(n));
            if (n >= 2) ef = E(n - 2) * F(n);
            const CycMat fe = F(n + 2) * E(n);
            record(rep, ef - fe == H(n), "[E,F] = h", n, "");
        }
    }
    return rep;
}

}  // namespace chered
