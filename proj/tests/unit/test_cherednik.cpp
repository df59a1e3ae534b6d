#include <doctest.h>

#include "chered/cherednik.hpp"

using namespace chered;

namespace {

BiPoly zp(int a) { return BiPoly::monomial(a, 0, Cyc(1)); }
BiPoly zbp(int b) { return BiPoly::monomial(0, b, Cyc(1)); }

ModuleVec triv_vec(int d, const BiPoly& f) { return ModuleVec::wrap(d, IrrepLabel::triv(), f); }

}  // namespace

TEST_CASE("h weights match the lowest-weight tables") {
    // d odd: triv 1 - dc, sgn 1 + dc, tau 1
    const Params p3 = Params::odd(3, rat(1, 3));
    CHECK(h_weight(p3, IrrepLabel::triv()) == rat(0));
    CHECK(h_weight(p3, IrrepLabel::sgn()) == rat(2));
    CHECK(h_weight(p3, IrrepLabel::tau(1)) == rat(1));

    // d even: triv 1-R, eps1 1-R', sgn 1+R, eps2 1+R', tau 1
    const Params p4 = Params::even(4, rat(3, 2), rat(3, 2));
    CHECK(h_weight(p4, IrrepLabel::triv()) == rat(-5));
    CHECK(h_weight(p4, IrrepLabel::sgn()) == rat(7));
    CHECK(h_weight(p4, IrrepLabel::eps1()) == rat(1));
    CHECK(h_weight(p4, IrrepLabel::eps2()) == rat(1));
    CHECK(h_weight(p4, IrrepLabel::tau(1)) == rat(1));

    const Params p8 = Params::even(8, rat(1, 4), rat(1, 2));
    CHECK(p8.R() == rat(3));
    CHECK(p8.Rp() == rat(-1));
    CHECK(h_weight(p8, IrrepLabel::triv()) == rat(-2));
    CHECK(h_weight(p8, IrrepLabel::eps1()) == rat(2));
}

TEST_CASE("Dunkl operators on the polynomial representation, d = 3") {
    const Params p = Params::odd(3, rat(2, 7));
    StandardModule mod(p, IrrepLabel::triv());
    const Cyc a = Cyc(rat(1)) - Cyc(rat(3) * p.c);

    // D1 z = (1 - 3c) 1, D2 z = 0, D1 zbar = 0, D2 zbar = (1 - 3c) 1
    CHECK(mod.dunkl(1, triv_vec(3, zp(1))) == triv_vec(3, BiPoly::constant(a)));
    CHECK(mod.dunkl(2, triv_vec(3, zp(1))).is_zero());
    CHECK(mod.dunkl(1, triv_vec(3, zbp(1))).is_zero());
    CHECK(mod.dunkl(2, triv_vec(3, zbp(1))) == triv_vec(3, BiPoly::constant(a)));

    // lowest-weight vectors are killed
    CHECK(mod.dunkl(1, triv_vec(3, BiPoly::constant(Cyc(1)))).is_zero());
    CHECK(mod.dunkl(2, triv_vec(3, BiPoly::constant(Cyc(1)))).is_zero());
}

TEST_CASE("Dunkl degenerates to plain derivatives at c = 0") {
    const Params p = Params::odd(5, rat(0));
    StandardModule mod(p, IrrepLabel::triv());
    const ModuleVec v = triv_vec(5, poly_mul(zp(2), zbp(1)));
    CHECK(mod.dunkl(1, v) == triv_vec(5, d_dz(poly_mul(zp(2), zbp(1)))));
    CHECK(mod.dunkl(2, v) == triv_vec(5, d_dzbar(poly_mul(zp(2), zbp(1)))));
}

TEST_CASE("the half-integer singular vector of the odd case") {
    // d = 3, c = 1/2: z^3 - zbar^3 is singular
    const Params p = Params::odd(3, rat(1, 2));
    StandardModule mod(p, IrrepLabel::triv());
    const ModuleVec g = triv_vec(3, zp(3) - zbp(3));
    CHECK(mod.dunkl(1, g).is_zero());
    CHECK(mod.dunkl(2, g).is_zero());
    // and it is the whole kernel in degree 3, of type sgn
    auto s = mod.singular_vectors(3);
    CHECK(s.dim() == 1);
    REQUIRE(s.type_dims.count(IrrepLabel::sgn()) == 1);
    CHECK(s.type_dims.at(IrrepLabel::sgn()) == 1);
}

TEST_CASE("singular vectors in small odd cases") {
    // d = 3, c = 1/3: slice 1 is entirely singular, of type tau_1
    {
        StandardModule mod(Params::odd(3, rat(1, 3)), IrrepLabel::triv());
        auto s = mod.singular_vectors(1);
        CHECK(s.dim() == 2);
        CHECK(s.type_dims.at(IrrepLabel::tau(1)) == 2);
    }
    // d = 3, c = 2/3: the tau_1 pair {z^2, zbar^2} at degree r = 2
    {
        StandardModule mod(Params::odd(3, rat(2, 3)), IrrepLabel::triv());
        auto s = mod.singular_vectors(2);
        CHECK(s.dim() == 2);
        CHECK(s.type_dims.at(IrrepLabel::tau(1)) == 2);
        CHECK(mod.singular_vectors(1).dim() == 0);
    }
    // d = 3, c = 1/7: no singular vectors in low degrees
    {
        StandardModule mod(Params::odd(3, rat(1, 7)), IrrepLabel::triv());
        for (int n = 1; n <= 8; ++n) CHECK(mod.singular_vectors(n).dim() == 0);
    }
}

TEST_CASE("singular vectors on the half-integer lines, d = 4") {
    // k1 = 1/2: (z^2 + zbar^2) singular, type eps2, any k2
    {
        StandardModule mod(Params::even(4, rat(1, 2), rat(1, 4)), IrrepLabel::triv());
        const ModuleVec v = triv_vec(4, zp(2) + zbp(2));
        CHECK(mod.dunkl(1, v).is_zero());
        CHECK(mod.dunkl(2, v).is_zero());
        auto s = mod.singular_vectors(2);
        CHECK(s.dim() == 1);
        CHECK(s.type_dims.count(IrrepLabel::eps2()) == 1);
    }
    // k2 = 1/2: (z^2 - zbar^2) singular, type eps1
    {
        StandardModule mod(Params::even(4, rat(1, 5), rat(1, 2)), IrrepLabel::triv());
        const ModuleVec v = triv_vec(4, zp(2) - zbp(2));
        CHECK(mod.dunkl(1, v).is_zero());
        CHECK(mod.dunkl(2, v).is_zero());
        auto s = mod.singular_vectors(2);
        CHECK(s.dim() == 1);
        CHECK(s.type_dims.count(IrrepLabel::eps1()) == 1);
    }
    // off both lines and off E+: nothing
    {
        StandardModule mod(Params::even(4, rat(1, 5), rat(1, 7)), IrrepLabel::triv());
        for (int n = 1; n <= 6; ++n) CHECK(mod.singular_vectors(n).dim() == 0);
    }
}

TEST_CASE("singular vectors in tau modules") {
    // d = 5, c = 1/5 (r = 1): a sgn vector of degree 1 in M(tau_1)
    {
        StandardModule mod(Params::odd(5, rat(1, 5)), IrrepLabel::tau(1));
        auto s = mod.singular_vectors(1);
        CHECK(s.dim() == 1);
        CHECK(s.type_dims.at(IrrepLabel::sgn()) == 1);
    }
    // same point, M(tau_2) is untouched (r = 1 not congruent to +-2 mod 5)
    {
        StandardModule mod(Params::odd(5, rat(1, 5)), IrrepLabel::tau(2));
        for (int n = 1; n <= 5; ++n) CHECK(mod.singular_vectors(n).dim() == 0);
    }
    // d = 5, c = 1/7: no singular vectors in M(tau_1)
    {
        StandardModule mod(Params::odd(5, rat(1, 7)), IrrepLabel::tau(1));
        for (int n = 1; n <= 6; ++n) CHECK(mod.singular_vectors(n).dim() == 0);
    }
    // d = 4, (1/4, 1/4): E+ with r = 1: sgn vector at degree 1 in M(tau_1)
    {
        StandardModule mod(Params::even(4, rat(1, 4), rat(1, 4)), IrrepLabel::tau(1));
        auto s = mod.singular_vectors(1);
        CHECK(s.dim() == 1);
        CHECK(s.type_dims.at(IrrepLabel::sgn()) == 1);
    }
}

TEST_CASE("Gram matrices") {
    const Rat c = rat(2, 7);
    StandardModule mod(Params::odd(3, c), IrrepLabel::triv());
    // degree 0: the chosen W-invariant form on triv
    CHECK(mod.gram(0) == CycMat::identity(1));
    // degree 1: antidiagonal with entries 1 - 3c
    const Cyc a = Cyc(Rat(1) - 3 * c);
    CHECK(mod.gram(1).at(0, 1) == a);
    CHECK(mod.gram(1).at(1, 0) == a);
    CHECK(mod.gram(1).at(0, 0).is_zero());
    CHECK(mod.gram_rank(1) == 2);

    // tau module degree 0: the (z^l, zbar^l) pairing
    StandardModule tmod(Params::odd(3, c), IrrepLabel::tau(1));
    CHECK(tmod.gram(0).at(0, 1) == Cyc(1));
    CHECK(tmod.gram(0).at(0, 0).is_zero());
}

TEST_CASE("Gram matrices are symmetric and W-invariant") {
    auto check_mod = [](StandardModule mod, int maxdeg) {
        for (int n = 0; n <= maxdeg; ++n) {
            const CycMat& g = mod.gram(n);
            CHECK(g == g.transposed());
            for (const auto& w : all_elements(mod.d())) {
                const CycMat& aw = mod.action_matrix(w, n);
                CHECK(aw.transposed() * g * aw == g);
            }
        }
    };
    check_mod(StandardModule(Params::odd(3, rat(2, 5)), IrrepLabel::triv()), 3);
    check_mod(StandardModule(Params::odd(5, rat(1, 5)), IrrepLabel::tau(1)), 3);
    check_mod(StandardModule(Params::even(4, rat(1, 3), rat(1, 5)), IrrepLabel::tau(1)), 3);
    check_mod(StandardModule(Params::even(4, rat(3, 2), rat(3, 2)), IrrepLabel::triv()), 3);
}

TEST_CASE("the radical is a graded submodule") {
    StandardModule mod(Params::odd(3, rat(1, 2)), IrrepLabel::triv());
    const BiPoly z = zp(1), zb = zbp(1);
    for (int n = 2; n <= 6; ++n) {
        const auto& rad = mod.radical(n);
        for (const auto& row : rad.basis()) {
            const ModuleVec v = from_coords(3, IrrepLabel::triv(), n, row);
            for (const BiPoly* x : {&z, &zb}) {
                const ModuleVec xv = v.mul_poly(*x);
                CHECK(mod.radical(n + 1).contains(to_coords(xv, n + 1)));
            }
        }
    }
}

TEST_CASE("graded dimensions of the irreducible quotient, odd cases") {
    // d = 3, c = 1/3: L(triv) is the trivial module
    {
        StandardModule mod(Params::odd(3, rat(1, 3)), IrrepLabel::triv());
        auto dims = mod.l_graded_dims(6);
        CHECK(dims.finite);
        CHECK(dims.total == 1);
        CHECK(dims.dims[0] == 1);
        CHECK(dims.dims[1] == 0);
    }
    // d = 3, c = 2/3: total 4 with the symmetric profile (1, 2, 1)
    {
        StandardModule mod(Params::odd(3, rat(2, 3)), IrrepLabel::triv());
        auto dims = mod.l_graded_dims(8);
        CHECK(dims.finite);
        CHECK(dims.total == 4);
        CHECK(dims.dims[0] == 1);
        CHECK(dims.dims[1] == 2);
        CHECK(dims.dims[2] == 1);
        CHECK(dims.dims[3] == 0);
    }
    // generic c: full slices everywhere
    {
        StandardModule mod(Params::odd(3, rat(1, 7)), IrrepLabel::triv());
        auto dims = mod.l_graded_dims(6);
        CHECK_FALSE(dims.finite);
        for (int n = 0; n <= 6; ++n) CHECK(dims.dims[n] == n + 1);
    }
}

TEST_CASE("submodule slices and quotients") {
    // d = 3, c = 1/2, ideal generated by z^3 - zbar^3
    {
        StandardModule mod(Params::odd(3, rat(1, 2)), IrrepLabel::triv());
        const std::vector<ModuleVec> gens{triv_vec(3, zp(3) - zbp(3))};
        auto sub = mod.submodule_slices(gens, 8);
        const std::vector<long> expect_sub{0, 0, 0, 1, 2, 3, 4, 5, 6};
        const std::vector<long> expect_quot{1, 2, 3, 3, 3, 3, 3, 3, 3};
        CHECK(sub.dims.dims == expect_sub);
        CHECK(sub.quotient.dims == expect_quot);
        CHECK_FALSE(sub.quotient.finite);
    }
    // d = 3, c = 1/3, quotient by the degree-1 tau pair is the trivial module
    {
        StandardModule mod(Params::odd(3, rat(1, 3)), IrrepLabel::triv());
        auto s = mod.singular_vectors(1);
        auto sub = mod.submodule_slices(s.basis, 5);
        CHECK(sub.quotient.finite);
        CHECK(sub.quotient.total == 1);
    }
    // empty generator list: the quotient is all of M
    {
        StandardModule mod(Params::odd(3, rat(1, 3)), IrrepLabel::triv());
        auto sub = mod.submodule_slices({}, 4);
        for (int n = 0; n <= 4; ++n) {
            CHECK(sub.dims.dims[n] == 0);
            CHECK(sub.quotient.dims[n] == n + 1);
        }
    }
    // non-singular generators are rejected
    {
        StandardModule mod(Params::odd(3, rat(1, 5)), IrrepLabel::triv());
        CHECK_THROWS_AS(mod.submodule_slices({triv_vec(3, zp(1))}, 3), std::invalid_argument);
    }
}

TEST_CASE("Prop-style r^2 dimension for 2-dimensional singular types") {
    // A singular tau pair in degree r with finite quotient forces dim r^2.
    for (const Rat& c : {rat(2, 3), rat(4, 3)}) {
        StandardModule mod(Params::odd(3, c), IrrepLabel::triv());
        const long r = rat_to_long(Rat(3) * c);
        auto s = mod.singular_vectors(static_cast<int>(r));
        REQUIRE(s.dim() == 2);
        auto sub = mod.submodule_slices(s.basis, static_cast<int>(2 * r + 2));
        REQUIRE(sub.quotient.finite);
        CHECK(sub.quotient.total == r * r);
    }
}

TEST_CASE("module characters") {
    StandardModule mod(Params::odd(3, rat(1, 3)), IrrepLabel::triv());
    auto chi = mod.module_character(6);
    // identity class counts slice dimensions
    CHECK(chi.identity_dims() == std::vector<long>{1, 2, 3, 4, 5, 6, 7});
    // reflection class: 1/(1-t^2)
    const auto classes = conjugacy_classes(3);
    REQUIRE(classes[2].rep.reflection);
    for (int n = 0; n <= 6; ++n) CHECK(chi.coeffs[2][n] == Cyc(n % 2 == 0 ? 1 : 0));
    // rotation class: 1/((1-wt)(1-w^2 t)) = (1, -1, 0, 1, -1, 0, ...)
    const std::vector<int> rot{1, -1, 0, 1, -1, 0, 1};
    for (int n = 0; n <= 6; ++n) CHECK(chi.coeffs[1][n] == Cyc(rot[n]));
    // h0 offset
    CHECK(chi.h0 == rat(0));
}

TEST_CASE("quotient and L characters agree where the singular ideal is maximal") {
    StandardModule mod(Params::odd(3, rat(1, 2)), IrrepLabel::triv());
    const std::vector<ModuleVec> gens{triv_vec(3, zp(3) - zbp(3))};
    const auto q = mod.quotient_character(gens, 10);
    const auto l = mod.l_character(10);
    CHECK(compare_series(q, l).match);
    // the identity coefficients are the quotient dims
    CHECK(q.identity_dims() == std::vector<long>{1, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3});
}

TEST_CASE("character additivity for exact sequences") {
    StandardModule mod(Params::odd(3, rat(1, 2)), IrrepLabel::triv());
    const std::vector<ModuleVec> gens{triv_vec(3, zp(3) - zbp(3))};
    auto sub = mod.submodule_slices(gens, 8);
    const auto mchar = mod.module_character(8);
    const auto qchar = mod.quotient_character(gens, 8);
    // trace of the submodule = trace of M - trace of quotient; check the
    // identity class against the computed submodule dims.
    for (int n = 0; n <= 8; ++n) {
        const Cyc diff = mchar.coeffs[0][n] - qchar.coeffs[0][n];
        CHECK(diff == Cyc(sub.dims.dims[n]));
    }
}

TEST_CASE("twist symmetry of singular dimensions") {
    // dim singular(k, V, n) = dim singular(eps k, eps (x) V, n)
    const Params p = Params::even(4, rat(1, 2), rat(1, 4));
    for (const auto& eps : {IrrepLabel::sgn(), IrrepLabel::eps1(), IrrepLabel::eps2()}) {
        const Params tp = twist_params(p, eps);
        for (const auto& v : {IrrepLabel::triv(), IrrepLabel::tau(1)}) {
            StandardModule a(p, v);
            StandardModule b(tp, tensor_one_dim(eps, v, 4));
            for (int n = 1; n <= 5; ++n)
                CHECK(a.singular_vectors(n).dim() == b.singular_vectors(n).dim());
        }
    }
}

TEST_CASE("sl2 symmetry of finite-dimensional quotients") {
    // For finite-dimensional L, dims are symmetric about h-eigenvalue 0.
    StandardModule mod(Params::even(4, rat(1, 4), rat(1, 4)), IrrepLabel::triv());
    auto dims = mod.l_graded_dims(6);
    REQUIRE(dims.finite);
    CHECK(dims.total == 1);

    StandardModule mod2(Params::odd(5, rat(2, 5)), IrrepLabel::triv());
    auto d2 = mod2.l_graded_dims(10);
    REQUIRE(d2.finite);
    CHECK(d2.total == 4);
    // profile (1,2,1): symmetric about degree r-1 = 1
    CHECK(d2.dims[0] == d2.dims[2]);
}

TEST_CASE("algebra relation self-check") {
    CHECK(algebra_relation_check(Params::odd(3, rat(1, 3)), 5).pass);
    CHECK(algebra_relation_check(Params::odd(3, rat(0)), 4).pass);
    CHECK(algebra_relation_check(Params::even(4, rat(1, 4), rat(1, 4)), 5).pass);
    CHECK(algebra_relation_check(Params::even(6, rat(2, 3), rat(-1, 5)), 4).pass);
    const auto rep = algebra_relation_check(Params::odd(5, rat(-3, 7)), 4);
    CHECK(rep.pass);
    CHECK(rep.checks_run > 0);
}

TEST_CASE("dunkl commutativity on a tau module") {
    StandardModule mod(Params::even(4, rat(2, 3), rat(1, 5)), IrrepLabel::tau(1));
    for (int n = 2; n <= 5; ++n) {
        const CycMat lhs = mod.dunkl_matrix(1, n - 1) * mod.dunkl_matrix(2, n);
        const CycMat rhs = mod.dunkl_matrix(2, n - 1) * mod.dunkl_matrix(1, n);
        CHECK(lhs == rhs);
    }
}
