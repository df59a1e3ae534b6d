#include <doctest.h>

#include <random>

#include "chered/polyalg.hpp"

using namespace chered;

namespace {

BiPoly z_pow(int a) { return BiPoly::monomial(a, 0, Cyc(1)); }
BiPoly zb_pow(int b) { return BiPoly::monomial(0, b, Cyc(1)); }

BiPoly random_poly(int d, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<long> pw(0, d - 1);
    BiPoly f;
    for (int t = 0; t < 4; ++t) {
        const int a = deg(rng), b = deg(rng);
        f.add_term({a, b}, Cyc(coeff(rng)) * Cyc::root_of_unity(d, pw(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("products") {
    const BiPoly z = z_pow(1), zb = zb_pow(1);
    CHECK(poly_mul(z - zb, z + zb) == z_pow(2) - zb_pow(2));
    std::mt19937_64 rng(11);
    const BiPoly f = random_poly(5, 3, rng);
    CHECK(poly_mul(f, BiPoly::constant(Cyc(1))) == f);

    // (z - w3 zb)(z - w3^2 zb)(z - zb) = z^3 - zb^3
    const Cyc w = Cyc::root_of_unity(3, 1);
    const BiPoly lin1 = z - zb.scaled(w);
    const BiPoly lin2 = z - zb.scaled(w * w);
    CHECK(poly_mul(poly_mul(lin1, lin2), z - zb) == z_pow(3) - zb_pow(3));
}

TEST_CASE("group action on coordinates") {
    const int d = 3;
    const BiPoly z = z_pow(1), zb = zb_pow(1);
    const GroupElement s1 = GroupElement::make_reflection(1, d);
    CHECK(apply_group(s1, z, d) == zb.scaled(Cyc::root_of_unity(3, 1)));

    // r = s2 s1 acts on z by w^{-1} and on zbar by w.
    const GroupElement r = group_mul(GroupElement::make_reflection(2, d),
                                     GroupElement::make_reflection(1, d), d);
    CHECK(r == GroupElement::rotation(1, d));
    CHECK(apply_group(r, z, d) == z.scaled(Cyc::root_of_unity(3, -1)));
    CHECK(apply_group(r, zb, d) == zb.scaled(Cyc::root_of_unity(3, 1)));

    // s_j (z^3 - zb^3) = -(z^3 - zb^3) for d = 3
    const BiPoly g = z_pow(3) - zb_pow(3);
    for (int j = 0; j < 3; ++j)
        CHECK(apply_group(GroupElement::make_reflection(j, d), g, d) == -g);
}

TEST_CASE("action is a group action and preserves degree") {
    std::mt19937_64 rng(13);
    for (int d : {3, 4, 5, 6, 8}) {
        const BiPoly f = random_poly(d, 4, rng);
        for (const auto& g : all_elements(d))
            for (const auto& h : all_elements(d)) {
                const BiPoly lhs = apply_group(g, apply_group(h, f, d), d);
                const BiPoly rhs = apply_group(group_mul(g, h, d), f, d);
                CHECK(lhs == rhs);
            }
        const BiPoly img = apply_group(GroupElement::make_reflection(1, d), f, d);
        CHECK(img.degree() == f.degree());
    }
}

TEST_CASE("exact division by linear forms") {
    const BiPoly z = z_pow(1), zb = zb_pow(1);
    const Cyc w3 = Cyc::root_of_unity(3, 1);

    // (z^2 - w3^2 zb^2) / (z - w3 zb) = z + w3 zb
    const BiPoly f = z_pow(2) - zb_pow(2).scaled(w3 * w3);
    CHECK(exact_divide_linear(f, z - zb.scaled(w3)) == z + zb.scaled(w3));

    CHECK(exact_divide_linear(BiPoly::zero(), z - zb) == BiPoly::zero());

    // ((1 - s_j) z^2) / (z - w^j zb) = z + w^j zb
    for (int d : {3, 4, 5}) {
        for (int j = 0; j < d; ++j) {
            const Cyc wj = Cyc::root_of_unity(d, j);
            const BiPoly num = z_pow(2) - apply_group(GroupElement::make_reflection(j, d), z_pow(2), d);
            CHECK(exact_divide_linear(num, z - zb.scaled(wj)) == z + zb.scaled(wj));
        }
    }

    CHECK_THROWS_AS(exact_divide_linear(z_pow(2) + BiPoly::constant(Cyc(1)), z - zb),
                    std::domain_error);
}

TEST_CASE("division round-trips against multiplication") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
        const BiPoly q = random_poly(4, 3, rng);
        const BiPoly alpha = z_pow(1) - zb_pow(1).scaled(Cyc::root_of_unity(4, it % 4));
        CHECK(exact_divide_linear(poly_mul(q, alpha), alpha) == q);
    }
    // zbar-only divisor exercises the other branch
    const BiPoly alpha = zb_pow(1).scaled(Cyc(2));
    const BiPoly q = z_pow(2) + zb_pow(1).scaled(Cyc(3));
    CHECK(exact_divide_linear(poly_mul(q, alpha), alpha) == q);
}

TEST_CASE("derivatives commute and lower degree by one") {
    std::mt19937_64 rng(19);
    const BiPoly f = random_poly(5, 5, rng);
    CHECK(d_dz(d_dzbar(f)) == d_dzbar(d_dz(f)));
    const BiPoly fz = d_dz(z_pow(3));
    CHECK(fz == z_pow(2).scaled(Cyc(3)));
    const BiPoly g = poly_mul(z_pow(2), zb_pow(1));
    CHECK(d_dzbar(g).degree() == g.degree() - 1);
}

TEST_CASE("slice basis order") {
    CHECK(slice_basis(0) == std::vector<Bidegree>{{0, 0}});
    CHECK(slice_basis(2) == std::vector<Bidegree>{{2, 0}, {1, 1}, {0, 2}});
    for (int n : {0, 1, 5, 9}) CHECK(slice_basis(n).size() == static_cast<size_t>(n) + 1);
}

TEST_CASE("polynomial rendering is deterministic") {
    const BiPoly f = z_pow(2) - zb_pow(2) + BiPoly::monomial(1, 1, Cyc::root_of_unity(4, 1));
    CHECK(f.str() == "z^2 + w4*z*zb - zb^2");
}
