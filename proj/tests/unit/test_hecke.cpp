#include <doctest.h>

#include <random>

#include "chered/hecke.hpp"

using namespace chered;

TEST_CASE("one-dimensional representations") {
    const Params p = Params::odd(3, rat(1, 10));
    const Cyc q = Cyc::root_of_unity(10, -1);

    const auto sgn = build_rep(3, IrrepLabel::sgn(), p);
    CHECK(sgn.t1.at(0, 0) == -q);
    CHECK(sgn.t2.at(0, 0) == -q);
    CHECK(quadratic_check(sgn));
    CHECK(braid_check(sgn));

    const auto triv = build_rep(3, IrrepLabel::triv(), p);
    CHECK(triv.t1.at(0, 0) == Cyc(1));

    // even d: eps1 is +1 on the T1 (odd, k1) class
    const Params pe = Params::even(4, rat(1, 3), rat(1, 5));
    const auto e1 = build_rep(4, IrrepLabel::eps1(), pe);
    CHECK(e1.t1.at(0, 0) == Cyc(1));
    CHECK(e1.t2.at(0, 0) == -Cyc::root_of_unity(5, -1));
    const auto e2 = build_rep(4, IrrepLabel::eps2(), pe);
    CHECK(e2.t1.at(0, 0) == -Cyc::root_of_unity(3, -1));
    CHECK(e2.t2.at(0, 0) == Cyc(1));
}

TEST_CASE("integer parameters degenerate to the group algebra") {
    const Params p = Params::odd(3, rat(2));
    const auto triv = build_rep(3, IrrepLabel::triv(), p);
    CHECK(triv.q1 == Cyc(1));
    CHECK(triv.t1.at(0, 0) == Cyc(1));
    const auto tau = build_rep(3, IrrepLabel::tau(1), p);
    CHECK(quadratic_check(tau));
    CHECK(braid_check(tau));
}

TEST_CASE("tau matrices satisfy the product constraint") {
    // d = 3, c = 1/10: c_l c_l' = q (2 + w + w^2) = q
    const Params p = Params::odd(3, rat(1, 10));
    const auto rep = build_rep(3, IrrepLabel::tau(1), p);
    const Cyc q = Cyc::root_of_unity(10, -1);
    CHECK(rep.t1.at(1, 0) * rep.t2.at(0, 1) == q);
    CHECK(quadratic_check(rep));
    CHECK(braid_check(rep));
}

TEST_CASE("a perturbed off-diagonal entry breaks the braid relation") {
    const Params p = Params::odd(3, rat(1, 10));
    auto rep = build_rep(3, IrrepLabel::tau(1), p);
    rep.t2.at(0, 1) += Cyc(1);
    CHECK(quadratic_check(rep));  // quadratic relations don't see the gauge
    CHECK_FALSE(braid_check(rep));
}

TEST_CASE("relations hold on random rational parameters") {
    std::mt19937_64 rng(20250809);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 8);
    for (int d : {3, 4, 5}) {
        int built = 0;
        while (built < 12) {
            Params p = (d % 2 == 1) ? Params::odd(d, rat(num(rng), den(rng)))
                                    : Params::even(d, rat(num(rng), den(rng)),
                                                   rat(num(rng), den(rng)));
            for (const auto& v : list_irreps(d)) {
                try {
                    const auto rep = build_rep(d, v, p);
                    CHECK(quadratic_check(rep));
                    CHECK(braid_check(rep));
                } catch (const HeckeDegenerateError&) {
                    // the explicit 2x2 form is refused on its degenerate loci
                }
            }
            ++built;
        }
    }
}

TEST_CASE("intertwiner dimensions at generic points") {
    // d = 3, c = 1/10: Hom(sgn, tau_1) = 0
    const Params p = Params::odd(3, rat(1, 10));
    const auto sgn = build_rep(3, IrrepLabel::sgn(), p);
    const auto tau = build_rep(3, IrrepLabel::tau(1), p);
    CHECK(intertwiner_dim(sgn, tau) == 0);
    CHECK(intertwiner_dim(tau, sgn) == 0);
    CHECK(intertwiner_dim(sgn, sgn) == 1);
    CHECK(intertwiner_dim(tau, tau) == 1);

    // d = 4 generic: Hom(sgn, tau_1) = 0
    const Params pe = Params::even(4, rat(1, 3), rat(1, 5));
    const auto sgn4 = build_rep(4, IrrepLabel::sgn(), pe);
    const auto tau4 = build_rep(4, IrrepLabel::tau(1), pe);
    CHECK(intertwiner_dim(sgn4, tau4) == 0);
    CHECK(intertwiner_dim(build_rep(4, IrrepLabel::eps1(), pe), tau4) == 0);
    CHECK(intertwiner_dim(build_rep(4, IrrepLabel::eps2(), pe), tau4) == 0);
}

TEST_CASE("intertwiners appear exactly on the exceptional loci") {
    // d = 4, (5/4, 3/4): R' = 1 = m - l for l = 1, so M(tau_1) acquires an
    // eps2 submodule and Hom(eps2, tau_1) jumps to 1.
    const Params p = Params::even(4, rat(5, 4), rat(3, 4));
    const auto tau = build_rep(4, IrrepLabel::tau(1), p);
    CHECK(quadratic_check(tau));
    CHECK(braid_check(tau));
    CHECK(intertwiner_dim(build_rep(4, IrrepLabel::eps2(), p), tau) == 1);
    CHECK(intertwiner_dim(build_rep(4, IrrepLabel::sgn(), p), tau) == 0);

    // mirrored point (3/4, 5/4): R' = -1 = -(m-l), eps1 side
    const Params pm = Params::even(4, rat(3, 4), rat(5, 4));
    const auto taum = build_rep(4, IrrepLabel::tau(1), pm);
    CHECK(intertwiner_dim(build_rep(4, IrrepLabel::eps1(), pm), taum) == 1);
    CHECK(intertwiner_dim(build_rep(4, IrrepLabel::eps2(), pm), taum) == 0);

    // one-dimensional pair on a half-integer line: k1 = 3/2 gives q1 = -1
    // and eps2 collides with triv.
    const Params ph = Params::even(4, rat(3, 2), rat(1, 4));
    CHECK(intertwiner_dim(build_rep(4, IrrepLabel::eps2(), ph),
                          build_rep(4, IrrepLabel::triv(), ph)) == 1);
    CHECK(intertwiner_dim(build_rep(4, IrrepLabel::eps1(), ph),
                          build_rep(4, IrrepLabel::triv(), ph)) == 0);
}

TEST_CASE("the builder refuses the degenerate explicit form") {
    // odd d: c = n +- l/d with r > 0
    CHECK_THROWS_AS(build_rep(3, IrrepLabel::tau(1), Params::odd(3, rat(1, 3))),
                    HeckeDegenerateError);
    CHECK_THROWS_AS(build_rep(3, IrrepLabel::tau(1), Params::odd(3, rat(2, 3))),
                    HeckeDegenerateError);
    // q = -1
    CHECK_THROWS_AS(build_rep(3, IrrepLabel::tau(1), Params::odd(3, rat(1, 2))),
                    HeckeDegenerateError);
    // even d: R = 1 = l on E+
    CHECK_THROWS_AS(build_rep(4, IrrepLabel::tau(1), Params::even(4, rat(1, 4), rat(1, 4))),
                    HeckeDegenerateError);
    // negative r is not refused: the explicit form carries the triv
    // submodule that matches the module side.
    const auto rep = build_rep(3, IrrepLabel::tau(1), Params::odd(3, rat(-1, 3)));
    CHECK(braid_check(rep));
    CHECK(intertwiner_dim(build_rep(3, IrrepLabel::triv(), Params::odd(3, rat(-1, 3))), rep) == 1);
}

TEST_CASE("intertwiner dimensions are gauge invariant off the zero locus") {
    const Params p = Params::odd(5, rat(1, 7));
    const auto a = build_rep(5, IrrepLabel::tau(1), p);
    const auto b = build_rep_gauged(5, IrrepLabel::tau(1), p, Cyc(rat(7, 2)));
    for (const auto& v : list_irreps(5)) {
        if (v.is_tau()) continue;
        const auto one = build_rep(5, v, p);
        CHECK(intertwiner_dim(one, a) == intertwiner_dim(one, b));
        CHECK(intertwiner_dim(a, one) == intertwiner_dim(b, one));
    }
    CHECK(intertwiner_dim(a, b) == 1);  // equivalent representations
}

TEST_CASE("symmetry of hom dimensions between irreducible pairs") {
    const Params p = Params::even(8, rat(1, 3), rat(1, 5));
    const auto tau1 = build_rep(8, IrrepLabel::tau(1), p);
    const auto tau3 = build_rep(8, IrrepLabel::tau(3), p);
    CHECK(intertwiner_dim(tau1, tau3) == intertwiner_dim(tau3, tau1));
    const auto sgn = build_rep(8, IrrepLabel::sgn(), p);
    CHECK(intertwiner_dim(sgn, tau1) == intertwiner_dim(tau1, sgn));
}
