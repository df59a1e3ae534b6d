#include <doctest.h>

#include <random>

#include "chered/cyclotomic.hpp"

using namespace chered;

namespace {

Cyc random_cyc(long order, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    std::vector<Rat> c(euler_phi(order));
    for (auto& x : c) x = rat(num(rng), den(rng));
    return Cyc::from_coeffs(order, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<mpz_class>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    CHECK(euler_phi(20) == 8);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("roots of unity reduce canonically") {
    // zeta_4^2 = -1
    CHECK(Cyc::root_of_unity(4, 2) == Cyc(-1));
    // zeta_3^0 = 1
    CHECK(Cyc::root_of_unity(3, 0) == Cyc(1));
    // 1 + zeta_3 + zeta_3^2 = 0
    CHECK(Cyc::root_of_unity(3, 1) + Cyc::root_of_unity(3, 2) == Cyc(-1));
    // zeta_N^N = 1, Phi_N(zeta_N) = 0 via the N-th power
    CHECK(Cyc::root_of_unity(12, 12) == Cyc(1));
    CHECK(Cyc::root_of_unity(5, 3) == Cyc::root_of_unity(5, -2));
}

TEST_CASE("field operations") {
    const Cyc z5 = Cyc::root_of_unity(5, 1);
    CHECK(z5 * Cyc::root_of_unity(5, 4) == Cyc(1));
    CHECK(Cyc::root_of_unity(8, 1) - Cyc::root_of_unity(8, 1) == Cyc());
    // (1 + z3)(1 + z3^2) = 1, using 1 + z3 + z3^2 = 0
    const Cyc z3 = Cyc::root_of_unity(3, 1);
    CHECK((Cyc(1) + z3) * (Cyc(1) + z3 * z3) == Cyc(1));
}

TEST_CASE("mixed-order arithmetic lands at the lcm") {
    const Cyc a = Cyc::root_of_unity(4, 1);
    const Cyc b = Cyc::root_of_unity(3, 1);
    const Cyc p = a * b;
    CHECK(p.order() == 12);
    CHECK(p == Cyc::root_of_unity(12, 7));  // 1/4 + 1/3 = 7/12
}

TEST_CASE("inverses") {
    CHECK(Cyc(2).inverse() == Cyc(rat(1, 2)));
    CHECK(Cyc::root_of_unity(5, 1).inverse() == Cyc::root_of_unity(5, 4));
    const Cyc a = Cyc(1) + Cyc::root_of_unity(5, 1);
    CHECK(a * a.inverse() == Cyc(1));
    CHECK_THROWS_AS(Cyc().inverse(), std::domain_error);

    std::mt19937_64 rng(20240811);
    for (long order : {3L, 4L, 5L, 8L, 12L, 20L}) {
        int tested = 0;
        while (tested < 100) {
            const Cyc x = random_cyc(order, rng);
            if (x.is_zero()) continue;
            ++tested;
            CHECK(x * x.inverse() == Cyc(1));
        }
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(7);
    for (long order : {3L, 8L, 12L}) {
        for (int it = 0; it < 25; ++it) {
            const Cyc a = random_cyc(order, rng);
            const Cyc b = random_cyc(order, rng);
            const Cyc c = random_cyc(order, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("lift then compare is the identity on canonical forms") {
    std::mt19937_64 rng(99);
    for (long order : {3L, 4L, 6L}) {
        const Cyc x = random_cyc(order, rng);
        const Cyc lifted = x.lifted(order * 4);
        CHECK(lifted == x);
        CHECK(lifted.order() == order * 4);
    }
}

TEST_CASE("rationality and integrality predicates") {
    CHECK(Cyc(rat(3, 2)).is_rational());
    CHECK(Cyc(rat(3, 2)).rational_value() == rat(3, 2));
    CHECK_FALSE(Cyc::root_of_unity(5, 1).is_rational());
    CHECK(Cyc::root_of_unity(5, 1).is_integral());
    CHECK_FALSE(Cyc(rat(1, 2)).is_integral());
    // zeta_5 + zeta_5^4 is irrational but integral
    const Cyc golden = Cyc::root_of_unity(5, 1) + Cyc::root_of_unity(5, 4);
    CHECK_FALSE(golden.is_rational());
    CHECK(golden.is_integral());
}
