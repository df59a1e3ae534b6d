#pragma once

#include <complex>
#include <string>
#include <vector>

#include "chered/rational.hpp"

namespace chered {

// An element of Q(zeta_N), stored as the coefficient vector of the power
// basis {1, z, ..., z^(phi(N)-1)} modulo the N-th cyclotomic polynomial.
// The representation is canonical: two values at the same order are equal
// iff their coefficient vectors are equal.  Arithmetic on mixed orders
// lifts both operands to order lcm(N1, N2) first.
//
// Values are immutable after construction and safe to share across threads.
class Cyc {
  public:
    // Zero at order 1.
    Cyc() : order_(1), c_(1, Rat(0)) {}

    // Rational embedded at order 1.
    explicit Cyc(const Rat& q) : order_(1), c_(1, q) {}
    explicit Cyc(long n) : order_(1), c_(1, Rat(n)) {}

    // zeta_N^k, reduced.
    static Cyc root_of_unity(long order, long k);

    // Build from raw power-basis coefficients (size phi(order)).
    static Cyc from_coeffs(long order, std::vector<Rat> coeffs);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rat rational_value() const;
    // True when every power-basis coordinate is a rational integer, i.e.
    // the value lies in Z[zeta_N].
    bool is_integral() const;

    // Same value in Q(zeta_M); requires order() | M.
    Cyc lifted(long m) const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(const Cyc& a, const Cyc& b);

    // Exact inverse; throws std::domain_error on zero.
    Cyc inverse() const;
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // Power-basis rendering, e.g. "1/2*w8^3 - 1" (w8 = primitive 8th root).
    std::string str() const;

    // Debug printer only; carries no contract.
    std::complex<double> to_complex() const;

  private:
    long order_;
    std::vector<Rat> c_;
};

inline Cyc operator*(const Rat& a, const Cyc& b) { return Cyc(a) * b; }

// phi(n) and the n-th cyclotomic polynomial (monic, ascending integer
// coefficients); exposed for tests.
long euler_phi(long n);
std::vector<mpz_class> cyclotomic_polynomial(long n);

}  // namespace chered
