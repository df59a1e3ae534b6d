#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chered/cyclotomic.hpp"
#include "chered/group_element.hpp"

namespace chered {

// Monomial bidegree (a, b) <-> z^a zbar^b.
struct Bidegree {
    int a = 0;
    int b = 0;

    int total() const { return a + b; }
    bool operator==(const Bidegree&) const = default;

    // Sorted by total degree, then z-degree descending, matching the slice
    // basis order z^n, z^{n-1} zbar, ..., zbar^n used for all matrices.
    bool operator<(const Bidegree& o) const {
        if (total() != o.total()) return total() < o.total();
        return a > o.a;
    }
};

// Polynomial in the two commuting coordinates z, zbar over Q(zeta), in
// canonical sparse form: no zero coefficients are stored, and iteration
// order is the deterministic Bidegree order above.
class BiPoly {
  public:
    BiPoly() = default;
    static BiPoly monomial(int a, int b, const Cyc& coeff);
    static BiPoly constant(const Cyc& c) { return monomial(0, 0, c); }
    static BiPoly zero() { return {}; }

    const std::map<Bidegree, Cyc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Cyc coeff(int a, int b) const;
    void add_term(const Bidegree& m, const Cyc& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
    friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }

    BiPoly scaled(const Cyc& s) const;
    BiPoly homogeneous_part(int n) const;

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    std::map<Bidegree, Cyc> terms_;
};

BiPoly poly_mul(const BiPoly& f, const BiPoly& g);

// Group action on functions, (g.f)(p) = f(g^{-1} p):
//   s_j . z = w^j zbar,   s_j . zbar = w^{-j} z,
//   r   . z = w^{-1} z,   r   . zbar = w zbar.
BiPoly apply_group(const GroupElement& g, const BiPoly& f, int d);

BiPoly d_dz(const BiPoly& f);
BiPoly d_dzbar(const BiPoly& f);

// Exact division by a homogeneous linear form alpha = c1 z + c2 zbar.
// Throws std::domain_error when the division leaves a remainder; in the
// Dunkl pipeline that signals a convention bug upstream, never data.
BiPoly exact_divide_linear(const BiPoly& f, const BiPoly& alpha);

// The n+1 monomials z^a zbar^{n-a}, a = n .. 0.  This order is the basis
// contract for every matrix computed on a graded slice.
std::vector<Bidegree> slice_basis(int n);

}  // namespace chered
