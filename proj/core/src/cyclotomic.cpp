#include "chered/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chered {

namespace {

// Exact division of integer polynomials (ascending coefficients), used to
// peel lower-order cyclotomic factors off x^n - 1.
std::vector<mpz_class> poly_divexact(const std::vector<mpz_class>& num,
                                     const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    const size_t dd = den.size() - 1;
    if (rem.size() < den.size()) throw std::logic_error("poly_divexact: degree underflow");
    std::vector<mpz_class> quot(rem.size() - dd, mpz_class(0));
    for (size_t k = rem.size(); k-- > dd;) {
        // den is monic in every use here (cyclotomic polynomials).
        const size_t qi = k - dd;
        mpz_class q = rem[k];
        quot[qi] = q;
        if (q == 0) continue;
        for (size_t j = 0; j <= dd; ++j) rem[qi + j] -= q * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return quot;
}

std::vector<mpz_class> cyclotomic_poly_impl(long n, std::map<long, std::vector<mpz_class>>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1
    std::vector<mpz_class> acc(n + 1, mpz_class(0));
    acc[0] = -1;
    acc[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        acc = poly_divexact(acc, cyclotomic_poly_impl(d, memo));
    }
    memo[n] = acc;
    return acc;
}

// Per-order reduction data: rows[k] is x^k mod Phi_n in the power basis,
// for k = 0 .. max(n, 2*phi-1) - 1.  Enough for products of reduced
// elements and for lifting from any divisor order.
struct OrderTable {
    long n = 1;
    long phi = 1;
    std::vector<std::vector<Rat>> rows;
};

const OrderTable& order_table(long n) {
    static std::mutex mu;
    static std::map<long, OrderTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    static std::map<long, std::vector<mpz_class>> phi_memo;
    const std::vector<mpz_class> cp = cyclotomic_poly_impl(n, phi_memo);
    OrderTable t;
    t.n = n;
    t.phi = static_cast<long>(cp.size()) - 1;

    // x^phi = -(lower part of Phi_n), Phi_n monic.
    std::vector<Rat> top(t.phi);
    for (long i = 0; i < t.phi; ++i) top[i] = Rat(-cp[i]);

    const long nrows = std::max(n, 2 * t.phi - 1);
    t.rows.resize(nrows);
    for (long k = 0; k < nrows; ++k) {
        if (k < t.phi) {
            t.rows[k].assign(t.phi, Rat(0));
            t.rows[k][k] = 1;
            continue;
        }
        // x^k = x * x^(k-1), then fold the overflow coefficient.
        const std::vector<Rat>& prev = t.rows[k - 1];
        std::vector<Rat> row(t.phi, Rat(0));
        for (long i = 0; i + 1 < t.phi; ++i) row[i + 1] = prev[i];
        const Rat& carry = prev[t.phi - 1];
        if (carry != 0)
            for (long i = 0; i < t.phi; ++i) row[i] += carry * top[i];
        t.rows[k] = std::move(row);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

std::vector<Rat> reduce_powers(const OrderTable& t, const std::vector<Rat>& by_power) {
    std::vector<Rat> out(t.phi, Rat(0));
    for (size_t k = 0; k < by_power.size(); ++k) {
        if (by_power[k] == 0) continue;
        const auto& row = t.rows[k];
        for (long i = 0; i < t.phi; ++i) out[i] += by_power[k] * row[i];
    }
    return out;
}

}  // namespace

long euler_phi(long n) { return order_table(n).phi; }

std::vector<mpz_class> cyclotomic_polynomial(long n) {
    static std::mutex mu;
    static std::map<long, std::vector<mpz_class>> memo;
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_poly_impl(n, memo);
}

Cyc Cyc::root_of_unity(long order, long k) {
    if (order < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
    k %= order;
    if (k < 0) k += order;
    const OrderTable& t = order_table(order);
    Cyc r;
    r.order_ = order;
    r.c_ = t.rows[k];
    return r;
}

Cyc Cyc::from_coeffs(long order, std::vector<Rat> coeffs) {
    if (static_cast<long>(coeffs.size()) != euler_phi(order))
        throw std::invalid_argument("Cyc::from_coeffs: wrong length");
    Cyc r;
    r.order_ = order;
    r.c_ = std::move(coeffs);
    return r;
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyc::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyc::rational_value: " + str() + " is irrational");
    return c_[0];
}

bool Cyc::is_integral() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

Cyc Cyc::lifted(long m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::invalid_argument("Cyc::lifted: target order not a multiple");
    const OrderTable& t = order_table(m);
    const long e = m / order_;
    std::vector<Rat> by_power(static_cast<size_t>(t.rows.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) by_power[i * e] = c_[i];
    Cyc r;
    r.order_ = m;
    r.c_ = reduce_powers(t, by_power);
    return r;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    const long m = std::lcm(order_, o.order_);
    if (order_ != m) *this = lifted(m);
    if (o.order_ != m) {
        const Cyc ol = o.lifted(m);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += ol.c_[i];
    } else {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    }
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    const long m = std::lcm(order_, o.order_);
    if (order_ != m) *this = lifted(m);
    if (o.order_ != m) {
        const Cyc ol = o.lifted(m);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= ol.c_[i];
    } else {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    }
    return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    const long m = std::lcm(a.order_, b.order_);
    const Cyc al = a.lifted(m);
    const Cyc bl = b.lifted(m);
    const OrderTable& t = order_table(m);
    std::vector<Rat> conv(2 * t.phi - 1, Rat(0));
    for (long i = 0; i < t.phi; ++i) {
        if (al.c_[i] == 0) continue;
        for (long j = 0; j < t.phi; ++j) {
            if (bl.c_[j] == 0) continue;
            conv[i + j] += al.c_[i] * bl.c_[j];
        }
    }
    Cyc r;
    r.order_ = m;
    r.c_ = reduce_powers(t, conv);
    return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    *this = *this * o;
    return *this;
}

// Extended Euclid in Q[x] against Phi_N; the gcd is a nonzero constant
// because Phi_N is irreducible over Q.
Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc::inverse: division by zero");
    if (is_rational()) return Cyc(Rat(1) / c_[0]);

    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1L;
    };

    const auto phi_int = cyclotomic_polynomial(order_);
    Poly r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
    Poly r1(c_.begin(), c_.end());
    Poly s0{Rat(0)}, s1{Rat(1)};  // s tracks the coefficient of this element

    while (true) {
        const long d1 = deg(r1);
        if (d1 < 0) throw std::logic_error("Cyc::inverse: zero remainder before unit gcd");
        if (d1 == 0) break;
        // r0 = q*r1 + r2
        Poly rem = r0;
        Poly quot(std::max<long>(deg(r0) - d1 + 1, 1), Rat(0));
        while (deg(rem) >= d1) {
            const long dr = deg(rem);
            const Rat q = rem[dr] / r1[d1];
            quot[dr - d1] += q;
            for (long i = 0; i <= d1; ++i) rem[dr - d1 + i] -= q * r1[i];
        }
        Poly s2 = s0;
        s2.resize(std::max(s0.size(), quot.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < quot.size(); ++i) {
            if (quot[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= quot[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }

    const Rat unit = r1[0];
    const OrderTable& t = order_table(order_);
    while (!s1.empty() && s1.back() == 0) s1.pop_back();
    if (s1.size() > static_cast<size_t>(t.rows.size()))
        throw std::logic_error("Cyc::inverse: Bezout coefficient degree overflow");
    s1.resize(t.rows.size(), Rat(0));
    std::vector<Rat> out = reduce_powers(t, s1);
    for (auto& x : out) x /= unit;
    return from_coeffs(order_, std::move(out));
}

bool Cyc::operator==(const Cyc& o) const {
    if (order_ == o.order_) return c_ == o.c_;
    const long m = std::lcm(order_, o.order_);
    return lifted(m).c_ == o.lifted(m).c_;
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit_coeff = (a == 1) && i > 0;
        if (!unit_coeff) os << rat_str(a);
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "w" << order_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::complex<double> Cyc::to_complex() const {
    std::complex<double> z = 0;
    const double two_pi = 6.283185307179586476925286766559;
    for (size_t i = 0; i < c_.size(); ++i) {
        const double a = c_[i].get_d();
        const double arg = two_pi * static_cast<double>(i) / static_cast<double>(order_);
        z += a * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

}  // namespace chered
