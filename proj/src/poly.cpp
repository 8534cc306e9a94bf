#include "weyl/poly.hpp"

#include <stdexcept>

namespace weyl {

Poly Poly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::domain_error("negative exponent");
    if (c.is_zero()) return {};
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

const Rational& Poly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator-(const Poly& a) {
    std::vector<Rational> v(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] = -a.c_[i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& a) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] = c * a.c_[i];
    return Poly(std::move(v));
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return {};
    if (k < 0) throw std::domain_error("negative shift");
    std::vector<Rational> v(static_cast<size_t>(k), Rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    return lc().inverse() * *this;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    Poly quot;
    Poly rem = a;
    const Rational lb = b.lc();
    const int db = b.degree();
    while (!rem.is_zero() && rem.degree() >= db) {
        Rational c = rem.lc() / lb;
        int k = rem.degree() - db;
        Poly term = Poly::monomial(c, k);
        quot += term;
        rem -= term * b;
    }
    return {quot, rem};
}

bool divides(const Poly& b, const Poly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return divrem(a, b).second.is_zero();
}

Rational eval(const Poly& a, const Rational& x) {
    Rational acc(0);
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly derivative(const Poly& a) {
    if (a.degree() <= 0) return {};
    std::vector<Rational> v(a.coeffs().size() - 1);
    for (size_t i = 1; i < a.coeffs().size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * a.coeffs()[i];
    return Poly(std::move(v));
}

Poly pow(const Poly& a, int e) {
    if (e < 0) throw std::domain_error("negative exponent");
    Poly acc(1);
    Poly base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly gcd_monic(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly lcm_monic(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm with zero polynomial");
    return divrem(a * b, gcd_monic(a, b)).first.monic();
}

Egcd egcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    // Invariants: r0 = u0*a + v0*b, r1 = u1*a + v1*b.
    Poly r0 = a, r1 = b;
    Poly u0(1), v0(0), u1(0), v1(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    Rational s = r0.lc().inverse();
    return {s * r0, s * u0, s * v0};
}

}  // namespace weyl
