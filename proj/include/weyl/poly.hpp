#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Degree of the zero polynomial. Sits far below every true degree and
/// stays negative under the small shifts arithmetic applies to degrees.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 2;

/// Dense univariate polynomial over Rational in the variable t.
/// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class Poly {
  public:
    Poly() = default;
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT: implicit constants
    Poly(const Rational& c) {            // NOLINT
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const Rational& c, int k);
    static Poly t(int k = 1) { return monomial(1, k); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    int degree() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[i];
    }
    const Rational& lc() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& a);
    friend Poly operator*(long c, const Poly& a) { return Rational(c) * a; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Multiply by t^k.
    Poly shifted(int k) const;
    Poly monic() const;

  private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Quotient and remainder of a by b, exact; throws "zero divisor" on b = 0.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);
Rational eval(const Poly& a, const Rational& x);
Poly derivative(const Poly& a);
Poly pow(const Poly& a, int e);

/// Monic gcd; error when both arguments are zero.
Poly gcd_monic(Poly a, Poly b);
Poly lcm_monic(const Poly& a, const Poly& b);

struct Egcd {
    Poly g;  // monic gcd
    Poly u;  // g = u*a + v*b
    Poly v;
};
Egcd egcd(const Poly& a, const Poly& b);

}  // namespace weyl
