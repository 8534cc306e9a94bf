#pragma once

#include <map>
#include <utility>
#include <vector>

#include "weyl/poly.hpp"

namespace weyl {

/// Element of the first Weyl algebra k[t,D] with D t - t D = 1, kept in
/// normal order: a finite sum of terms c * t^i * D^j with every t to the
/// left of every D. No zero coefficients are stored.
class WeylOp {
  public:
    using Key = std::pair<int, int>;  // (t exponent, D exponent)

    WeylOp() = default;
    WeylOp(long c) : WeylOp(Rational(c)) {}  // NOLINT: scalar operators
    WeylOp(const Rational& c) {              // NOLINT
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }
    explicit WeylOp(const Poly& p);  // multiplication operator

    static WeylOp monomial(const Rational& c, int i, int j);
    static WeylOp t() { return monomial(1, 1, 0); }
    static WeylOp d() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    int deg_t() const;  // kNegInfDeg for zero
    int deg_d() const;

    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    friend WeylOp operator-(const WeylOp& a);
    friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
    friend WeylOp operator*(const Rational& c, const WeylOp& a);
    friend WeylOp operator*(long c, const WeylOp& a) { return Rational(c) * a; }
    friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

    /// Coefficient polynomials a_0..a_p with d = sum a_j(t) D^j.
    std::vector<Poly> coeff_seq() const;
    static WeylOp from_coeff_seq(const std::vector<Poly>& a);
    Poly coeff_of_d(int j) const;

    /// Apply to a polynomial: sum a_j(t) p^(j).
    Poly apply(const Poly& p) const;

  private:
    std::map<Key, Rational> terms_;
    void add_term(int i, int j, const Rational& c);
    friend WeylOp sigma(const Poly& h, const WeylOp& op);
};

WeylOp commutator(const WeylOp& a, const WeylOp& b);
WeylOp pow(const WeylOp& a, int e);

/// Algebra endomorphism t -> t, D -> D - h(t); an automorphism with
/// inverse sigma(-h, .).
WeylOp sigma(const Poly& h, const WeylOp& op);

/// Whether (D + h) * op lies in b*A1, i.e. every coefficient polynomial
/// of the product is divisible by b. Left multiples of b are exactly the
/// operators with all t-coefficients divisible by b.
bool principal_coset_member(const WeylOp& op, const Poly& b, const Poly& h);

/// The operator f with D*f = b*D^(m+1), m = deg b: writing b = sum
/// beta_p t^p,  f = beta_0 D^m + sum_p beta_p (tD-1)(tD-2)...(tD-p) D^(m-p).
/// Its image on polynomials has codimension deg b.
WeylOp build_f(const Poly& b);

}  // namespace weyl
