#include "weyl/ratfunc.hpp"

#include <stdexcept>

namespace weyl {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) {
        num_ = Poly(0);
        den_ = Poly(1);
        return;
    }
    Poly g = gcd_monic(num, den);
    num_ = divrem(num, g).first;
    den_ = divrem(den, g).first;
    Rational s = den_.lc().inverse();
    num_ = s * num_;
    den_ = s * den_;
}

}  // namespace weyl
