#pragma once

#include "weyl/poly.hpp"

namespace weyl {

/// Reduced rational function num/den with monic denominator.
class RatFunc {
  public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(const Poly& num, const Poly& den);
    RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    Poly num_;
    Poly den_;
};

}  // namespace weyl
