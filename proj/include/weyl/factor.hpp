#pragma once

#include <utility>
#include <vector>

#include "weyl/poly.hpp"

namespace weyl {

/// Monic b / gcd(b, b'); for a product of linear powers this is the
/// product of the distinct linear factors.
Poly squarefree_part(const Poly& b);

struct LinearFactor {
    Rational root;
    int multiplicity;
};

struct LinearSplit {
    Rational lead;                      // leading coefficient of the input
    std::vector<LinearFactor> factors;  // distinct roots, ascending
    Poly remainder;                     // monic, no rational roots
};

/// b = lead * prod (t - root_i)^mult_i * remainder, exactly.
LinearSplit rational_linear_split(const Poly& b);

/// Reassemble the factorization (test helper and postcondition check).
Poly reassemble(const LinearSplit& s);

enum class Certificate { Proven, Unknown };

/// Sound certificate of irreducibility over the rationals: Proven only
/// when established (degree <= 3 without rational root, or irreducible
/// modulo a small prime not dividing the leading coefficient, checked by
/// exhaustive factor search). Never Proven for a reducible input.
Certificate irreducibility_certificate(const Poly& q);

/// All rational roots of b (b != 0), with multiplicities.
std::vector<LinearFactor> rational_roots(const Poly& b);

}  // namespace weyl
