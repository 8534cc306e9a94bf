#pragma once

#include "weyl/poly.hpp"
#include "weyl/rng.hpp"
#include "weyl/subspace.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

Rational random_rational(Rng& rng, long max_num = 9, long max_den = 3);
Rational random_nonzero_rational(Rng& rng, long max_num = 9, long max_den = 3);

Poly random_poly(Rng& rng, int max_deg, long max_num = 9, long max_den = 3);
Poly random_nonzero_poly(Rng& rng, int max_deg, long max_num = 9, long max_den = 3);
Poly random_monic_poly(Rng& rng, int deg, long max_num = 9, long max_den = 3);

WeylOp random_weyl_op(Rng& rng, int max_t, int max_d, int max_terms = 5);
WeylOp random_nonzero_weyl_op(Rng& rng, int max_t, int max_d, int max_terms = 5);

/// Random subspace with the given modulus: a few residues plus the ideal.
Subspace random_subspace_mod(Rng& rng, const Poly& modulus, int max_gens = 3);

/// Random member of V: mix of basis elements plus a multiple of the modulus.
Poly random_member(Rng& rng, const Subspace& V, int extra_deg = 2);

}  // namespace weyl
