#include "weyl/random_gen.hpp"

namespace weyl {

Rational random_rational(Rng& rng, long max_num, long max_den) {
    return Rational(rng.uniform(-max_num, max_num), rng.uniform(1, max_den));
}

Rational random_nonzero_rational(Rng& rng, long max_num, long max_den) {
    while (true) {
        Rational r = random_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

Poly random_poly(Rng& rng, int max_deg, long max_num, long max_den) {
    int deg = static_cast<int>(rng.uniform(-1, max_deg));  // -1 = zero polynomial
    if (deg < 0) return {};
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = random_rational(rng, max_num, max_den);
    c.back() = random_nonzero_rational(rng, max_num, max_den);
    return Poly(std::move(c));
}

Poly random_nonzero_poly(Rng& rng, int max_deg, long max_num, long max_den) {
    int deg = static_cast<int>(rng.uniform(0, max_deg));
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = random_rational(rng, max_num, max_den);
    c.back() = random_nonzero_rational(rng, max_num, max_den);
    return Poly(std::move(c));
}

Poly random_monic_poly(Rng& rng, int deg, long max_num, long max_den) {
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = random_rational(rng, max_num, max_den);
    c.back() = Rational(1);
    return Poly(std::move(c));
}

WeylOp random_weyl_op(Rng& rng, int max_t, int max_d, int max_terms) {
    WeylOp op;
    int n = static_cast<int>(rng.uniform(0, max_terms));
    for (int k = 0; k < n; ++k) {
        int i = static_cast<int>(rng.uniform(0, max_t));
        int j = static_cast<int>(rng.uniform(0, max_d));
        op += WeylOp::monomial(random_rational(rng), i, j);
    }
    return op;
}

WeylOp random_nonzero_weyl_op(Rng& rng, int max_t, int max_d, int max_terms) {
    while (true) {
        WeylOp op = random_weyl_op(rng, max_t, max_d, max_terms);
        if (!op.is_zero()) return op;
    }
}

Subspace random_subspace_mod(Rng& rng, const Poly& modulus, int max_gens) {
    std::vector<Poly> gens;
    int n = static_cast<int>(rng.uniform(0, max_gens));
    for (int k = 0; k < n; ++k) gens.push_back(random_poly(rng, std::max(0, modulus.degree() - 1)));
    return Subspace::make(modulus, gens);
}

Poly random_member(Rng& rng, const Subspace& V, int extra_deg) {
    Poly p;
    for (const auto& b : V.basis())
        if (rng.chance(50)) p += random_rational(rng, 4, 2) * b;
    p += V.modulus() * random_poly(rng, extra_deg, 4, 2);
    return p;
}

}  // namespace weyl
