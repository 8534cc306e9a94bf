#pragma once

#include <vector>

#include "weyl/linalg.hpp"
#include "weyl/poly.hpp"
#include "weyl/ratfunc.hpp"

namespace weyl {

/// Finite-codimension subspace V of k[t] containing a nonzero ideal,
/// stored as V = span(basis) + modulus*k[t]. The basis holds residues of
/// degree < deg(modulus) in reduced echelon form: strictly increasing
/// pivot degrees (pivot = lowest-degree nonzero coefficient, normalized
/// to 1), each pivot eliminated from the other rows. When canonical, the
/// modulus generates the conductor, the largest ideal inside V.
///
/// Subspaces with zero conductor (no nonzero ideal inside) are not
/// representable here; every constructor takes an explicit modulus.
class Subspace {
  public:
    static Subspace make(const Poly& modulus, const std::vector<Poly>& gens);
    static Subspace whole_ring() { return ideal(Poly(1)); }
    static Subspace ideal(const Poly& q);

    const Poly& modulus() const { return modulus_; }
    const std::vector<Poly>& basis() const { return basis_; }
    bool is_canonical() const { return canonical_; }

    /// deg(modulus) - |basis|; the true codimension when canonical.
    int codim() const { return modulus_.degree() - static_cast<int>(basis_.size()); }

    bool contains(const Poly& p) const;

    /// Residue coordinate vector of p mod modulus, length deg(modulus).
    QVec residue_vec(const Poly& p) const;

  private:
    Poly modulus_;
    std::vector<Poly> basis_;
    bool canonical_ = false;
    friend Subspace canonicalize(const Subspace& V);
    Subspace() = default;
};

/// Monic generator of the largest ideal contained in V.
Poly conductor(const Subspace& V);

/// Rebuild V over its conductor; idempotent.
Subspace canonicalize(const Subspace& V);

bool include(const Subspace& V, const Subspace& W);  // V subset of W
bool equal(const Subspace& V, const Subspace& W);

Subspace sum(const Subspace& V, const Subspace& W);
Subspace intersect(const Subspace& V, const Subspace& W);

/// s*V for a rational function s; requires s*V inside k[t], which holds
/// exactly when den(s) divides the modulus and every basis element.
Subspace scale(const Subspace& V, const RatFunc& s);

struct StabilizerReport {
    Subspace algebra;  // S(V) = { a : a V inside V }
    bool is_unital_algebra;
};
StabilizerReport stabilizer(const Subspace& V);

/// O(b) = { a : a' in b*k[t] }, a unital subalgebra of k[t].
Subspace O_space(const Poly& b);
/// O(b,h) = { a : a' + a*h in b*k[t] }.
Subspace Oh_space(const Poly& b, const Poly& h);

/// For distinct lambda_i and V_i containing (t-lambda_i)^{r_i} k[t]:
/// checks O(prod (t-lambda_i)^{r_i - 1}) stabilizes the intersection of
/// the V_i, and that this O-space equals the intersection of the factor
/// O-spaces. Throws on precondition violations.
bool verify_lemma2(const std::vector<Rational>& lambdas, const std::vector<int>& rs,
                   const std::vector<Subspace>& Vs);

/// Combined stabilizer witness b1*b2 for V+W and the intersection, with
/// both input witnesses and the combined one verified.
Poly pd_combine(const Subspace& V, const Poly& b1, const Subspace& W, const Poly& b2);

/// Checks O(a,h) = q*O(a) + C(R,O(a)) for q in O(a,h) coprime to a.
bool verify_lemma6_6(const Poly& a, const Poly& h, const Poly& q);

/// For a stabilizer witness b that splits into rational linear factors
/// (t-lambda_i)^{r_i}: the components V + (t-lambda_i)^{r_i+1} k[t],
/// verified to intersect back to V. V must not lie in a proper ideal.
std::vector<Subspace> classical_decompose(const Subspace& V, const Poly& b);

}  // namespace weyl
