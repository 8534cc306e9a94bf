#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "weyl/linalg.hpp"
#include "weyl/subspace.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

/// Search bounds for the semi-decision procedures. All positive;
/// `window` is the extra D-degree headroom allowed when products of
/// generators must cancel down into a low-degree truncation slice.
struct Caps {
    int p_max = 4;   // D-degree cap for truncations and realizer search
    int t_max = 8;   // t-degree cap for right-multiplier enumeration
    int window = 2;  // cancellation headroom, >= 2
    int r_max = 3;   // witness exponent cap for the fast stabilizer search
    void validate() const;
};

/// Right ideal given by finitely many generators, optionally with a known
/// monic polynomial member (an element of the ideal of D-degree zero).
struct IdealPresentation {
    std::vector<WeylOp> generators;
    std::optional<Poly> poly_member;
    bool member_verified = false;

    static IdealPresentation from_generators(std::vector<WeylOp> gens);
};

/// Membership bound for D-degree p over a conductor of degree dq: the
/// residue sequence d(t^n) mod q is annihilated by a linear recurrence of
/// order (p+1)*dq valid from index p on, so checking n <= (p+1)*dq + p
/// decides membership for every n.
int drv_bound(int p, int deg_q);

/// d maps all of k[t] into V; decided by the finite criterion above.
/// `slack` adds extra indices on top of the bound.
bool in_DRV(const WeylOp& d, const Subspace& V, int slack = 0);

/// Finite slice of a right ideal: operators of D-degree <= p with
/// t-coefficients reduced mod `modulus`, as a canonical row space.
/// Coordinates are ordered D-degree major, descending, so rows with
/// pivots in low-degree blocks span the low-degree slice exactly.
struct Truncation {
    int p = 0;
    Poly modulus;
    QMat rows;                // canonical reduced row echelon form
    std::vector<WeylOp> ops;  // rows decoded as operators
    int dim() const { return static_cast<int>(rows.size()); }
};

bool same_span(const Truncation& a, const Truncation& b);

/// Basis of { d : deg_D d <= p, d(k[t]) inside V } mod modulus*A1.
Truncation drv_truncation(const Subspace& V, int p, int slack = 0);

/// Slice of the right ideal generated by `gens` (with q0 adjoined, q0 a
/// known polynomial member): the span of all products g * t^a * D^c
/// within caps, cut down to D-degree <= p. A lower bound for the true
/// ideal slice; equality with a target certifies at truncation level.
Truncation ideal_truncation(const std::vector<WeylOp>& gens, const Poly& q0, const Caps& caps, int p);

/// I * 1 = { d(1) : d in I } = sum of generator images g(k[t]) plus
/// q0*k[t], computed from finitely many monomial images per generator.
Subspace star1(const IdealPresentation& I, const Caps& caps, int slack = 0);

/// Iterative-deepening elimination for a nonzero D-degree-zero element of
/// the ideal; returns the monic result or nothing at cap exhaustion.
std::optional<Poly> find_poly_in_ideal(const IdealPresentation& I, const Caps& caps);

/// Copy of I with poly_member populated (found if absent) and verified.
IdealPresentation with_poly_member(const IdealPresentation& I, const Caps& caps);

struct PdPositive {
    int r = 0;
    Poly witness;  // q^r, with O(witness) inside S(V) verified
    std::vector<WeylOp> realizers;
};
struct PdNegative {
    std::string rule;  // "lemma10"
    Poly q;            // proven irreducible, deg >= 2
};
struct PdInconclusive {
    Caps caps;
    Subspace last_star1;  // the stabilized image span at cap exhaustion
};
using PdVerdict = std::variant<PdPositive, PdNegative, PdInconclusive>;

/// Three-valued decision: a verified positive witness, the definitive
/// codimension-one negative rule, or cap exhaustion. Never a bare "no".
PdVerdict pd_decide(const Subspace& V, const Caps& caps, int slack = 0);

struct GammaReport {
    bool verified = false;
    bool enlarged = false;
    int added_count = 0;
    int p_checked = 0;
};

/// Generators for the right ideal of operators mapping k[t] into V,
/// verified against the direct truncations and self-repaired when a slice
/// comes up short. Requires a positive pd_decide verdict.
std::pair<IdealPresentation, GammaReport> gamma(const Subspace& V, const Caps& caps,
                                                bool minimize = true, int slack = 0);

/// star1(gamma(V)) == V, exactly.
bool roundtrip_gamma_inv_gamma(const Subspace& V, const Caps& caps, int slack = 0);

struct RoundtripReport {
    Subspace v_prime;
    bool generators_in_drv = false;
    bool truncations_agree = false;
    int p_checked = 0;
};

/// V' = star1(I); every generator must map k[t] into V', and the ideal
/// slices must match the direct truncations of V' for p <= p_max.
RoundtripReport roundtrip_gamma_gamma_inv(const IdealPresentation& I, const Caps& caps, int slack = 0);

/// The image of the f-element of b is exactly O(b): membership up to the
/// finite criterion bound plus a residue-dimension count.
bool verify_prop7_image(const Poly& b, int slack = 0);

/// Reduce every t-coefficient mod q; the canonical representative of the
/// class of g modulo q*A1.
WeylOp reduce_op_mod(const WeylOp& g, const Poly& q);

}  // namespace weyl
