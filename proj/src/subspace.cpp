#include "weyl/subspace.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "weyl/errors.hpp"
#include "weyl/factor.hpp"

namespace weyl {

namespace {

QVec to_vec(const Poly& p, int dim) {
    QVec v(static_cast<size_t>(dim), Rational(0));
    for (int i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(i)] = p.coeff(i);
    return v;
}

Poly from_vec(const QVec& v) { return Poly(std::vector<Rational>(v.begin(), v.end())); }

std::vector<Poly> echelon_residues(const std::vector<Poly>& residues, int dim) {
    QMat m;
    for (const auto& r : residues)
        if (!r.is_zero()) m.push_back(to_vec(r, dim));
    rref(m);
    std::vector<Poly> out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(from_vec(row));
    return out;
}

}  // namespace

Subspace Subspace::make(const Poly& modulus, const std::vector<Poly>& gens) {
    if (modulus.is_zero()) throw std::domain_error("zero modulus");
    Subspace V;
    V.modulus_ = modulus.monic();
    int dim = V.modulus_.degree();
    std::vector<Poly> residues;
    residues.reserve(gens.size());
    for (const auto& g : gens) residues.push_back(divrem(g, V.modulus_).second);
    V.basis_ = echelon_residues(residues, dim);
    V.canonical_ = V.modulus_.is_one() && V.basis_.empty();
    return V;
}

Subspace Subspace::ideal(const Poly& q) {
    if (q.is_zero()) throw std::domain_error("zero modulus");
    Subspace V;
    V.modulus_ = q.monic();
    V.canonical_ = true;
    return V;
}

QVec Subspace::residue_vec(const Poly& p) const {
    return to_vec(divrem(p, modulus_).second, modulus_.degree());
}

bool Subspace::contains(const Poly& p) const {
    Poly r = divrem(p, modulus_).second;
    if (r.is_zero()) return true;
    QVec v = to_vec(r, modulus_.degree());
    std::vector<int> pivots;
    QMat rows;
    rows.reserve(basis_.size());
    for (const auto& b : basis_) rows.push_back(to_vec(b, modulus_.degree()));
    // basis is already rref; pivots are the lowest-degree coefficients
    for (const auto& row : rows) {
        int p0 = 0;
        while (row[static_cast<size_t>(p0)].is_zero()) ++p0;
        pivots.push_back(p0);
    }
    return is_zero_vec(reduce_against(std::move(v), rows, pivots));
}

Poly conductor(const Subspace& V) {
    int dim = V.modulus().degree();
    if (dim == 0) return Poly(1);
    if (V.is_canonical()) return V.modulus();

    // Largest multiplication-invariant subspace of the residue span; it is
    // the residue image of an ideal dividing the modulus.
    QMat cur;
    for (const auto& b : V.basis()) cur.push_back(to_vec(b, dim));
    std::vector<int> piv = rref(cur);

    const Poly& q = V.modulus();
    auto mult_t = [&](const QVec& x) {
        Poly p = from_vec(x);
        return to_vec(divrem(p.shifted(1), q).second, dim);
    };

    while (!cur.empty()) {
        // constrain: t*x stays inside the current span
        QMat residuals;
        for (const auto& row : cur) residuals.push_back(reduce_against(mult_t(row), cur, piv));
        // rows of `residuals` live in coordinates; unknowns are the row mix
        QMat eqs;  // one equation per residue coordinate
        for (int c = 0; c < dim; ++c) {
            QVec eq(cur.size(), Rational(0));
            bool nonzero = false;
            for (size_t r = 0; r < cur.size(); ++r) {
                eq[r] = residuals[r][static_cast<size_t>(c)];
                nonzero = nonzero || !eq[r].is_zero();
            }
            if (nonzero) eqs.push_back(std::move(eq));
        }
        if (eqs.empty()) break;  // already invariant
        QMat mix = kernel_basis(std::move(eqs), static_cast<int>(cur.size()));
        QMat next;
        for (const auto& alpha : mix) {
            QVec x(static_cast<size_t>(dim), Rational(0));
            for (size_t r = 0; r < cur.size(); ++r) {
                if (alpha[r].is_zero()) continue;
                for (int c = 0; c < dim; ++c) x[static_cast<size_t>(c)] += alpha[r] * cur[r][static_cast<size_t>(c)];
            }
            next.push_back(std::move(x));
        }
        size_t before = cur.size();
        cur = std::move(next);
        piv = rref(cur);
        if (cur.size() == before) break;  // stabilized: invariant
    }

    if (cur.empty()) return V.modulus();
    Poly g = V.modulus();
    for (const auto& row : cur) g = gcd_monic(g, from_vec(row));
    return g;
}

Subspace canonicalize(const Subspace& V) {
    if (V.is_canonical()) return V;
    Poly g = conductor(V);
    if (g == V.modulus()) {
        Subspace W = V;
        W.canonical_ = true;
        return W;
    }
    Subspace W = Subspace::make(g, V.basis());
    W.canonical_ = true;
    return W;
}

bool include(const Subspace& V, const Subspace& W) {
    Subspace Wc = canonicalize(W);
    if (!divides(Wc.modulus(), V.modulus())) return false;
    for (const auto& b : V.basis())
        if (!Wc.contains(b)) return false;
    return true;
}

bool equal(const Subspace& V, const Subspace& W) {
    Subspace Vc = canonicalize(V);
    Subspace Wc = canonicalize(W);
    return Vc.modulus() == Wc.modulus() && Vc.basis() == Wc.basis();
}

namespace {

/// Residue generators of V lifted to a larger modulus L (a multiple of
/// the modulus of V): the basis plus the shifts modulus*t^j.
std::vector<Poly> lift_gens(const Subspace& V, const Poly& L) {
    std::vector<Poly> gens = V.basis();
    int extra = L.degree() - V.modulus().degree();
    for (int j = 0; j < extra; ++j) gens.push_back(V.modulus().shifted(j));
    return gens;
}

}  // namespace

Subspace sum(const Subspace& V, const Subspace& W) {
    Poly L = lcm_monic(V.modulus(), W.modulus());
    std::vector<Poly> gens = lift_gens(V, L);
    auto wg = lift_gens(W, L);
    gens.insert(gens.end(), wg.begin(), wg.end());
    return canonicalize(Subspace::make(L, gens));
}

Subspace intersect(const Subspace& V, const Subspace& W) {
    Poly L = lcm_monic(V.modulus(), W.modulus());
    int dim = L.degree();
    if (dim == 0) return Subspace::whole_ring();
    // Zassenhaus: rows (a|a) for a spanning V, (b|0) for b spanning W;
    // rref rows with zero left half carry the intersection on the right.
    QMat m;
    for (const auto& g : lift_gens(V, L)) {
        QVec row = to_vec(divrem(g, L).second, dim);
        QVec full = row;
        full.insert(full.end(), row.begin(), row.end());
        m.push_back(std::move(full));
    }
    for (const auto& g : lift_gens(W, L)) {
        QVec row = to_vec(divrem(g, L).second, dim);
        row.resize(static_cast<size_t>(2 * dim), Rational(0));
        m.push_back(std::move(row));
    }
    rref(m);
    std::vector<Poly> gens;
    for (const auto& row : m) {
        bool left_zero = true;
        for (int c = 0; c < dim && left_zero; ++c) left_zero = row[static_cast<size_t>(c)].is_zero();
        if (!left_zero) continue;
        gens.push_back(from_vec(QVec(row.begin() + dim, row.end())));
    }
    return canonicalize(Subspace::make(L, gens));
}

Subspace scale(const Subspace& V, const RatFunc& s) {
    if (s.is_zero()) throw std::domain_error("scale by zero");
    const Poly& n = s.num();
    const Poly& e = s.den();
    if (!divides(e, V.modulus())) throw std::domain_error("scale leaves R");
    for (const auto& b : V.basis())
        if (!divides(e, b)) throw std::domain_error("scale leaves R");
    Poly new_modulus = divrem(V.modulus() * n, e).first;
    std::vector<Poly> gens;
    gens.reserve(V.basis().size());
    for (const auto& b : V.basis()) gens.push_back(divrem(b * n, e).first);
    return canonicalize(Subspace::make(new_modulus, gens));
}

StabilizerReport stabilizer(const Subspace& V_in) {
    Subspace V = canonicalize(V_in);
    int dim = V.modulus().degree();
    if (dim == 0) return {Subspace::whole_ring(), true};

    QMat rows;
    std::vector<int> pivots;
    for (const auto& b : V.basis()) rows.push_back(to_vec(b, dim));
    for (const auto& row : rows) {
        int p0 = 0;
        while (row[static_cast<size_t>(p0)].is_zero()) ++p0;
        pivots.push_back(p0);
    }

    // Unknown residue s (degree < dim); each basis element w contributes
    // the linear condition s*w in V.
    QMat eqs;
    for (const auto& w : V.basis()) {
        // column a = residual of t^a * w
        std::vector<QVec> cols;
        cols.reserve(static_cast<size_t>(dim));
        for (int a = 0; a < dim; ++a)
            cols.push_back(reduce_against(V.residue_vec(w.shifted(a)), rows, pivots));
        for (int c = 0; c < dim; ++c) {
            QVec eq(static_cast<size_t>(dim), Rational(0));
            bool nonzero = false;
            for (int a = 0; a < dim; ++a) {
                eq[static_cast<size_t>(a)] = cols[static_cast<size_t>(a)][static_cast<size_t>(c)];
                nonzero = nonzero || !eq[static_cast<size_t>(a)].is_zero();
            }
            if (nonzero) eqs.push_back(std::move(eq));
        }
    }
    QMat sol = kernel_basis(std::move(eqs), dim);
    std::vector<Poly> gens;
    gens.reserve(sol.size());
    for (const auto& x : sol) gens.push_back(from_vec(x));
    Subspace S = canonicalize(Subspace::make(V.modulus(), gens));

    bool ok = S.contains(Poly(1));
    for (size_t i = 0; i < S.basis().size() && ok; ++i)
        for (size_t j = i; j < S.basis().size() && ok; ++j)
            ok = S.contains(S.basis()[i] * S.basis()[j]);
    return {S, ok};
}

namespace {

/// Solve a linear condition "L(a) divisible by b" for residues a of
/// degree < 2 deg b; L maps polynomials to polynomials linearly.
Subspace solve_divisibility(const Poly& b, const std::function<Poly(const Poly&)>& L) {
    Poly w = (b * b).monic();
    int dim = w.degree();
    int target = b.degree();
    QMat eqs;
    for (int c = 0; c < target; ++c) eqs.emplace_back(static_cast<size_t>(dim), Rational(0));
    for (int a = 0; a < dim; ++a) {
        Poly r = divrem(L(Poly::t(a)), b).second;
        for (int c = 0; c < target; ++c) eqs[static_cast<size_t>(c)][static_cast<size_t>(a)] = r.coeff(c);
    }
    QMat sol = kernel_basis(std::move(eqs), dim);
    std::vector<Poly> gens;
    gens.reserve(sol.size());
    for (const auto& x : sol) gens.push_back(from_vec(x));
    return canonicalize(Subspace::make(w, gens));
}

}  // namespace

Subspace O_space(const Poly& b) {
    if (b.is_zero()) throw std::domain_error("zero witness");
    if (b.is_constant()) return Subspace::whole_ring();
    return solve_divisibility(b, [](const Poly& a) { return derivative(a); });
}

Subspace Oh_space(const Poly& b, const Poly& h) {
    if (b.is_zero()) throw std::domain_error("zero witness");
    if (b.is_constant()) return Subspace::whole_ring();
    return solve_divisibility(b, [&h](const Poly& a) { return derivative(a) + a * h; });
}

bool verify_lemma2(const std::vector<Rational>& lambdas, const std::vector<int>& rs,
                   const std::vector<Subspace>& Vs) {
    size_t n = lambdas.size();
    if (rs.size() != n || Vs.size() != n || n == 0) throw std::domain_error("mismatched inputs");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (lambdas[i] == lambdas[j]) throw std::domain_error("repeated root");
    for (size_t i = 0; i < n; ++i) {
        if (rs[i] < 1) throw std::domain_error("exponent must be positive");
        Poly power = pow(Poly::t() - Poly(lambdas[i]), rs[i]);
        if (!include(Subspace::ideal(power), Vs[i]))
            throw std::domain_error("component does not contain the required ideal power");
    }

    Poly b0(1);
    for (size_t i = 0; i < n; ++i) b0 = b0 * pow(Poly::t() - Poly(lambdas[i]), rs[i] - 1);

    Subspace inter = Vs[0];
    for (size_t i = 1; i < n; ++i) inter = intersect(inter, Vs[i]);

    bool incl = include(O_space(b0), stabilizer(inter).algebra);

    Subspace prod_factors = Subspace::whole_ring();
    for (size_t i = 0; i < n; ++i)
        prod_factors = intersect(prod_factors, O_space(pow(Poly::t() - Poly(lambdas[i]), rs[i] - 1)));
    bool identity = equal(O_space(b0), prod_factors);

    return incl && identity;
}

Poly pd_combine(const Subspace& V, const Poly& b1, const Subspace& W, const Poly& b2) {
    if (!include(O_space(b1), stabilizer(V).algebra)) throw std::domain_error("first witness fails to stabilize");
    if (!include(O_space(b2), stabilizer(W).algebra)) throw std::domain_error("second witness fails to stabilize");
    Poly b = b1 * b2;
    Subspace Ob = O_space(b);
    if (!include(Ob, stabilizer(sum(V, W)).algebra))
        throw verification_error("combined witness fails on the sum");
    if (!include(Ob, stabilizer(intersect(V, W)).algebra))
        throw verification_error("combined witness fails on the intersection");
    return b;
}

bool verify_lemma6_6(const Poly& a, const Poly& h, const Poly& q) {
    if (a.is_zero()) throw std::domain_error("zero witness");
    Subspace Oah = Oh_space(a, h);
    if (!Oah.contains(q)) throw std::domain_error("q is not a member of O(a,h)");
    if (!(gcd_monic(q, a).is_one())) throw std::domain_error("q is not coprime to a");
    // Bezout certificate for the coprimality hypothesis, exact.
    Egcd be = egcd(q, a * a);
    if (!(be.g.is_one() && (be.u * q + be.v * (a * a)) == Poly(1)))
        throw verification_error("Bezout identity failed");

    Subspace Oa = O_space(a);
    Subspace lhs = sum(scale(Oa, RatFunc(q, Poly(1))), Subspace::ideal(conductor(Oa)));
    return equal(lhs, Oah);
}

std::vector<Subspace> classical_decompose(const Subspace& V_in, const Poly& b) {
    Subspace V = canonicalize(V_in);
    if (!include(O_space(b), stabilizer(V).algebra)) throw std::domain_error("witness fails to stabilize");
    LinearSplit split = rational_linear_split(b);
    if (!split.remainder.is_one()) throw std::domain_error("witness does not split over Q");

    Poly content = V.modulus();
    for (const auto& w : V.basis()) content = gcd_monic(content, w);
    if (!content.is_one()) throw std::domain_error("subspace lies in a proper ideal");

    std::vector<Subspace> components;
    for (const auto& f : split.factors) {
        Poly power = pow(Poly::t() - Poly(f.root), f.multiplicity + 1);
        components.push_back(sum(V, Subspace::ideal(power)));
    }

    Subspace inter = Subspace::whole_ring();
    for (const auto& c : components) inter = intersect(inter, c);
    if (!equal(inter, V)) throw verification_error("components do not intersect back to the input");
    return components;
}

}  // namespace weyl
