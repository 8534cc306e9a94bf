#include "weyl/oracle.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "weyl/errors.hpp"
#include "weyl/factor.hpp"
#include "weyl/random_gen.hpp"
#include "weyl/render.hpp"

namespace weyl {

bool oracle_in_DRV(const WeylOp& d, const Subspace& V_in, int multiplier) {
    if (multiplier < 1) throw std::domain_error("multiplier must be positive");
    if (d.is_zero()) return true;
    Subspace V = canonicalize(V_in);
    if (V.modulus().degree() == 0) return true;
    int p = std::max(d.deg_d(), 0);
    int bound = multiplier * drv_bound(p, V.modulus().degree());
    for (int n = 0; n <= bound; ++n)
        if (!V.contains(d.apply(Poly::t(n)))) return false;
    return true;
}

CaseReport oracle_zero_conductor_demo(int degree_cap) {
    if (degree_cap < 8) throw std::domain_error("degree cap too small for the demonstration");
    int delta = degree_cap - 5;

    // functional phi(p) = sum_j j! coeff_j(p); sanity: it is nonzero
    bool functional_nonzero = !Rational::factorial(3).is_zero();

    // a nonzero with deg a <= delta and phi(a t^j) = 0 for 0 <= j <= delta
    // would generate an ideal inside the kernel; the solve must come up empty
    QMat eqs;
    for (int j = 0; j <= delta; ++j) {
        QVec eq(static_cast<size_t>(delta) + 1, Rational(0));
        for (int i = 0; i <= delta; ++i)
            eq[static_cast<size_t>(i)] = Rational::factorial(static_cast<unsigned long>(i + j));
        eqs.push_back(std::move(eq));
    }
    QMat ker = kernel_basis(std::move(eqs), delta + 1);

    CaseReport rep;
    rep.description = "zero-conductor kernel of p -> sum j!*coeff_j(p), degree cap " +
                      std::to_string(degree_cap) + ": no ideal member of degree <= " +
                      std::to_string(delta);
    rep.pass = functional_nonzero && ker.empty();
    if (!rep.pass) rep.counterexample = "kernel dimension " + std::to_string(ker.size());
    return rep;
}

namespace {

const Poly t_ = Poly::t();

struct CaseData {
    std::vector<Poly> polys;
    std::vector<WeylOp> ops;
    std::vector<long> ints;
};

std::string serialize(const CaseData& d) {
    std::string out;
    for (size_t k = 0; k < d.polys.size(); ++k) out += "poly" + std::to_string(k) + " = " + to_text(d.polys[k]) + "; ";
    for (size_t k = 0; k < d.ops.size(); ++k) out += "op" + std::to_string(k) + " = " + to_text(d.ops[k]) + "; ";
    for (size_t k = 0; k < d.ints.size(); ++k) out += "int" + std::to_string(k) + " = " + std::to_string(d.ints[k]) + "; ";
    if (!out.empty()) out.erase(out.size() - 2);
    return out;
}

struct Suite {
    int default_cases = 0;
    std::function<CaseData(int, Rng&, const Caps&)> generate;
    std::function<bool(const CaseData&, const Caps&)> check;
};

Poly drop_leading(const Poly& p) {
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    if (c.empty()) return p;
    c.pop_back();
    return Poly(std::move(c));
}

Poly halve_coeffs(const Poly& p) {
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    bool changed = false;
    for (auto& x : c) {
        if (x.is_zero()) continue;
        Rational h(x.num() / 2, x.den());
        if (h != x) {
            x = h;
            changed = true;
        }
    }
    if (!changed) return p;
    return Poly(std::move(c));
}

WeylOp drop_top_term(const WeylOp& g, bool by_t_degree) {
    if (g.is_zero()) return g;
    WeylOp::Key best{-1, -1};
    bool first = true;
    for (const auto& [k, c] : g.terms()) {
        bool better;
        if (first) {
            better = true;
        } else if (by_t_degree) {
            better = std::pair(k.first, k.second) > std::pair(best.first, best.second);
        } else {
            better = std::pair(k.second, k.first) > std::pair(best.second, best.first);
        }
        if (better) {
            best = k;
            first = false;
        }
    }
    WeylOp out = g;
    out -= WeylOp::monomial(g.terms().at(best), best.first, best.second);
    return out;
}

/// Shrink candidates in the fixed order: t-degrees first, then D-degrees,
/// then coefficient magnitudes. Structural integers are left alone.
std::vector<CaseData> shrink_candidates(const CaseData& d) {
    std::vector<CaseData> out;
    for (size_t k = 0; k < d.polys.size(); ++k) {
        if (d.polys[k].is_zero()) continue;
        CaseData c = d;
        c.polys[k] = drop_leading(d.polys[k]);
        out.push_back(std::move(c));
    }
    for (size_t k = 0; k < d.ops.size(); ++k) {
        if (d.ops[k].is_zero()) continue;
        CaseData c = d;
        c.ops[k] = drop_top_term(d.ops[k], /*by_t_degree=*/true);
        out.push_back(std::move(c));
    }
    for (size_t k = 0; k < d.ops.size(); ++k) {
        if (d.ops[k].is_zero()) continue;
        CaseData c = d;
        c.ops[k] = drop_top_term(d.ops[k], /*by_t_degree=*/false);
        out.push_back(std::move(c));
    }
    for (size_t k = 0; k < d.polys.size(); ++k) {
        Poly h = halve_coeffs(d.polys[k]);
        if (h == d.polys[k]) continue;
        CaseData c = d;
        c.polys[k] = h;
        out.push_back(std::move(c));
    }
    return out;
}

// ---- shared generation for the classical (lambda, r, V_i) families ----

CaseData gen_classical(Rng& rng, int nmax, bool force_one) {
    CaseData d;
    int n = static_cast<int>(rng.uniform(1, nmax));
    d.ints.push_back(n);
    std::vector<Rational> lambdas;
    while (static_cast<int>(lambdas.size()) < n) {
        Rational lam(rng.uniform(-4, 4), rng.uniform(1, 2));
        bool dup = false;
        for (const auto& l : lambdas) dup = dup || l == lam;
        if (!dup) lambdas.push_back(lam);
    }
    for (int i = 0; i < n; ++i) {
        d.ints.push_back(rng.uniform(1, 3));
        d.polys.push_back(Poly(lambdas[static_cast<size_t>(i)]));
    }
    for (int i = 0; i < n; ++i) {
        int r = static_cast<int>(d.ints[static_cast<size_t>(i) + 1]);
        d.polys.push_back(force_one ? Poly(1) : random_poly(rng, r - 1, 4, 2));
        d.polys.push_back(random_poly(rng, r - 1, 4, 2));
    }
    return d;
}

struct ClassicalCase {
    std::vector<Rational> lambdas;
    std::vector<int> rs;
    std::vector<Subspace> Vs;
};

ClassicalCase decode_classical(const CaseData& d) {
    ClassicalCase c;
    size_t n = static_cast<size_t>(d.ints.at(0));
    if (d.polys.size() < 3 * n) throw std::domain_error("malformed case");
    for (size_t i = 0; i < n; ++i) {
        const Poly& lam = d.polys[i];
        if (lam.degree() > 0) throw std::domain_error("malformed case");
        c.lambdas.push_back(lam.coeff(0));
        c.rs.push_back(static_cast<int>(d.ints.at(i + 1)));
        if (c.rs.back() < 1) throw std::domain_error("malformed case");
    }
    for (size_t i = 0; i < n; ++i) {
        Poly modulus = pow(t_ - Poly(c.lambdas[i]), c.rs[i]);
        c.Vs.push_back(Subspace::make(modulus, {d.polys[n + 2 * i], d.polys[n + 2 * i + 1]}));
    }
    return c;
}

// ---- suite registry ----

std::map<std::string, Suite> build_suites() {
    std::map<std::string, Suite> suites;

    suites["lemma2"] = Suite{
        100,
        [](int, Rng& rng, const Caps&) { return gen_classical(rng, 3, false); },
        [](const CaseData& d, const Caps&) {
            auto c = decode_classical(d);
            return verify_lemma2(c.lambdas, c.rs, c.Vs);
        }};

    suites["corollary3"] = Suite{
        100,
        [](int, Rng& rng, const Caps&) { return gen_classical(rng, 2, false); },
        [](const CaseData& d, const Caps&) {
            auto c = decode_classical(d);
            Subspace V = c.Vs[0];
            for (size_t i = 1; i < c.Vs.size(); ++i) V = intersect(V, c.Vs[i]);
            Poly q = conductor(V);
            return include(O_space(q), stabilizer(V).algebra);
        }};

    suites["lemma4"] = Suite{
        50,
        [](int, Rng& rng, const Caps&) { return gen_classical(rng, 2, true); },
        [](const CaseData& d, const Caps&) {
            auto c = decode_classical(d);
            Subspace V = c.Vs[0];
            Poly b(1);
            for (size_t i = 0; i < c.Vs.size(); ++i) {
                if (i > 0) V = intersect(V, c.Vs[i]);
                b = b * pow(t_ - Poly(c.lambdas[i]), c.rs[i]);
            }
            auto comps = classical_decompose(V, b);
            // components follow the split order of b (roots ascending)
            auto split = rational_linear_split(b);
            if (comps.size() != split.factors.size()) return false;
            Subspace inter = Subspace::whole_ring();
            for (size_t i = 0; i < comps.size(); ++i) {
                inter = intersect(inter, comps[i]);
                Poly power = pow(t_ - Poly(split.factors[i].root), split.factors[i].multiplicity + 1);
                if (!include(Subspace::ideal(power), comps[i])) return false;
            }
            return equal(inter, V);
        }};

    suites["lemma5"] = Suite{
        60,
        [](int, Rng& rng, const Caps&) {
            CaseData d;
            d.polys.push_back(random_nonzero_poly(rng, 2, 4, 2));  // b1
            d.polys.push_back(random_poly(rng, 2, 4, 2));          // h1
            d.polys.push_back(random_nonzero_poly(rng, 2, 4, 2));  // b2
            d.polys.push_back(random_nonzero_poly(rng, 2, 4, 2));  // u (polynomial scale)
            return d;
        },
        [](const CaseData& d, const Caps&) {
            const Poly &b1 = d.polys.at(0), &h1 = d.polys.at(1), &b2 = d.polys.at(2), &u = d.polys.at(3);
            if (b1.is_zero() || b2.is_zero() || u.is_zero()) throw std::domain_error("zero input");
            Subspace V = Oh_space(b1, h1);
            Subspace W = O_space(b2);
            Poly b = pd_combine(V, b1, W, b2);
            if (b != b1 * b2) return false;
            // scaling keeps the witness
            Subspace Vu = scale(V, RatFunc(u, Poly(1)));
            return include(O_space(b1), stabilizer(Vu).algebra);
        }};

    suites["lemma6"] = Suite{
        100,
        [](int, Rng& rng, const Caps&) {
            CaseData d;
            Poly a = random_nonzero_poly(rng, 3, 4, 2);
            while (a.is_constant()) a = random_nonzero_poly(rng, 3, 4, 2);
            d.polys.push_back(a);
            d.polys.push_back(random_poly(rng, 3, 4, 2));  // h
            d.ops.push_back(random_weyl_op(rng, 3, 3));    // d for part (4)
            return d;
        },
        [](const CaseData& d, const Caps&) {
            const Poly &a = d.polys.at(0), &h = d.polys.at(1);
            if (a.is_zero() || a.is_constant()) throw std::domain_error("degenerate witness");
            Subspace Oa = O_space(a);
            Subspace Oah = Oh_space(a, h);
            if (!include(Oa, stabilizer(Oah).algebra)) return false;                           // (1)
            if (conductor(canonicalize(Oa)) != conductor(canonicalize(Oah))) return false;    // (2)
            if (!include(Subspace::ideal(a * a), Oa)) return false;                           // (3)
            if (!include(Subspace::ideal(a * a), Oah)) return false;                          // (3)
            Subspace C = canonicalize(Oah);                                                   // (5)
            Poly content = C.modulus();
            for (const auto& w : C.basis()) content = gcd_monic(content, w);
            if (!content.is_one()) return false;
            // (4): operator membership matches the shifted principal coset test
            const WeylOp& dd = d.ops.at(0);
            if (in_DRV(dd, Oah) != principal_coset_member(dd, a, h)) return false;
            // (6): with a searched coprime member q
            Poly q;
            bool found = false;
            std::vector<Poly> pool = C.basis();
            pool.push_back(C.modulus());
            for (size_t i = 0; i < pool.size() && !found; ++i)
                if (Oah.contains(pool[i]) && gcd_monic(pool[i], a).is_one()) {
                    q = pool[i];
                    found = true;
                }
            for (size_t i = 0; i < pool.size() && !found; ++i)
                for (size_t j = i + 1; j < pool.size() && !found; ++j) {
                    Poly cand = pool[i] + pool[j];
                    if (!cand.is_zero() && Oah.contains(cand) && gcd_monic(cand, a).is_one()) {
                        q = cand;
                        found = true;
                    }
                }
            if (!found) return false;
            return verify_lemma6_6(a, h, q);
        }};

    suites["lemma9"] = Suite{
        300,
        [](int, Rng& rng, const Caps&) {
            CaseData d;
            Poly b = random_nonzero_poly(rng, 3, 4, 2);
            WeylOp op = random_nonzero_weyl_op(rng, 3, 4);
            int p = std::max(op.deg_d(), 0);
            Subspace obp = O_space(pow(b, p));
            d.polys.push_back(b);
            d.polys.push_back(random_member(rng, obp));
            d.ops.push_back(op);
            return d;
        },
        [](const CaseData& d, const Caps&) {
            const Poly &b = d.polys.at(0), &s = d.polys.at(1);
            const WeylOp& op = d.ops.at(0);
            if (b.is_zero()) throw std::domain_error("zero witness");
            int p = std::max(op.deg_d(), 0);
            if (!O_space(pow(b, p)).contains(s)) throw std::domain_error("sample escapes the stabilizer");
            WeylOp c = commutator(op, WeylOp(s));
            for (const Poly& aj : c.coeff_seq())
                if (!divides(b, aj)) return false;
            return true;
        }};

    suites["prop7"] = Suite{
        204,
        [](int index, Rng& rng, const Caps&) {
            CaseData d;
            switch (index) {
                case 0: d.polys.push_back(t_); break;
                case 1: d.polys.push_back(t_ * t_); break;
                case 2: d.polys.push_back(t_ * t_ + 1); break;
                case 3: d.polys.push_back(t_ * (t_ - 1)); break;
                default: d.polys.push_back(random_nonzero_poly(rng, 6, 5, 2)); break;
            }
            return d;
        },
        [](const CaseData& d, const Caps&) {
            const Poly& b = d.polys.at(0);
            if (b.is_zero()) throw std::domain_error("zero input");
            int m = b.degree();
            WeylOp f = build_f(b);
            if (WeylOp::d() * f != WeylOp(b) * pow(WeylOp::d(), m + 1)) return false;
            Rational expect1 = b.coeff(m) * Rational::factorial(static_cast<unsigned long>(m));
            if (m % 2 == 1) expect1 = -expect1;
            if (f.apply(Poly(1)) != Poly(expect1)) return false;
            // middle images are the constants beta_{m-j} (-1)^{m-j} j! (m-j)!,
            // zero exactly when b has no interior coefficient there
            for (int j = 1; j < m; ++j) {
                Rational cj = b.coeff(m - j) * Rational::factorial(static_cast<unsigned long>(j)) *
                              Rational::factorial(static_cast<unsigned long>(m - j));
                if ((m - j) % 2 == 1) cj = -cj;
                if (f.apply(Poly::t(j)) != Poly(cj)) return false;
            }
            if (m >= 1) {
                Rational expectm = b.coeff(0) * Rational::factorial(static_cast<unsigned long>(m));
                if (f.apply(Poly::t(m)) != Poly(expectm)) return false;
            }
            for (int j = m + 1; j <= m + 5; ++j)
                if (f.apply(Poly::t(j)).degree() != j) return false;
            return verify_prop7_image(b);
        }};

    suites["theorem8"] = Suite{
        100,
        [](int, Rng& rng, const Caps&) {
            CaseData d;
            d.ints.push_back(rng.uniform(0, 3));  // kind1
            d.ints.push_back(rng.uniform(0, 3));  // kind2
            d.ints.push_back(rng.uniform(0, 3));  // combine: 0 none, 1 sum, 2 intersect, 3 scale
            d.ints.push_back(rng.uniform(1, 2));  // r1
            d.ints.push_back(rng.uniform(1, 2));  // r2
            d.polys.push_back(random_nonzero_poly(rng, 2, 3, 2));                   // b1
            d.polys.push_back(random_poly(rng, 2, 3, 2));                           // h1
            d.polys.push_back(random_nonzero_poly(rng, 2, 3, 2));                   // b2
            d.polys.push_back(random_poly(rng, 2, 3, 2));                           // h2
            d.polys.push_back(random_nonzero_poly(rng, 1, 3, 1));                   // scale factor
            d.polys.push_back(Poly(Rational(rng.uniform(-2, 2))));                  // lambda1
            d.polys.push_back(Poly(Rational(rng.uniform(-2, 2))));                  // lambda2
            return d;
        },
        [](const CaseData& d, const Caps& caps) {
            auto base = [&](int kind, const Poly& b, const Poly& h, const Poly& lam, int r) {
                if (b.is_zero()) throw std::domain_error("zero witness");
                switch (kind) {
                    case 0: return O_space(b);
                    case 1: return Oh_space(b, h);
                    case 2: return Subspace::make(pow(t_ - lam, r), {Poly(1)});
                    default: return Subspace::ideal(b);
                }
            };
            Subspace V = base(static_cast<int>(d.ints.at(0)), d.polys.at(0), d.polys.at(1), d.polys.at(5),
                              static_cast<int>(d.ints.at(3)));
            int combine = static_cast<int>(d.ints.at(2));
            if (combine == 1 || combine == 2) {
                Subspace W = base(static_cast<int>(d.ints.at(1)), d.polys.at(2), d.polys.at(3), d.polys.at(6),
                                  static_cast<int>(d.ints.at(4)));
                V = combine == 1 ? sum(V, W) : intersect(V, W);
            } else if (combine == 3) {
                if (d.polys.at(4).is_zero()) throw std::domain_error("zero scale");
                V = scale(V, RatFunc(d.polys.at(4), Poly(1)));
            }
            auto verdict = pd_decide(V, caps);
            const auto* pd = std::get_if<PdPositive>(&verdict);
            if (!pd) return false;
            if (!include(O_space(pd->witness), stabilizer(V).algebra)) return false;
            return roundtrip_gamma_inv_gamma(V, caps);
        }};

    suites["lemma10"] = Suite{
        20,
        [](int index, Rng& rng, const Caps&) {
            CaseData d;
            switch (index) {
                case 0: d.polys.push_back(t_ * t_ + 1); break;
                case 1: d.polys.push_back(t_ * t_ - 2); break;
                case 2: d.polys.push_back(pow(t_, 3) - 2); break;
                default: {
                    // quadratics and cubics with a Proven certificate
                    while (true) {
                        Poly q = rng.chance(50) ? t_ * t_ + Poly(static_cast<long>(rng.uniform(1, 9)))
                                                : pow(t_, 3) - Poly(static_cast<long>(rng.uniform(2, 9)));
                        if (irreducibility_certificate(q) == Certificate::Proven) {
                            d.polys.push_back(q);
                            break;
                        }
                    }
                    break;
                }
            }
            return d;
        },
        [](const CaseData& d, const Caps& caps) {
            const Poly& q = d.polys.at(0);
            if (q.degree() < 2 || irreducibility_certificate(q) != Certificate::Proven)
                throw std::domain_error("modulus not certified irreducible");
            Subspace V = Subspace::make(q, {Poly(1)});
            auto verdict = pd_decide(V, caps);
            if (!std::holds_alternative<PdNegative>(verdict)) return false;
            for (int p = 0; p <= caps.p_max; ++p)
                if (drv_truncation(V, p).dim() != 0) return false;
            auto I = IdealPresentation::from_generators({WeylOp(q)});
            Subspace s = star1(I, caps);
            return equal(s, Subspace::ideal(q)) && !equal(s, V);
        }};

    suites["lemma1-roundtrip"] = Suite{
        50,
        [](int, Rng& rng, const Caps&) {
            CaseData d;
            d.ints.push_back(rng.uniform(0, 2));  // kind
            d.polys.push_back(random_nonzero_poly(rng, 2, 3, 2));
            return d;
        },
        [](const CaseData& d, const Caps& caps) {
            int kind = static_cast<int>(d.ints.at(0));
            const Poly& b = d.polys.at(0);
            if (b.is_zero()) throw std::domain_error("zero input");
            IdealPresentation I;
            if (kind == 0) {
                I = IdealPresentation::from_generators({WeylOp(b)});
            } else if (kind == 1) {
                I = IdealPresentation::from_generators({build_f(b), WeylOp(b * b)});
            } else {
                I = gamma(O_space(b), caps, /*minimize=*/false).first;
            }
            auto rep = roundtrip_gamma_gamma_inv(I, caps);
            return rep.generators_in_drv && rep.truncations_agree;
        }};

    suites["nf-algebra"] = Suite{
        100,
        [](int, Rng& rng, const Caps&) {
            CaseData d;
            d.ops.push_back(random_weyl_op(rng, 4, 4));
            d.ops.push_back(random_weyl_op(rng, 4, 4));
            d.ops.push_back(random_weyl_op(rng, 4, 4));
            d.polys.push_back(random_poly(rng, 3, 4, 2));  // h for sigma
            d.polys.push_back(random_poly(rng, 5, 4, 2));  // action argument
            return d;
        },
        [](const CaseData& d, const Caps&) {
            const WeylOp &a = d.ops.at(0), &b = d.ops.at(1), &c = d.ops.at(2);
            const Poly &h = d.polys.at(0), &p = d.polys.at(1);
            if ((a * b) * c != a * (b * c)) return false;
            if (a * (b + c) != a * b + a * c) return false;
            if ((a * b).apply(p) != a.apply(b.apply(p))) return false;
            if (!a.is_zero() && !b.is_zero()) {
                if ((a * b).deg_d() != a.deg_d() + b.deg_d()) return false;
                if ((a * b).deg_t() != a.deg_t() + b.deg_t()) return false;
            }
            if (sigma(h, a * b) != sigma(h, a) * sigma(h, b)) return false;
            if (sigma(Poly(0) - h, sigma(h, a)) != a) return false;
            if (WeylOp::from_coeff_seq(a.coeff_seq()) != a) return false;
            return true;
        }};

    suites["bounds"] = Suite{
        500,
        [](int, Rng& rng, const Caps&) {
            CaseData d;
            Poly q = random_monic_poly(rng, static_cast<int>(rng.uniform(1, 4)), 4, 2);
            d.polys.push_back(q);
            d.polys.push_back(random_poly(rng, q.degree() + 3, 4, 2));  // gen 1
            d.polys.push_back(random_poly(rng, q.degree() - 1, 4, 2));  // gen 2
            d.polys.push_back(random_poly(rng, q.degree() + 5, 4, 2));  // membership probe
            d.ops.push_back(random_weyl_op(rng, 3, 3));
            return d;
        },
        [](const CaseData& d, const Caps&) {
            const Poly& q = d.polys.at(0);
            if (q.is_zero()) throw std::domain_error("zero modulus");
            Subspace V = Subspace::make(q, {d.polys.at(1), d.polys.at(2)});
            // fast finite criterion against the long direct loop
            if (in_DRV(d.ops.at(0), V) != oracle_in_DRV(d.ops.at(0), V, 3)) return false;
            // representation membership against the raw generator span
            const Poly& p = d.polys.at(3);
            int m0 = std::max({p.degree(), q.degree(), d.polys.at(1).degree(), d.polys.at(2).degree()});
            int dim = m0 + 1;
            QMat rows;
            auto push = [&](const Poly& g) {
                QVec v(static_cast<size_t>(dim), Rational(0));
                for (int i = 0; i <= g.degree(); ++i) v[static_cast<size_t>(i)] = g.coeff(i);
                rows.push_back(std::move(v));
            };
            if (!d.polys.at(1).is_zero()) push(d.polys.at(1));
            if (!d.polys.at(2).is_zero()) push(d.polys.at(2));
            for (int j = 0; j + q.degree() <= m0; ++j) push(q.shifted(j));
            QVec target(static_cast<size_t>(dim), Rational(0));
            for (int i = 0; i <= p.degree(); ++i) target[static_cast<size_t>(i)] = p.coeff(i);
            bool brute = express_in_span(rows, target).has_value();
            return V.contains(p) == brute;
        }};

    return suites;
}

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> s = build_suites();
    return s;
}

bool passes_or_invalid(const Suite& suite, const CaseData& d, const Caps& caps) {
    try {
        return suite.check(d, caps);
    } catch (const verification_error&) {
        return false;
    } catch (const std::exception&) {
        return true;  // shrunk into an invalid case
    }
}

CaseData shrink(const Suite& suite, CaseData failing, const Caps& caps) {
    for (int round = 0; round < 200; ++round) {
        bool advanced = false;
        for (auto& cand : shrink_candidates(failing)) {
            if (!passes_or_invalid(suite, cand, caps)) {
                failing = std::move(cand);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return failing;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, s] : suites()) n.push_back(name);
        return n;
    }();
    return names;
}

std::vector<CaseReport> run_suite(const std::string& name, std::uint64_t seed, const Caps& caps, int cases) {
    caps.validate();
    auto it = suites().find(name);
    if (it == suites().end()) throw std::domain_error("unknown suite: " + name);
    const Suite& suite = it->second;
    int total = cases > 0 ? cases : suite.default_cases;

    Rng rng(seed);
    std::vector<CaseReport> reports;
    reports.reserve(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) {
        CaseData data = suite.generate(i, rng, caps);
        CaseReport rep;
        rep.description = name + " case " + std::to_string(i);
        std::string err;
        try {
            rep.pass = suite.check(data, caps);
        } catch (const std::exception& e) {
            rep.pass = false;
            err = e.what();
        }
        if (!rep.pass) {
            CaseData small = shrink(suite, data, caps);
            rep.counterexample = serialize(small);
            if (!err.empty()) rep.counterexample += " [" + err + "]";
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace weyl
