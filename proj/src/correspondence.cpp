#include "weyl/correspondence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "weyl/errors.hpp"
#include "weyl/factor.hpp"
#include "weyl/random_gen.hpp"

namespace weyl {

void Caps::validate() const {
    if (p_max < 1 || t_max < 1 || r_max < 1) throw std::domain_error("caps must be positive");
    if (window < 2) throw std::domain_error("window must be at least 2");
}

IdealPresentation IdealPresentation::from_generators(std::vector<WeylOp> gens) {
    std::vector<WeylOp> kept;
    for (auto& g : gens)
        if (!g.is_zero()) kept.push_back(std::move(g));
    if (kept.empty()) throw std::domain_error("empty generator list");
    IdealPresentation I;
    I.generators = std::move(kept);
    for (const auto& g : I.generators) {
        if (g.deg_d() == 0) {
            Poly p = g.coeff_of_d(0);
            Poly m = I.poly_member ? gcd_monic(*I.poly_member, p) : p.monic();
            I.poly_member = m;
            I.member_verified = true;  // a polynomial combination of generators
        }
    }
    return I;
}

int drv_bound(int p, int deg_q) { return (p + 1) * deg_q + p; }

namespace {

/// Coordinates for operators with t-degree < D and D-degree <= J,
/// ordered D-degree major descending, then t-degree descending. The
/// ordering is independent of J up to a shift, so re-embedding between
/// different J values preserves echelon form.
struct OpCoords {
    int D;
    int J;
    int cols() const { return D * (J + 1); }
    int col(int i, int j) const { return (J - j) * D + (D - 1 - i); }
    QVec encode(const WeylOp& g) const {
        QVec v(static_cast<size_t>(cols()), Rational(0));
        for (const auto& [k, c] : g.terms()) v[static_cast<size_t>(col(k.first, k.second))] = c;
        return v;
    }
    WeylOp decode(const QVec& v) const {
        WeylOp g;
        for (int j = 0; j <= J; ++j)
            for (int i = 0; i < D; ++i) {
                const Rational& c = v[static_cast<size_t>(col(i, j))];
                if (!c.is_zero()) g += WeylOp::monomial(c, i, j);
            }
        return g;
    }
};

QVec poly_to_vec(const Poly& p, int dim) {
    QVec v(static_cast<size_t>(dim), Rational(0));
    for (int i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(i)] = p.coeff(i);
    return v;
}

struct BasisView {
    QMat rows;
    std::vector<int> pivots;
};

BasisView basis_view(const Subspace& V) {
    BasisView bv;
    int dim = V.modulus().degree();
    for (const auto& b : V.basis()) bv.rows.push_back(poly_to_vec(b, dim));
    for (const auto& row : bv.rows) {
        int p0 = 0;
        while (row[static_cast<size_t>(p0)].is_zero()) ++p0;
        bv.pivots.push_back(p0);
    }
    return bv;
}

/// Residues of t^e mod q, reduced against the basis of V, for e <= emax.
std::vector<QVec> reduced_monomial_residues(const Subspace& V, const BasisView& bv, int emax) {
    const Poly& q = V.modulus();
    int dim = q.degree();
    std::vector<QVec> red(static_cast<size_t>(emax) + 1);
    Poly cur(1);
    for (int e = 0; e <= emax; ++e) {
        red[static_cast<size_t>(e)] = reduce_against(poly_to_vec(cur, dim), bv.rows, bv.pivots);
        cur = divrem(cur.shifted(1), q).second;
    }
    return red;
}

Truncation make_truncation(int p, const Poly& modulus, QMat rows) {
    rref(rows);
    Truncation tr;
    tr.p = p;
    tr.modulus = modulus;
    OpCoords coords{modulus.degree(), p};
    for (const auto& r : rows) tr.ops.push_back(coords.decode(r));
    tr.rows = std::move(rows);
    return tr;
}

/// Normalize so the leading term (D-degree major, then t-degree) is 1.
WeylOp normalize_leading(const WeylOp& g) {
    if (g.is_zero()) return g;
    std::pair<int, int> best{-1, -1};  // (j, i)
    Rational c;
    for (const auto& [k, v] : g.terms()) {
        std::pair<int, int> key{k.second, k.first};
        if (key > best) {
            best = key;
            c = v;
        }
    }
    return c.inverse() * g;
}

}  // namespace

WeylOp reduce_op_mod(const WeylOp& g, const Poly& q) {
    auto seq = g.coeff_seq();
    for (auto& a : seq) a = divrem(a, q).second;
    return WeylOp::from_coeff_seq(seq);
}

bool in_DRV(const WeylOp& d, const Subspace& V_in, int slack) {
    if (d.is_zero()) return true;
    Subspace V = canonicalize(V_in);
    if (V.modulus().degree() == 0) return true;
    int p = std::max(d.deg_d(), 0);
    int bound = drv_bound(p, V.modulus().degree()) + std::max(slack, 0);
    for (int n = 0; n <= bound; ++n)
        if (!V.contains(d.apply(Poly::t(n)))) return false;
    return true;
}

Truncation drv_truncation(const Subspace& V_in, int p, int slack) {
    if (p < 0) throw std::domain_error("negative degree cap");
    Subspace V = canonicalize(V_in);
    const Poly& q = V.modulus();
    int D = q.degree();
    if (D == 0) return make_truncation(p, q, {});

    OpCoords coords{D, p};
    BasisView bv = basis_view(V);
    int N = drv_bound(p, D) + std::max(slack, 0);
    auto red = reduced_monomial_residues(V, bv, N + D);

    // d = sum x_{ij} t^i D^j maps t^n to sum x_{ij} n^(j) t^(n-j+i); for
    // each n every residual coordinate of the image must vanish.
    QMat eqs;
    for (int n = 0; n <= N; ++n) {
        for (int c = 0; c < D; ++c) {
            QVec eq(static_cast<size_t>(coords.cols()), Rational(0));
            bool nonzero = false;
            for (int j = 0; j <= std::min(p, n); ++j) {
                Rational ff = Rational::falling_factorial(n, j);
                if (ff.is_zero()) continue;
                for (int i = 0; i < D; ++i) {
                    const QVec& r = red[static_cast<size_t>(n - j + i)];
                    Rational val = ff * r[static_cast<size_t>(c)];
                    if (!val.is_zero()) {
                        eq[static_cast<size_t>(coords.col(i, j))] = val;
                        nonzero = true;
                    }
                }
            }
            if (nonzero) eqs.push_back(std::move(eq));
        }
    }
    QMat sol = kernel_basis(std::move(eqs), coords.cols());
    return make_truncation(p, q, std::move(sol));
}

bool same_span(const Truncation& a, const Truncation& b) {
    return a.p == b.p && a.modulus == b.modulus && a.rows == b.rows;
}

namespace {

/// Row space of all in-cap products g * t^a * D^c reduced mod q, kept in
/// echelon form over coordinates with D-degree up to J. Slices for every
/// p <= p_max fall out of one elimination.
struct IdealSliceTable {
    Poly q;
    int D = 0;
    int J = 0;
    QMat rows;  // rref

    Truncation slice(int p) const {
        OpCoords coords{D, J};
        OpCoords out{D, p};
        QMat kept;
        for (const auto& row : rows) {
            int pc = 0;
            while (row[static_cast<size_t>(pc)].is_zero()) ++pc;
            // pivot in the block of D-degree <= p means the whole row is
            int shift = (J - p) * D;
            if (pc < shift) continue;
            QVec v(static_cast<size_t>(out.cols()), Rational(0));
            for (int c = pc; c < coords.cols(); ++c) v[static_cast<size_t>(c - shift)] = row[static_cast<size_t>(c)];
            kept.push_back(std::move(v));
        }
        Truncation tr;
        tr.p = p;
        tr.modulus = q;
        for (const auto& r : kept) tr.ops.push_back(out.decode(r));
        tr.rows = std::move(kept);
        return tr;
    }
};

IdealSliceTable build_slice_table(const std::vector<WeylOp>& gens, const Poly& q0, const Caps& caps) {
    IdealSliceTable table;
    table.q = q0.monic();
    table.D = table.q.degree();
    if (table.D == 0) {
        table.J = caps.p_max;
        return table;
    }
    int c_cap = caps.p_max + caps.window;

    std::vector<WeylOp> all = gens;
    all.push_back(WeylOp(table.q));
    std::vector<WeylOp> reduced_products;
    int J = caps.p_max;
    for (const auto& g : all) {
        if (g.is_zero()) continue;
        for (int c = 0; c <= c_cap; ++c) {
            WeylOp gc = g * pow(WeylOp::d(), c);
            for (int a = 0; a <= caps.t_max; ++a) {
                WeylOp prod = reduce_op_mod(gc, table.q);
                if (!prod.is_zero()) {
                    J = std::max(J, prod.deg_d());
                    reduced_products.push_back(prod);
                }
                gc = gc * WeylOp::t();  // right multiplication by t
            }
        }
    }
    table.J = J;
    OpCoords coords{table.D, J};
    QMat m;
    m.reserve(reduced_products.size());
    for (const auto& g : reduced_products) m.push_back(coords.encode(g));
    rref(m);
    table.rows = std::move(m);
    return table;
}

}  // namespace

Truncation ideal_truncation(const std::vector<WeylOp>& gens, const Poly& q0, const Caps& caps, int p) {
    caps.validate();
    if (q0.is_zero()) throw std::domain_error("zero polynomial member");
    return build_slice_table(gens, q0, caps).slice(p);
}

Subspace star1(const IdealPresentation& I, const Caps& caps, int slack) {
    caps.validate();
    if (!I.poly_member) throw std::domain_error("no polynomial member known");
    Poly q0 = I.poly_member->monic();
    if (q0.degree() == 0) return Subspace::whole_ring();
    std::vector<Poly> images;
    images.push_back(Poly(0));
    for (const auto& g : I.generators) {
        if (g.is_zero()) continue;
        int pg = std::max(g.deg_d(), 0);
        int bound = drv_bound(pg, q0.degree()) + std::max(slack, 0);
        for (int n = 0; n <= bound; ++n) images.push_back(g.apply(Poly::t(n)));
    }
    return canonicalize(Subspace::make(q0, images));
}

namespace {

struct EliminationResult {
    std::optional<Poly> found;
    bool syzygies_only = false;
};

/// One elimination round at fixed multiplier degree bounds: find a
/// combination sum g_i h_i with D-degree zero and nonzero value.
EliminationResult eliminate_round(const std::vector<WeylOp>& gens, int dt, int dp) {
    // product vectors for every (gen, a, c)
    std::vector<WeylOp> products;
    for (const auto& g : gens)
        for (int c = 0; c <= dp; ++c) {
            WeylOp gc = g * pow(WeylOp::d(), c);
            for (int a = 0; a <= dt; ++a) {
                products.push_back(gc);
                gc = gc * WeylOp::t();
            }
        }
    int maxI = 0, maxJ = 0;
    for (const auto& pr : products) {
        maxI = std::max(maxI, std::max(pr.deg_t(), 0));
        maxJ = std::max(maxJ, std::max(pr.deg_d(), 0));
    }
    int tdim = maxI + 1;
    int ncols = tdim * (maxJ + 1);

    // equations: every coordinate with D-degree >= 1 vanishes
    QMat eqs;
    for (int c = tdim; c < ncols; ++c) {
        QVec eq(products.size(), Rational(0));
        bool nonzero = false;
        for (size_t k = 0; k < products.size(); ++k) {
            int j = c / tdim, i = c % tdim;
            for (const auto& [key, val] : products[k].terms()) {
                if (key.first == i && key.second == j) {
                    eq[k] = val;
                    nonzero = true;
                }
            }
        }
        if (nonzero) eqs.push_back(std::move(eq));
    }
    QMat combos = kernel_basis(std::move(eqs), static_cast<int>(products.size()));
    EliminationResult res;
    for (const auto& x : combos) {
        WeylOp acc;
        for (size_t k = 0; k < products.size(); ++k)
            if (!x[k].is_zero()) acc += x[k] * products[k];
        if (acc.is_zero()) continue;
        Poly p = acc.coeff_of_d(0);
        if (!p.is_zero() && acc.deg_d() == 0) {
            res.found = p.monic();
            return res;
        }
    }
    res.syzygies_only = !combos.empty();
    return res;
}

}  // namespace

std::optional<Poly> find_poly_in_ideal(const IdealPresentation& I, const Caps& caps) {
    caps.validate();
    std::optional<Poly> direct;
    for (const auto& g : I.generators) {
        if (g.is_zero() || g.deg_d() != 0) continue;
        Poly p = g.coeff_of_d(0);
        direct = direct ? gcd_monic(*direct, p) : p.monic();
    }
    if (direct) return direct;

    for (int s = 1;; s *= 2) {
        int dt = std::min(s, caps.t_max);
        int dp = std::min(s, caps.p_max);
        auto round = eliminate_round(I.generators, dt, dp);
        if (round.found) return round.found;
        if (dt == caps.t_max && dp == caps.p_max) break;
    }
    return std::nullopt;
}

IdealPresentation with_poly_member(const IdealPresentation& I, const Caps& caps) {
    IdealPresentation out = I;
    if (!out.poly_member) {
        auto found = find_poly_in_ideal(I, caps);
        if (!found) throw std::domain_error("no polynomial member known");
        out.poly_member = found->monic();
        out.member_verified = true;  // produced by elimination from the generators
    }
    return out;
}

PdVerdict pd_decide(const Subspace& V_in, const Caps& caps, int slack) {
    caps.validate();
    Subspace V = canonicalize(V_in);
    const Poly& q = V.modulus();

    if (q.degree() == 0) return PdPositive{0, Poly(1), {}};

    // fast stabilizer witness search on conductor powers
    StabilizerReport stab = stabilizer(V);
    for (int r = 1; r <= caps.r_max; ++r) {
        Poly qr = pow(q, r);
        if (include(O_space(qr), stab.algebra)) return PdPositive{r, qr, {}};
    }

    // definitive negative rule: codimension-one residue over a proven
    // irreducible modulus of degree >= 2
    if (V.basis().size() == 1 && V.basis()[0].is_one() && q.degree() >= 2 &&
        irreducibility_certificate(q) == Certificate::Proven)
        return PdNegative{"lemma10", q};

    // realizer route: grow the D-degree cap until the images of the
    // truncation at 1 span all of V mod qR
    Subspace last = Subspace::ideal(q);
    BasisView bv = basis_view(V);
    for (int p = 0; p <= caps.p_max; ++p) {
        Truncation T = drv_truncation(V, p, slack);
        std::vector<Poly> images;
        images.push_back(Poly(0));
        for (const auto& d : T.ops) images.push_back(d.apply(Poly(1)));
        Subspace E = canonicalize(Subspace::make(q, images));
        last = E;
        if (!equal(E, V)) continue;

        // choose realizers per basis class: smallest prefix of the
        // truncation basis (sorted by D-degree then t-degree) that
        // expresses the class
        std::vector<WeylOp> sorted = T.ops;
        std::sort(sorted.begin(), sorted.end(), [](const WeylOp& a, const WeylOp& b) {
            return std::pair(a.deg_d(), a.deg_t()) < std::pair(b.deg_d(), b.deg_t());
        });
        QMat image_rows;
        for (const auto& dop : sorted) image_rows.push_back(V.residue_vec(dop.apply(Poly(1))));
        std::vector<WeylOp> realizers;
        int r = 0;
        for (const auto& w : V.basis()) {
            QVec target = V.residue_vec(w);
            WeylOp realizer;
            bool done = false;
            for (size_t len = 1; len <= sorted.size() && !done; ++len) {
                QMat prefix(image_rows.begin(), image_rows.begin() + static_cast<long>(len));
                auto combo = express_in_span(prefix, target);
                if (!combo) continue;
                for (size_t k = 0; k < len; ++k)
                    if (!(*combo)[k].is_zero()) realizer += (*combo)[k] * sorted[k];
                done = true;
            }
            if (!done) throw verification_error("realizer extraction failed after span equality");
            realizers.push_back(realizer);
            r = std::max(r, realizer.deg_d());
        }
        r = std::max(r, 1);
        Poly witness = pow(q, r);
        if (!include(O_space(witness), stab.algebra))
            throw verification_error("realizer witness fails to stabilize");

        // commutator spot check: realizers against sampled stabilizer members
        Rng rng(0xA11CEuLL);
        Subspace oqr = O_space(witness);
        for (int k = 0; k < 3; ++k) {
            Poly s = random_member(rng, oqr);
            for (const auto& fi : realizers) {
                WeylOp c = commutator(fi, WeylOp(s));
                for (const Poly& aj : c.coeff_seq())
                    if (!divides(q, aj)) throw verification_error("commutator left the conductor ideal");
            }
        }
        return PdPositive{r, witness, realizers};
    }
    return PdInconclusive{caps, last};
}

namespace {

std::vector<WeylOp> dedupe_ops(const std::vector<WeylOp>& in) {
    std::vector<WeylOp> out;
    for (const auto& g : in) {
        bool seen = false;
        for (const auto& h : out) seen = seen || h == g;
        if (!seen && !g.is_zero()) out.push_back(g);
    }
    return out;
}

}  // namespace

std::pair<IdealPresentation, GammaReport> gamma(const Subspace& V_in, const Caps& caps, bool minimize, int slack) {
    caps.validate();
    Subspace V = canonicalize(V_in);
    PdVerdict verdict = pd_decide(V, caps, slack);
    const auto* pd = std::get_if<PdPositive>(&verdict);
    if (!pd) throw std::domain_error("unverified positive decomposability status");

    const Poly& q = V.modulus();
    GammaReport report;
    report.p_checked = caps.p_max;

    if (q.degree() == 0) {
        IdealPresentation I = IdealPresentation::from_generators({WeylOp(1)});
        report.verified = true;
        return {I, report};
    }

    const Poly& b = pd->witness;
    WeylOp fb = build_f(b);
    Poly b2 = b * b;

    std::vector<Poly> weights = V.basis();
    weights.push_back(q);
    std::vector<WeylOp> gens;
    for (const auto& w : weights) {
        gens.push_back(reduce_op_mod(WeylOp(w) * fb, q));
        gens.push_back(reduce_op_mod(WeylOp(w * b2), q));
    }
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j) gens.push_back(reduce_op_mod(WeylOp(q.shifted(i)) * pow(WeylOp::d(), j), q));
    for (auto& g : gens) g = normalize_leading(g);
    gens = dedupe_ops(gens);

    for (const auto& g : gens)
        if (!in_DRV(g, V, slack)) throw verification_error("generator fails direct membership");

    std::vector<Truncation> targets;
    for (int p = 0; p <= caps.p_max; ++p) targets.push_back(drv_truncation(V, p, slack));

    auto check_all = [&](const std::vector<WeylOp>& gs, std::vector<int>* missing_at) {
        IdealSliceTable table = build_slice_table(gs, q, caps);
        bool all_ok = true;
        for (int p = 0; p <= caps.p_max; ++p) {
            Truncation slice = table.slice(p);
            const Truncation& want = targets[static_cast<size_t>(p)];
            if (!same_span(slice, want)) {
                all_ok = false;
                if (missing_at) missing_at->push_back(p);
                // soundness direction: the generated slice must embed in
                // the direct truncation
                BasisView bw;
                bw.rows = want.rows;
                for (const auto& row : bw.rows) {
                    int p0 = 0;
                    while (row[static_cast<size_t>(p0)].is_zero()) ++p0;
                    bw.pivots.push_back(p0);
                }
                for (const auto& row : slice.rows)
                    if (!is_zero_vec(reduce_against(row, bw.rows, bw.pivots)))
                        throw verification_error("generated slice escapes the direct truncation");
            }
        }
        return all_ok;
    };

    // self-repair: adjoin any truncation classes the generated slices miss
    for (int round = 0; round < caps.p_max + 2; ++round) {
        std::vector<int> missing;
        if (check_all(gens, &missing)) break;
        report.enlarged = true;
        IdealSliceTable table = build_slice_table(gens, q, caps);
        for (int p : missing) {
            Truncation slice = table.slice(p);
            BasisView bs;
            bs.rows = slice.rows;
            for (const auto& row : bs.rows) {
                int p0 = 0;
                while (row[static_cast<size_t>(p0)].is_zero()) ++p0;
                bs.pivots.push_back(p0);
            }
            for (const auto& d : targets[static_cast<size_t>(p)].ops) {
                OpCoords coords{q.degree(), p};
                if (!is_zero_vec(reduce_against(coords.encode(d), bs.rows, bs.pivots))) {
                    gens.push_back(normalize_leading(d));
                    ++report.added_count;
                }
            }
        }
        gens = dedupe_ops(gens);
    }
    if (!check_all(gens, nullptr)) throw verification_error("truncation verification failed after repair");

    if (minimize) {
        // drop generators whose removal keeps every slice intact
        for (size_t k = gens.size(); k-- > 0;) {
            if (gens.size() == 1) break;
            std::vector<WeylOp> trial;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != k) trial.push_back(gens[j]);
            bool ok = false;
            try {
                ok = check_all(trial, nullptr);
            } catch (const verification_error&) {
                ok = false;
            }
            if (ok) gens = std::move(trial);
        }
    }

    report.verified = true;
    IdealPresentation I;
    I.generators = gens;
    I.poly_member = q;
    I.member_verified = true;  // q is the conductor and a generator of the q-block
    // ensure q itself is present so the polynomial member is expressible
    bool has_q = false;
    for (const auto& g : I.generators) has_q = has_q || g == WeylOp(q);
    if (!has_q) I.generators.insert(I.generators.begin(), WeylOp(q));
    I.generators = dedupe_ops(I.generators);
    return {I, report};
}

bool roundtrip_gamma_inv_gamma(const Subspace& V, const Caps& caps, int slack) {
    auto [I, report] = gamma(V, caps, /*minimize=*/false, slack);
    if (!report.verified) return false;
    return equal(star1(I, caps, slack), V);
}

RoundtripReport roundtrip_gamma_gamma_inv(const IdealPresentation& I_in, const Caps& caps, int slack) {
    caps.validate();
    IdealPresentation I = with_poly_member(I_in, caps);
    RoundtripReport rep{Subspace::whole_ring(), true, true, caps.p_max};
    rep.v_prime = star1(I, caps, slack);
    for (const auto& g : I.generators)
        rep.generators_in_drv = rep.generators_in_drv && in_DRV(g, rep.v_prime, slack);

    Subspace Vp = canonicalize(rep.v_prime);
    const Poly q = Vp.modulus();
    IdealSliceTable table = build_slice_table(I.generators, q, caps);
    for (int p = 0; p <= caps.p_max; ++p) {
        Truncation slice = table.slice(p);
        Truncation want = drv_truncation(Vp, p, slack);
        if (!same_span(slice, want)) rep.truncations_agree = false;
    }
    return rep;
}

bool verify_prop7_image(const Poly& b, int slack) {
    if (b.is_zero()) throw std::domain_error("zero polynomial");
    WeylOp f = build_f(b);
    Subspace V = O_space(b);
    if (!in_DRV(f, V, slack)) return false;
    int m = b.degree();
    if (m == 0) return true;

    // dimension of the image residues mod b^2 must reach dim V / b^2 R
    Poly w = (b * b).monic();
    int dim = w.degree();
    std::vector<Poly> lifted = V.basis();
    for (int j = 0; j + V.modulus().degree() < dim; ++j) lifted.push_back(V.modulus().shifted(j));
    Subspace Vw = Subspace::make(w, lifted);
    int target_dim = static_cast<int>(Vw.basis().size());

    int bound = m + (m + 1) * dim + std::max(slack, 0);
    QMat image;
    for (int n = 0; n <= bound; ++n) image.push_back(poly_to_vec(divrem(f.apply(Poly::t(n)), w).second, dim));
    rref(image);
    return static_cast<int>(image.size()) == target_dim;
}

}  // namespace weyl
