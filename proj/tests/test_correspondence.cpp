#include <stdexcept>

#include "doctest.h"
#include "weyl/correspondence.hpp"
#include "weyl/errors.hpp"
#include "weyl/random_gen.hpp"

using namespace weyl;

namespace {
const Poly t = Poly::t();
const WeylOp T = WeylOp::t();
const WeylOp D = WeylOp::d();

Subspace k_plus_ideal(const Poly& q) { return Subspace::make(q, {Poly(1)}); }
}  // namespace

TEST_CASE("membership in D(R,V)") {
    Subspace V = k_plus_ideal(t * t);
    CHECK(in_DRV(T * D - WeylOp(1), V));
    CHECK_FALSE(in_DRV(WeylOp(1), V));

    Rng rng(61);
    for (int k = 0; k < 30; ++k) {
        Poly q = random_monic_poly(rng, static_cast<int>(rng.uniform(1, 4)));
        Subspace W = canonicalize(random_subspace_mod(rng, q));
        WeylOp g = random_weyl_op(rng, 3, 3);
        CHECK(in_DRV(WeylOp(conductor(W)) * g, W));
        CHECK(in_DRV(WeylOp(0), W));
    }
}

TEST_CASE("membership criterion agrees with longer direct checks") {
    Rng rng(62);
    for (int k = 0; k < 120; ++k) {
        Poly q = random_monic_poly(rng, static_cast<int>(rng.uniform(1, 3)));
        Subspace V = canonicalize(random_subspace_mod(rng, q));
        WeylOp d = random_weyl_op(rng, 3, 3);
        bool fast = in_DRV(d, V);
        bool slow = true;
        int bound = 3 * drv_bound(std::max(d.deg_d(), 0), V.modulus().degree());
        for (int n = 0; n <= bound && slow; ++n) slow = V.contains(d.apply(Poly::t(n)));
        CHECK(fast == slow);
    }
}

TEST_CASE("direct truncations") {
    Subspace V1 = k_plus_ideal(t * t + 1);
    for (int p = 0; p <= 3; ++p) CHECK(drv_truncation(V1, p).dim() == 0);

    Subspace V2 = Subspace::ideal((t * t) - 2);
    for (int p = 0; p <= 3; ++p) CHECK(drv_truncation(V2, p).dim() == 0);

    Subspace V3 = k_plus_ideal(t * t);
    Truncation tr = drv_truncation(V3, 1);
    REQUIRE(tr.dim() == 1);
    CHECK(tr.ops[0] == T * D - WeylOp(1));
}

TEST_CASE("truncation monotonicity in the degree cap") {
    Rng rng(63);
    for (int k = 0; k < 25; ++k) {
        Poly q = random_monic_poly(rng, static_cast<int>(rng.uniform(1, 3)));
        Subspace V = canonicalize(random_subspace_mod(rng, q));
        Truncation a = drv_truncation(V, 1);
        Truncation b = drv_truncation(V, 2);
        for (const auto& op : a.ops) CHECK(in_DRV(op, V));
        CHECK(a.dim() <= b.dim());
        for (const auto& op : b.ops) CHECK(in_DRV(op, V));
    }
}

TEST_CASE("star1 fixtures") {
    Caps caps;
    auto I1 = IdealPresentation::from_generators({WeylOp(t * t + 1)});
    CHECK(equal(star1(I1, caps), Subspace::ideal(t * t + 1)));

    auto I2 = IdealPresentation::from_generators({T * D - WeylOp(1), WeylOp(t * t), WeylOp(t * t * t)});
    CHECK(equal(star1(I2, caps), k_plus_ideal(t * t)));

    auto I3 = IdealPresentation::from_generators({WeylOp(1)});
    CHECK(equal(star1(I3, caps), Subspace::whole_ring()));

    IdealPresentation no_member;
    no_member.generators = {D + T};
    CHECK_THROWS_AS(star1(no_member, caps), std::domain_error);
}

TEST_CASE("star1 superset law and generator membership") {
    Caps caps;
    Rng rng(64);
    for (int k = 0; k < 25; ++k) {
        Poly q0 = random_monic_poly(rng, static_cast<int>(rng.uniform(1, 3)));
        std::vector<WeylOp> gens{WeylOp(q0)};
        int n = static_cast<int>(rng.uniform(0, 2));
        for (int i = 0; i < n; ++i) gens.push_back(WeylOp(q0) * random_weyl_op(rng, 2, 2));
        auto I = IdealPresentation::from_generators(gens);
        Subspace V = star1(I, caps);
        CHECK(include(Subspace::ideal(*I.poly_member), V));
        for (const auto& g : I.generators) CHECK(in_DRV(g, V));
    }
}

TEST_CASE("polynomial member search") {
    Caps caps;
    auto I1 = IdealPresentation::from_generators({WeylOp(t * t * t), T * D - WeylOp(1)});
    auto p1 = find_poly_in_ideal(I1, caps);
    REQUIRE(p1.has_value());
    CHECK(*p1 == t * t * t);

    IdealPresentation I2;
    I2.generators = {pow(D, 2), T * D - WeylOp(2)};
    auto p2 = find_poly_in_ideal(I2, caps);
    REQUIRE(p2.has_value());
    CHECK(p2->is_one());

    IdealPresentation I3;
    I3.generators = {D + T};
    CHECK_FALSE(find_poly_in_ideal(I3, caps).has_value());
}

TEST_CASE("decision procedure fixtures") {
    Caps caps;
    auto v1 = pd_decide(O_space(t), caps);
    auto* pd1 = std::get_if<PdPositive>(&v1);
    REQUIRE(pd1 != nullptr);
    CHECK(pd1->r == 1);
    CHECK(pd1->witness == t * t);

    auto v2 = pd_decide(k_plus_ideal(t * t + 1), caps);
    auto* neg = std::get_if<PdNegative>(&v2);
    REQUIRE(neg != nullptr);
    CHECK(neg->rule == "lemma10");
    CHECK(neg->q == t * t + 1);

    auto v3 = pd_decide(Subspace::ideal(pow(t, 3) + t - 1), caps);
    auto* pd3 = std::get_if<PdPositive>(&v3);
    REQUIRE(pd3 != nullptr);
    CHECK(pd3->r == 1);

    auto v4 = pd_decide(Subspace::whole_ring(), caps);
    auto* pd4 = std::get_if<PdPositive>(&v4);
    REQUIRE(pd4 != nullptr);
    CHECK(pd4->r == 0);
    CHECK(pd4->witness.is_one());
}

TEST_CASE("negative rule implies empty truncations") {
    Caps caps;
    for (const Poly& q : {t * t + 1, (t * t) - 2, pow(t, 3) - 2}) {
        Subspace V = k_plus_ideal(q);
        auto v = pd_decide(V, caps);
        CHECK(std::holds_alternative<PdNegative>(v));
        for (int p = 0; p <= 6; ++p) CHECK(drv_truncation(V, p).dim() == 0);
        // star1 of the principal ideal gives qR, not V
        auto I = IdealPresentation::from_generators({WeylOp(q)});
        Subspace s = star1(I, caps);
        CHECK(equal(s, Subspace::ideal(q)));
        CHECK_FALSE(equal(s, V));
    }
}

TEST_CASE("generator families") {
    Caps caps;
    auto [Iq, repq] = gamma(Subspace::ideal(t * t - t), caps);
    CHECK(repq.verified);
    REQUIRE(Iq.generators.size() == 1);
    CHECK(Iq.generators[0] == WeylOp((t * t - t)));

    auto [Io, repo] = gamma(O_space(t), caps);
    CHECK(repo.verified);
    bool has_f = false, has_q = false;
    for (const auto& g : Io.generators) {
        has_f = has_f || g == T * D - WeylOp(1);
        has_q = has_q || g == WeylOp(t * t);
    }
    CHECK(has_f);
    CHECK(has_q);

    auto [Ir, repr] = gamma(Subspace::whole_ring(), caps);
    CHECK(repr.verified);
    REQUIRE(Ir.generators.size() == 1);
    CHECK(Ir.generators[0] == WeylOp(1));

    CHECK_THROWS_AS(gamma(k_plus_ideal(t * t + 1), caps), std::domain_error);
}

TEST_CASE("round trips") {
    Caps caps;
    CHECK(roundtrip_gamma_inv_gamma(O_space(t * t), caps));
    CHECK(roundtrip_gamma_inv_gamma(Subspace::whole_ring(), caps));
    CHECK(roundtrip_gamma_inv_gamma(Subspace::ideal(t * t + 1), caps));

    auto I = IdealPresentation::from_generators({WeylOp(t * t + 3)});
    auto rep = roundtrip_gamma_gamma_inv(I, caps);
    CHECK(rep.generators_in_drv);
    CHECK(rep.truncations_agree);
    CHECK(equal(rep.v_prime, Subspace::ideal(t * t + 3)));
}

TEST_CASE("image of the f-element") {
    CHECK(verify_prop7_image(t));
    CHECK(verify_prop7_image(t * t));
    CHECK(verify_prop7_image(Poly(7)));
    CHECK(verify_prop7_image(t * t + 1));
    CHECK(verify_prop7_image(t * (t - 1)));
}
