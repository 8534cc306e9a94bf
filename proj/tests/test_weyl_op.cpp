#include <stdexcept>

#include "doctest.h"
#include "weyl/random_gen.hpp"
#include "weyl/subspace.hpp"
#include "weyl/weyl_op.hpp"

using namespace weyl;

namespace {
const WeylOp T = WeylOp::t();
const WeylOp D = WeylOp::d();
const Poly t = Poly::t();
}  // namespace

TEST_CASE("normal ordering") {
    CHECK(D * T == T * D + WeylOp(1));
    CHECK(pow(D, 2) * T == T * pow(D, 2) + 2 * D);
    CHECK(commutator(D, T) == WeylOp(1));
    Rng rng(21);
    WeylOp d = random_weyl_op(rng, 3, 3);
    CHECK(commutator(d, d).is_zero());
}

TEST_CASE("product agrees with composed action") {
    // oracle for the normal-ordering rule: compare actions on t^n
    Rng rng(22);
    for (int k = 0; k < 100; ++k) {
        WeylOp a = random_weyl_op(rng, 3, 3);
        WeylOp b = random_weyl_op(rng, 3, 3);
        WeylOp ab = a * b;
        for (int n = 0; n <= 5; ++n) {
            Poly tn = Poly::t(n);
            CHECK(ab.apply(tn) == a.apply(b.apply(tn)));
        }
    }
}

TEST_CASE("apply") {
    CHECK((T * D - WeylOp(1)).apply(t * t * t) == 2 * (t * t * t));
    Rng rng(23);
    Poly p = random_poly(rng, 6);
    CHECK(WeylOp(1).apply(p) == p);
    WeylOp f = WeylOp::monomial(1, 2, 2) - 2 * (T * D) + WeylOp(2);
    CHECK(f.apply(t).is_zero());
}

TEST_CASE("ring structure on random triples") {
    Rng rng(24);
    for (int k = 0; k < 60; ++k) {
        WeylOp a = random_weyl_op(rng, 4, 4);
        WeylOp b = random_weyl_op(rng, 4, 4);
        WeylOp c = random_weyl_op(rng, 4, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        if (!a.is_zero() && !b.is_zero()) {
            CHECK((a * b).deg_d() == a.deg_d() + b.deg_d());
            CHECK((a * b).deg_t() == a.deg_t() + b.deg_t());
        }
    }
}

TEST_CASE("coefficient view round-trips") {
    Rng rng(25);
    for (int k = 0; k < 100; ++k) {
        WeylOp a = random_weyl_op(rng, 5, 5);
        CHECK(WeylOp::from_coeff_seq(a.coeff_seq()) == a);
    }
}

TEST_CASE("sigma substitution") {
    CHECK(sigma(Poly(1), D) == D - WeylOp(1));
    Rng rng(26);
    Poly h = random_poly(rng, 3);
    CHECK(sigma(h, T) == T);
    CHECK(sigma(t, D * T) == T * D - WeylOp(t * t) + WeylOp(1));
}

TEST_CASE("sigma is a unital automorphism") {
    Rng rng(27);
    for (int k = 0; k < 50; ++k) {
        Poly h = random_poly(rng, 3);
        WeylOp a = random_weyl_op(rng, 3, 3);
        WeylOp b = random_weyl_op(rng, 3, 3);
        CHECK(sigma(h, a * b) == sigma(h, a) * sigma(h, b));
        CHECK(sigma(h, a + b) == sigma(h, a) + sigma(h, b));
        CHECK(sigma(h, WeylOp(1)) == WeylOp(1));
        CHECK(sigma(Poly(0), a) == a);
        CHECK(sigma(Poly(0) - h, sigma(h, a)) == a);
    }
}

TEST_CASE("principal coset membership") {
    CHECK(principal_coset_member(T * D - WeylOp(1), t, Poly(0)));
    CHECK_FALSE(principal_coset_member(WeylOp(1), t, Poly(0)));
    CHECK_THROWS_AS(principal_coset_member(D, Poly(0), Poly(0)), std::domain_error);

    // left-multiple regression fixtures: exact recorded outcomes
    CHECK_FALSE(principal_coset_member(WeylOp(t) * WeylOp(1), t, Poly(0)));    // D*t = t*D + 1
    CHECK(principal_coset_member(WeylOp(t * t) * D, t, Poly(0)));              // D*t^2*D = t^2*D^2 + 2*t*D
    CHECK_FALSE(principal_coset_member(WeylOp(t) * D, t - 1, Poly(1)));        // unit coefficient survives
    // D*(t-1)*t*D = (t^2-t)*D^2 + (2t-1)*D and (t-1) does not divide 2t-1
    CHECK_FALSE(principal_coset_member(WeylOp(t - 1) * (T * D), t - 1, Poly(0)));
    // D*(t-1)^2*D = (t-1)^2*D^2 + 2(t-1)*D, all coefficients divisible
    CHECK(principal_coset_member(WeylOp((t - 1) * (t - 1)) * D, t - 1, Poly(0)));

    // left-factor pattern b*g: decided by expansion, outcomes vary
    Rng rng(28);
    int true_count = 0;
    for (int k = 0; k < 50; ++k) {
        Poly b = random_nonzero_poly(rng, 3);
        Poly h = random_poly(rng, 2);
        WeylOp g = random_weyl_op(rng, 2, 2);
        WeylOp bg = WeylOp(b) * g;
        bool got = principal_coset_member(bg, b, h);
        // independent check by direct expansion
        WeylOp prod = (D + WeylOp(h)) * bg;
        bool expect = true;
        for (const Poly& aj : prod.coeff_seq()) expect = expect && divides(b, aj);
        CHECK(got == expect);
        if (got) ++true_count;
    }
    CHECK(true_count < 50);  // not identically true
}

TEST_CASE("f-element fixtures") {
    CHECK(build_f(t) == T * D - WeylOp(1));
    CHECK(build_f(t).apply(Poly(1)) == Poly(-1));

    WeylOp f2 = build_f(t * t);
    CHECK(f2 == WeylOp::monomial(1, 2, 2) - 2 * (T * D) + WeylOp(2));
    CHECK(f2.apply(Poly(1)) == Poly(2));
    CHECK(f2.apply(t).is_zero());
    CHECK(f2.apply(t * t).is_zero());
    CHECK(f2.apply(t * t * t) == 2 * (t * t * t));

    CHECK(build_f(Poly(Rational(5, 2))) == WeylOp(Rational(5, 2)));
    CHECK_THROWS_AS(build_f(Poly(0)), std::domain_error);
}

TEST_CASE("f-element middle images are pinned constants") {
    // f is unique given D*f = b*D^(m+1), and its images on t^j for
    // 1 <= j < m are the constants beta_(m-j) (-1)^(m-j) j! (m-j)!.
    // They vanish only when the interior coefficient does.
    WeylOp f = build_f(t * (t - 1));
    CHECK(f.apply(t) == Poly(1));  // beta_1 = -1, m = 2: (-1)*(-1)*1!*1!

    Rng rng(31);
    for (int k = 0; k < 60; ++k) {
        Poly b = random_nonzero_poly(rng, 5);
        int m = b.degree();
        WeylOp f2 = build_f(b);
        for (int j = 1; j < m; ++j) {
            Rational cj = b.coeff(m - j) * Rational::factorial(static_cast<unsigned long>(j)) *
                          Rational::factorial(static_cast<unsigned long>(m - j));
            if ((m - j) % 2 == 1) cj = -cj;
            CHECK(f2.apply(Poly::t(j)) == Poly(cj));
        }
    }
}

TEST_CASE("f-element intertwines with left multiplication by b") {
    Rng rng(29);
    for (int k = 0; k < 60; ++k) {
        Poly b = random_nonzero_poly(rng, 6);
        WeylOp f = build_f(b);
        int m = b.degree();
        CHECK(D * f == WeylOp(b) * pow(D, m + 1));
    }
}

TEST_CASE("commutator with stabilizer members lands in b*A1") {
    Rng rng(30);
    for (int k = 0; k < 40; ++k) {
        Poly b = random_nonzero_poly(rng, 3, 4, 2);
        if (b.is_constant()) continue;
        WeylOp d = random_weyl_op(rng, 3, 4);
        int p = std::max(0, d.deg_d());
        Subspace obp = O_space(pow(b, p));
        Poly s = random_member(rng, obp);
        WeylOp c = commutator(d, WeylOp(s));
        for (const Poly& aj : c.coeff_seq()) CHECK(divides(b, aj));
    }
}
