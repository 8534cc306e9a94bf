#include "doctest.h"
#include "weyl/parse.hpp"
#include "weyl/random_gen.hpp"
#include "weyl/render.hpp"

using namespace weyl;

namespace {
const Poly t = Poly::t();
const WeylOp T = WeylOp::t();
const WeylOp D = WeylOp::d();
}  // namespace

TEST_CASE("operator and polynomial literals") {
    CHECK(parse_weyl("t*D - 1") == T * D - WeylOp(1));
    CHECK(parse_weyl("D*t") == T * D + WeylOp(1));  // normalized on evaluation
    CHECK(to_text(parse_weyl("D*t")) == "t*D + 1");
    CHECK(parse_poly("t^3 - 2*t + 1/2") == pow(t, 3) - 2 * t + Poly(Rational(1, 2)));
    CHECK(parse_poly("-t^2 + 1") == -(t * t) + Poly(1));
    CHECK(parse_poly("0").is_zero());
    // precedence: ^ binds tighter than * than +
    CHECK(parse_poly("2*t^3") == 2 * pow(t, 3));
    CHECK(parse_poly("1/2*t") == Rational(1, 2) * t);
    CHECK(parse_weyl("t^2*D^2 - 2*t*D + 2") == WeylOp::monomial(1, 2, 2) - 2 * (T * D) + WeylOp(2));
    // parenthesized products are accepted and normalized
    CHECK(parse_weyl("(t*D-1)*(t*D-2)") == WeylOp::monomial(1, 2, 2) - 2 * (T * D) + WeylOp(2));
}

TEST_CASE("subspace expressions") {
    CHECK(equal(parse_subspace("span{1} + ideal(t^2+1)"), Subspace::make(t * t + 1, {Poly(1)})));
    CHECK(equal(parse_subspace("R"), Subspace::whole_ring()));
    CHECK(equal(parse_subspace("ideal(t^2)"), Subspace::ideal(t * t)));
    CHECK(equal(parse_subspace("O(t^2)"), O_space(t * t)));
    CHECK(equal(parse_subspace("O(t; 1)"), Oh_space(t, Poly(1))));
    CHECK(equal(parse_subspace("O(t^2) & O(t-1)"), intersect(O_space(t * t), O_space(t - 1))));
    CHECK(equal(parse_subspace("ideal(t) + ideal(t-1)"), Subspace::whole_ring()));
    CHECK(equal(parse_subspace("(1/t)*ideal(t^2)"), Subspace::ideal(t)));
    CHECK(equal(parse_subspace("(t/1)*(span{1} + ideal(t^2))"), Subspace::make(pow(t, 3), {t})));
    CHECK(equal(parse_subspace("(R & ideal(t)) + R"), Subspace::whole_ring()));
    CHECK(equal(parse_subspace("span{1} + ideal(t^2) + R"), Subspace::whole_ring()));
}

TEST_CASE("ideal literals") {
    auto I = parse_ideal("ideal[t*D - 1; t^2]");
    REQUIRE(I.generators.size() == 2);
    CHECK(I.generators[0] == T * D - WeylOp(1));
    CHECK(I.generators[1] == WeylOp(t * t));
    REQUIRE(I.poly_member.has_value());
    CHECK(*I.poly_member == t * t);
    CHECK(I.member_verified);
}

TEST_CASE("syntax errors carry position and expectation") {
    try {
        parse_poly("t^");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col >= 2);
        CHECK(!e.expected.empty());
    }
    CHECK_THROWS_AS(parse_poly("t + * 2"), ParseError);
    CHECK_THROWS_AS(parse_subspace("span{1}"), ParseError);       // missing ideal part
    CHECK_THROWS_AS(parse_subspace("ideal(t"), ParseError);       // unbalanced
    CHECK_THROWS_AS(parse_weyl("t $ D"), ParseError);             // stray character
    CHECK_THROWS_AS(parse_ideal("ideal[]"), ParseError);          // empty literal
    CHECK_THROWS_AS(parse_poly("t*D"), ParseError);               // D outside operator context
    CHECK_THROWS_AS(parse_poly("t 2"), ParseError);               // juxtaposition without *
}

TEST_CASE("round trip on random values") {
    Rng rng(71);
    for (int k = 0; k < 150; ++k) {
        Poly p = random_poly(rng, 6);
        CHECK(parse_poly(to_text(p)) == p);
        WeylOp g = random_weyl_op(rng, 4, 4);
        CHECK(parse_weyl(to_text(g)) == g);
        CHECK(parse_weyl(to_text(g, /*unicode=*/true)) == g);
    }
    for (int k = 0; k < 40; ++k) {
        Subspace V = canonicalize(random_subspace_mod(rng, random_monic_poly(rng, static_cast<int>(rng.uniform(1, 4)))));
        CHECK(equal(parse_subspace(to_text(V)), V));
    }
}

TEST_CASE("printing is idempotent on a golden corpus") {
    for (const char* s : {"t^3 - 2*t + 1/2", "t*D - 1", "t^2*D^2 - 2*t*D + 2", "-t + 1", "0", "3/2",
                          "span{1} + ideal(t^2 + 1)", "ideal(t^2 - t)", "R"}) {
        std::string once;
        std::string twice;
        std::string str(s);
        if (str.find("ideal(") != std::string::npos || str == "R" || str.find("span") != std::string::npos) {
            once = to_text(parse_subspace(str));
            twice = to_text(parse_subspace(once));
        } else if (str.find('D') != std::string::npos) {
            once = to_text(parse_weyl(str));
            twice = to_text(parse_weyl(once));
        } else {
            once = to_text(parse_poly(str));
            twice = to_text(parse_poly(once));
        }
        CHECK(once == twice);
    }
}
