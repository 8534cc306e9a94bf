#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/correspondence.hpp"
#include "weyl/poly.hpp"
#include "weyl/ratfunc.hpp"
#include "weyl/subspace.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

struct ParseError : std::runtime_error {
    int line;
    int col;
    std::string expected;
    ParseError(const std::string& msg, int line_, int col_, std::string expected_)
        : std::runtime_error(msg), line(line_), col(col_), expected(std::move(expected_)) {}
};

/// Expression tree for the surface language. Operator values are
/// normalized on evaluation, so parse-then-print yields canonical text.
struct Ast {
    enum class Kind {
        RationalLit,
        VarT,
        SymD,
        Power,    // child[0] ^ exponent
        Product,  // children multiplied left to right
        Sum,      // children with signs
        Negate,
        WholeRing,
        IdealSpace,   // ideal(poly)
        SpanIdeal,    // span{p1,...} + ideal(q); last child is q
        OSpace,       // O(b)
        OhSpace,      // O(b; h)
        Meet,         // V & W
        Join,         // V + W
        ScaleSpace,   // (num/den) * V
        IdealLiteral  // ideal[g1; ...]
    };
    Kind kind;
    Rational value;  // RationalLit
    int exponent = 1;
    std::vector<Ast> children;
    std::vector<int> signs;  // Sum: +1/-1 per child
};

Ast parse_poly_ast(const std::string& text);
Ast parse_weyl_ast(const std::string& text);
Ast parse_subspace_ast(const std::string& text);
Ast parse_ideal_ast(const std::string& text);

Poly eval_poly(const Ast& ast);
WeylOp eval_weyl(const Ast& ast);
Subspace eval_subspace(const Ast& ast);
IdealPresentation eval_ideal(const Ast& ast);

Poly parse_poly(const std::string& text);
WeylOp parse_weyl(const std::string& text);
Subspace parse_subspace(const std::string& text);
IdealPresentation parse_ideal(const std::string& text);

}  // namespace weyl
