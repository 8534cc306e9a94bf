#include "weyl/parse.hpp"

#include <cctype>

namespace weyl {

namespace {

struct Token {
    enum class Type { Int, Ident, Punct, End };
    Type type = Type::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) {
        int line = 1, col = 1;
        size_t i = 0;
        auto push = [&](Token::Type t, std::string text, int l, int c) {
            tokens_.push_back({t, std::move(text), l, c});
        };
        while (i < s.size()) {
            char ch = s[i];
            if (ch == '\n') {
                ++line;
                col = 1;
                ++i;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++col;
                ++i;
                continue;
            }
            int l = line, c = col;
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string num;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    num += s[i++];
                    ++col;
                }
                push(Token::Type::Int, num, l, c);
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string id;
                while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
                    id += s[i++];
                    ++col;
                }
                push(Token::Type::Ident, id, l, c);
                continue;
            }
            // the partial-derivative glyph reads as the operator symbol
            if (static_cast<unsigned char>(ch) == 0xE2 && i + 2 < s.size() &&
                static_cast<unsigned char>(s[i + 1]) == 0x88 && static_cast<unsigned char>(s[i + 2]) == 0x82) {
                push(Token::Type::Ident, "D", l, c);
                i += 3;
                ++col;
                continue;
            }
            std::string punct(1, ch);
            if (std::string("+-*/^(){}[];,&").find(ch) == std::string::npos)
                throw ParseError(std::string("unexpected character '") + ch + "'", l, c, "expression");
            push(Token::Type::Punct, punct, l, c);
            ++i;
            ++col;
        }
        tokens_.push_back({Token::Type::End, "", line, col});
    }

    const Token& peek(int ahead = 0) const {
        size_t k = cursor_ + static_cast<size_t>(ahead);
        return k < tokens_.size() ? tokens_[k] : tokens_.back();
    }
    Token next() {
        const Token& t = peek();
        if (cursor_ + 1 < tokens_.size()) ++cursor_;
        return t;
    }
    bool accept_punct(const std::string& p) {
        if (peek().type == Token::Type::Punct && peek().text == p) {
            next();
            return true;
        }
        return false;
    }
    void expect_punct(const std::string& p, const std::string& context) {
        if (!accept_punct(p))
            throw ParseError("expected '" + p + "' in " + context + ", found '" + peek().text + "'",
                             peek().line, peek().col, "'" + p + "'");
    }
    size_t save() const { return cursor_; }
    void restore(size_t c) { cursor_ = c; }

  private:
    std::vector<Token> tokens_;
    size_t cursor_ = 0;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Ast poly_entry() {
        Ast a = scalar_sum();
        end();
        ensure_no_d(a);
        return a;
    }
    Ast weyl_entry() {
        Ast a = scalar_sum();
        end();
        return a;
    }
    Ast subspace_entry() {
        Ast a = subspace_sum();
        end();
        return a;
    }
    Ast ideal_entry() {
        Ast a = ideal_literal();
        end();
        return a;
    }

  private:
    Lexer lex_;

    [[noreturn]] void fail(const std::string& msg, const std::string& expected) {
        throw ParseError(msg + ", found '" + (lex_.peek().text.empty() ? "end of input" : lex_.peek().text) + "'",
                         lex_.peek().line, lex_.peek().col, expected);
    }

    void end() {
        if (lex_.peek().type != Token::Type::End) fail("trailing input", "end of input");
    }

    void ensure_no_d(const Ast& a) {
        if (a.kind == Ast::Kind::SymD)
            throw ParseError("operator symbol D is not allowed in a polynomial", 1, 1, "polynomial term");
        for (const auto& c : a.children) ensure_no_d(c);
    }

    Ast scalar_sum() {
        Ast sum;
        sum.kind = Ast::Kind::Sum;
        int sign = 1;
        if (lex_.accept_punct("-")) sign = -1;
        sum.children.push_back(scalar_term());
        sum.signs.push_back(sign);
        while (true) {
            if (lex_.accept_punct("+")) {
                sum.children.push_back(scalar_term());
                sum.signs.push_back(1);
            } else if (lex_.accept_punct("-")) {
                sum.children.push_back(scalar_term());
                sum.signs.push_back(-1);
            } else {
                break;
            }
        }
        return sum;
    }

    Ast scalar_term() {
        Ast prod;
        prod.kind = Ast::Kind::Product;
        prod.children.push_back(scalar_factor());
        while (lex_.accept_punct("*")) prod.children.push_back(scalar_factor());
        return prod;
    }

    Ast scalar_factor() {
        Ast base = scalar_base();
        if (lex_.accept_punct("^")) {
            if (lex_.peek().type != Token::Type::Int) fail("expected an integer exponent", "integer");
            Ast p;
            p.kind = Ast::Kind::Power;
            p.exponent = std::stoi(lex_.next().text);
            p.children.push_back(std::move(base));
            return p;
        }
        return base;
    }

    Ast scalar_base() {
        const Token& tok = lex_.peek();
        if (tok.type == Token::Type::Int) {
            lex_.next();
            Ast a;
            a.kind = Ast::Kind::RationalLit;
            // a '/' directly between integers is a rational literal
            if (lex_.peek().type == Token::Type::Punct && lex_.peek().text == "/" &&
                lex_.peek(1).type == Token::Type::Int) {
                lex_.next();
                std::string den = lex_.next().text;
                a.value = Rational(mpz_class(tok.text), mpz_class(den));
            } else {
                a.value = Rational(mpz_class(tok.text));
            }
            return a;
        }
        if (tok.type == Token::Type::Ident && tok.text == "t") {
            lex_.next();
            Ast a;
            a.kind = Ast::Kind::VarT;
            return a;
        }
        if (tok.type == Token::Type::Ident && tok.text == "D") {
            lex_.next();
            Ast a;
            a.kind = Ast::Kind::SymD;
            return a;
        }
        if (tok.type == Token::Type::Punct && tok.text == "(") {
            lex_.next();
            Ast inner = scalar_sum();
            lex_.expect_punct(")", "parenthesized term");
            return inner;
        }
        fail("expected a term", "rational, 't', 'D', or '('");
    }

    Ast subspace_sum() {
        Ast left = subspace_primary();
        while (true) {
            if (lex_.accept_punct("+")) {
                Ast node;
                node.kind = Ast::Kind::Join;
                node.children.push_back(std::move(left));
                node.children.push_back(subspace_primary());
                left = std::move(node);
            } else if (lex_.accept_punct("&")) {
                Ast node;
                node.kind = Ast::Kind::Meet;
                node.children.push_back(std::move(left));
                node.children.push_back(subspace_primary());
                left = std::move(node);
            } else {
                break;
            }
        }
        return left;
    }

    Ast subspace_primary() {
        const Token& tok = lex_.peek();
        if (tok.type == Token::Type::Ident && tok.text == "R") {
            lex_.next();
            Ast a;
            a.kind = Ast::Kind::WholeRing;
            return a;
        }
        if (tok.type == Token::Type::Ident && tok.text == "ideal") {
            lex_.next();
            lex_.expect_punct("(", "ideal(...)");
            Ast a;
            a.kind = Ast::Kind::IdealSpace;
            a.children.push_back(scalar_sum());
            lex_.expect_punct(")", "ideal(...)");
            return a;
        }
        if (tok.type == Token::Type::Ident && tok.text == "span") {
            lex_.next();
            lex_.expect_punct("{", "span{...}");
            Ast a;
            a.kind = Ast::Kind::SpanIdeal;
            a.children.push_back(scalar_sum());
            while (lex_.accept_punct(",")) a.children.push_back(scalar_sum());
            lex_.expect_punct("}", "span{...}");
            lex_.expect_punct("+", "span{...} + ideal(...)");
            if (!(lex_.peek().type == Token::Type::Ident && lex_.peek().text == "ideal"))
                fail("a span needs its ideal part", "'ideal'");
            lex_.next();
            lex_.expect_punct("(", "ideal(...)");
            a.children.push_back(scalar_sum());
            lex_.expect_punct(")", "ideal(...)");
            return a;
        }
        if (tok.type == Token::Type::Ident && tok.text == "O") {
            lex_.next();
            lex_.expect_punct("(", "O(...)");
            Ast a;
            a.kind = Ast::Kind::OSpace;
            a.children.push_back(scalar_sum());
            if (lex_.accept_punct(";")) {
                a.kind = Ast::Kind::OhSpace;
                a.children.push_back(scalar_sum());
            }
            lex_.expect_punct(")", "O(...)");
            return a;
        }
        if (tok.type == Token::Type::Punct && tok.text == "(") {
            // try the scaling form (POLY/POLY) * SUBSPACE first
            size_t mark = lex_.save();
            try {
                lex_.next();
                Ast num = scalar_sum();
                lex_.expect_punct("/", "scaling factor");
                Ast den = scalar_sum();
                lex_.expect_punct(")", "scaling factor");
                lex_.expect_punct("*", "scaling factor");
                Ast v = subspace_primary();
                Ast a;
                a.kind = Ast::Kind::ScaleSpace;
                a.children.push_back(std::move(num));
                a.children.push_back(std::move(den));
                a.children.push_back(std::move(v));
                return a;
            } catch (const ParseError&) {
                lex_.restore(mark);
            }
            lex_.next();
            Ast inner = subspace_sum();
            lex_.expect_punct(")", "parenthesized subspace");
            return inner;
        }
        fail("expected a subspace", "'R', 'ideal', 'span', 'O', or '('");
    }

    Ast ideal_literal() {
        if (!(lex_.peek().type == Token::Type::Ident && lex_.peek().text == "ideal"))
            fail("expected an ideal literal", "'ideal'");
        lex_.next();
        lex_.expect_punct("[", "ideal[...]");
        Ast a;
        a.kind = Ast::Kind::IdealLiteral;
        a.children.push_back(scalar_sum());
        while (lex_.accept_punct(";")) a.children.push_back(scalar_sum());
        lex_.expect_punct("]", "ideal[...]");
        return a;
    }
};

}  // namespace

Ast parse_poly_ast(const std::string& text) { return Parser(text).poly_entry(); }
Ast parse_weyl_ast(const std::string& text) { return Parser(text).weyl_entry(); }
Ast parse_subspace_ast(const std::string& text) { return Parser(text).subspace_entry(); }
Ast parse_ideal_ast(const std::string& text) { return Parser(text).ideal_entry(); }

WeylOp eval_weyl(const Ast& ast) {
    switch (ast.kind) {
        case Ast::Kind::RationalLit:
            return WeylOp(ast.value);
        case Ast::Kind::VarT:
            return WeylOp::t();
        case Ast::Kind::SymD:
            return WeylOp::d();
        case Ast::Kind::Power:
            return pow(eval_weyl(ast.children[0]), ast.exponent);
        case Ast::Kind::Product: {
            WeylOp acc(1);
            for (const auto& c : ast.children) acc = acc * eval_weyl(c);
            return acc;
        }
        case Ast::Kind::Sum: {
            WeylOp acc;
            for (size_t i = 0; i < ast.children.size(); ++i) {
                WeylOp term = eval_weyl(ast.children[i]);
                if (ast.signs[i] < 0) acc -= term;
                else acc += term;
            }
            return acc;
        }
        case Ast::Kind::Negate:
            return -eval_weyl(ast.children[0]);
        default:
            throw std::domain_error("subspace expression in operator context");
    }
}

Poly eval_poly(const Ast& ast) {
    WeylOp op = eval_weyl(ast);
    if (op.deg_d() > 0) throw std::domain_error("operator symbol D is not allowed in a polynomial");
    return op.coeff_of_d(0);
}

Subspace eval_subspace(const Ast& ast) {
    switch (ast.kind) {
        case Ast::Kind::WholeRing:
            return Subspace::whole_ring();
        case Ast::Kind::IdealSpace:
            return Subspace::ideal(eval_poly(ast.children[0]));
        case Ast::Kind::SpanIdeal: {
            std::vector<Poly> gens;
            for (size_t i = 0; i + 1 < ast.children.size(); ++i) gens.push_back(eval_poly(ast.children[i]));
            return Subspace::make(eval_poly(ast.children.back()), gens);
        }
        case Ast::Kind::OSpace:
            return O_space(eval_poly(ast.children[0]));
        case Ast::Kind::OhSpace:
            return Oh_space(eval_poly(ast.children[0]), eval_poly(ast.children[1]));
        case Ast::Kind::Meet:
            return intersect(eval_subspace(ast.children[0]), eval_subspace(ast.children[1]));
        case Ast::Kind::Join:
            return sum(eval_subspace(ast.children[0]), eval_subspace(ast.children[1]));
        case Ast::Kind::ScaleSpace:
            return scale(eval_subspace(ast.children[2]),
                         RatFunc(eval_poly(ast.children[0]), eval_poly(ast.children[1])));
        default:
            throw std::domain_error("scalar expression in subspace context");
    }
}

IdealPresentation eval_ideal(const Ast& ast) {
    if (ast.kind != Ast::Kind::IdealLiteral) throw std::domain_error("not an ideal literal");
    std::vector<WeylOp> gens;
    for (const auto& c : ast.children) gens.push_back(eval_weyl(c));
    return IdealPresentation::from_generators(gens);
}

Poly parse_poly(const std::string& text) { return eval_poly(parse_poly_ast(text)); }
WeylOp parse_weyl(const std::string& text) { return eval_weyl(parse_weyl_ast(text)); }
Subspace parse_subspace(const std::string& text) { return eval_subspace(parse_subspace_ast(text)); }
IdealPresentation parse_ideal(const std::string& text) { return eval_ideal(parse_ideal_ast(text)); }

}  // namespace weyl
