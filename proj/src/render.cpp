#include "weyl/render.hpp"

#include <algorithm>
#include <vector>

namespace weyl {

namespace {

/// One monomial c * t^i * D^j without the sign of c; |c| = 1 is omitted
/// unless the monomial is constant.
std::string term_text(const Rational& c_abs, int i, int j, const char* dsym) {
    std::vector<std::string> factors;
    if (!c_abs.is_one() || (i == 0 && j == 0)) factors.push_back(c_abs.str());
    if (i == 1) factors.push_back("t");
    if (i > 1) factors.push_back("t^" + std::to_string(i));
    if (j == 1) factors.push_back(dsym);
    if (j > 1) factors.push_back(std::string(dsym) + "^" + std::to_string(j));
    std::string out;
    for (size_t k = 0; k < factors.size(); ++k) {
        if (k > 0) out += "*";
        out += factors[k];
    }
    return out;
}

std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < terms.size(); ++k) {
        const auto& [c, body] = terms[k];
        if (k == 0) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

}  // namespace

std::string to_text(const Rational& c) { return c.str(); }

std::string to_text(const Poly& p) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        terms.emplace_back(c, term_text(c.abs(), i, 0, "D"));
    }
    return join_terms(terms);
}

std::string to_text(const WeylOp& g, bool unicode) {
    const char* dsym = unicode ? "\xE2\x88\x82" : "D";
    std::vector<std::pair<int, int>> keys;  // (j, i) descending
    for (const auto& [k, c] : g.terms()) keys.emplace_back(k.second, k.first);
    std::sort(keys.begin(), keys.end(), std::greater<>());
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [j, i] : keys) {
        Rational c = g.terms().at({i, j});
        terms.emplace_back(c, term_text(c.abs(), i, j, dsym));
    }
    return join_terms(terms);
}

std::string to_text(const Subspace& V) {
    if (V.modulus().is_one()) return "R";
    std::string ideal_part = "ideal(" + to_text(V.modulus()) + ")";
    if (V.basis().empty()) return ideal_part;
    std::string out = "span{";
    for (size_t k = 0; k < V.basis().size(); ++k) {
        if (k > 0) out += ", ";
        out += to_text(V.basis()[k]);
    }
    out += "} + " + ideal_part;
    return out;
}

std::string to_text(const IdealPresentation& I, bool unicode) {
    std::string out = "ideal[";
    for (size_t k = 0; k < I.generators.size(); ++k) {
        if (k > 0) out += "; ";
        out += to_text(I.generators[k], unicode);
    }
    out += "]";
    return out;
}

}  // namespace weyl
