#include "weyl/weyl_op.hpp"

#include <stdexcept>

namespace weyl {

WeylOp::WeylOp(const Poly& p) {
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) terms_[{i, 0}] = p.coeff(i);
}

WeylOp WeylOp::monomial(const Rational& c, int i, int j) {
    if (i < 0 || j < 0) throw std::domain_error("negative exponent");
    WeylOp r;
    if (!c.is_zero()) r.terms_[{i, j}] = c;
    return r;
}

int WeylOp::deg_t() const {
    if (terms_.empty()) return kNegInfDeg;
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.first);
    return m;
}

int WeylOp::deg_d() const {
    if (terms_.empty()) return kNegInfDeg;
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
}

void WeylOp::add_term(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
        terms_[{i, j}] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

WeylOp operator-(const WeylOp& a) {
    WeylOp r;
    for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
    return r;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
    // (t^i1 D^j1)(t^i2 D^j2) = sum_l C(j1,l) i2(i2-1)..(i2-l+1) t^(i1+i2-l) D^(j1+j2-l)
    WeylOp r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            int i1 = ka.first, j1 = ka.second, i2 = kb.first, j2 = kb.second;
            Rational base = ca * cb;
            int lmax = std::min(j1, i2);
            for (int l = 0; l <= lmax; ++l) {
                Rational w = Rational::binomial(static_cast<unsigned long>(j1), static_cast<unsigned long>(l)) *
                             Rational::falling_factorial(i2, l);
                r.add_term(i1 + i2 - l, j1 + j2 - l, base * w);
            }
        }
    }
    return r;
}

WeylOp operator*(const Rational& c, const WeylOp& a) {
    WeylOp r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_[k] = c * v;
    return r;
}

WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

WeylOp pow(const WeylOp& a, int e) {
    if (e < 0) throw std::domain_error("negative exponent");
    WeylOp acc(1);
    WeylOp base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<Poly> WeylOp::coeff_seq() const {
    int p = deg_d();
    if (p == kNegInfDeg) return {};
    std::vector<std::vector<Rational>> raw(static_cast<size_t>(p) + 1);
    for (const auto& [k, c] : terms_) {
        auto& row = raw[static_cast<size_t>(k.second)];
        if (static_cast<int>(row.size()) <= k.first) row.resize(static_cast<size_t>(k.first) + 1, Rational(0));
        row[static_cast<size_t>(k.first)] = c;
    }
    std::vector<Poly> out;
    out.reserve(raw.size());
    for (auto& row : raw) out.emplace_back(std::move(row));
    return out;
}

WeylOp WeylOp::from_coeff_seq(const std::vector<Poly>& a) {
    WeylOp r;
    for (size_t j = 0; j < a.size(); ++j)
        for (int i = 0; i <= a[j].degree(); ++i) r.add_term(i, static_cast<int>(j), a[j].coeff(i));
    return r;
}

Poly WeylOp::coeff_of_d(int j) const {
    std::vector<Rational> row;
    for (const auto& [k, c] : terms_) {
        if (k.second != j) continue;
        if (static_cast<int>(row.size()) <= k.first) row.resize(static_cast<size_t>(k.first) + 1, Rational(0));
        row[static_cast<size_t>(k.first)] = c;
    }
    return Poly(std::move(row));
}

Poly WeylOp::apply(const Poly& p) const {
    Poly out;
    Poly deriv = p;
    for (const Poly& aj : coeff_seq()) {
        if (!aj.is_zero() && !deriv.is_zero()) out += aj * deriv;
        deriv = derivative(deriv);
    }
    return out;
}

WeylOp sigma(const Poly& h, const WeylOp& op) {
    WeylOp dh = WeylOp::d() - WeylOp(h);
    // precompute powers of (D - h) up to deg_d(op)
    int p = op.deg_d();
    if (p == kNegInfDeg) return {};
    std::vector<WeylOp> dpow(static_cast<size_t>(p) + 1);
    dpow[0] = WeylOp(1);
    for (int j = 1; j <= p; ++j) dpow[static_cast<size_t>(j)] = dpow[static_cast<size_t>(j - 1)] * dh;
    WeylOp out;
    for (const auto& [k, c] : op.terms_) {
        WeylOp term = c * (WeylOp::monomial(1, k.first, 0) * dpow[static_cast<size_t>(k.second)]);
        out += term;
    }
    return out;
}

bool principal_coset_member(const WeylOp& op, const Poly& b, const Poly& h) {
    if (b.is_zero()) throw std::domain_error("zero modulus");
    WeylOp shifted = (WeylOp::d() + WeylOp(h)) * op;
    for (const Poly& aj : shifted.coeff_seq())
        if (!divides(b, aj)) return false;
    return true;
}

WeylOp build_f(const Poly& b) {
    if (b.is_zero()) throw std::domain_error("zero polynomial");
    int m = b.degree();
    WeylOp f = b.coeff(0) * pow(WeylOp::d(), m);
    WeylOp chain(1);  // (tD-1)(tD-2)...(tD-p), built incrementally
    WeylOp td = WeylOp::t() * WeylOp::d();
    for (int p = 1; p <= m; ++p) {
        chain = chain * (td - WeylOp(Rational(p)));
        f += b.coeff(p) * (chain * pow(WeylOp::d(), m - p));
    }
    return f;
}

}  // namespace weyl
