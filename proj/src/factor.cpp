#include "weyl/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace weyl {

namespace {

/// Primitive integer version of p: multiply by the lcm of coefficient
/// denominators, divide by the content, force positive leading coefficient.
std::vector<mpz_class> primitive_integer_coeffs(const Poly& p) {
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> v;
    v.reserve(p.coeffs().size());
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class x = c.num() * (den_lcm / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        v.push_back(x);
    }
    if (content == 0) content = 1;
    for (auto& x : v) x /= content;
    if (v.back() < 0)
        for (auto& x : v) x = -x;
    return v;
}

void factor_into(const mpz_class& n, std::map<mpz_class, int>& out);

/// Pollard rho for cofactors that survive small trial division.
mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEuL);
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2, y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const mpz_class& n_in, std::map<mpz_class, int>& out) {
    mpz_class n = n_in;
    for (mpz_class p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::map<mpz_class, int> fac;
    if (n > 1) factor_into(n, fac);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// ---- dense arithmetic over F_p for the mod-p irreducibility search ----

using FpPoly = std::vector<uint32_t>;  // coefficient i = power of t, no trailing zeros

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, uint32_t p) {
    // b monic
    while (a.size() >= b.size() && !a.empty()) {
        uint64_t c = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = (c * b[i]) % p;
            uint64_t cur = a[shift + i];
            a[shift + i] = static_cast<uint32_t>((cur + p - sub) % p);
        }
        fp_trim(a);
    }
    return a;
}

/// Exhaustive check that a monic polynomial of degree >= 2 over F_p has no
/// monic factor of degree 1..deg/2. Returns false (give up) by setting
/// `decided` when the search space exceeds the effort budget.
bool fp_irreducible_exhaustive(const FpPoly& a, uint32_t p, bool& decided) {
    decided = true;
    int n = static_cast<int>(a.size()) - 1;
    double space = 0;
    for (int d = 1; d <= n / 2; ++d) {
        double s = 1;
        for (int i = 0; i < d; ++i) s *= p;
        space += s;
    }
    if (space > 400000.0) {
        decided = false;
        return false;
    }
    for (int d = 1; d <= n / 2; ++d) {
        // enumerate monic divisor candidates of degree d by odometer
        FpPoly cand(static_cast<size_t>(d) + 1, 0);
        cand[d] = 1;
        while (true) {
            if (fp_rem(a, cand, p).empty()) return false;
            int i = 0;
            while (i < d && cand[i] == p - 1) cand[i++] = 0;
            if (i == d) break;
            ++cand[i];
        }
    }
    return true;
}

}  // namespace

Poly squarefree_part(const Poly& b) {
    if (b.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (b.is_constant()) return Poly(1);
    Poly g = gcd_monic(b, derivative(b));
    return divrem(b, g).first.monic();
}

std::vector<LinearFactor> rational_roots(const Poly& b) {
    if (b.is_zero()) throw std::domain_error("roots of zero polynomial");
    std::vector<LinearFactor> out;
    Poly work = b;

    // strip the root at zero first
    int zero_mult = 0;
    while (!work.is_zero() && work.coeff(0).is_zero() && work.degree() > 0) {
        work = divrem(work, Poly::t()).first;
        ++zero_mult;
    }
    if (zero_mult > 0) out.push_back({Rational(0), zero_mult});
    if (work.degree() < 1) {
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) { return a.root < b2.root; });
        return out;
    }

    auto zi = primitive_integer_coeffs(work);
    auto ps = positive_divisors(zi.front());
    auto qs = positive_divisors(zi.back());
    for (const auto& pd : ps) {
        for (const auto& qd : qs) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), pd.get_mpz_t(), qd.get_mpz_t());
            if (g != 1) continue;
            for (int sign = 0; sign < 2; ++sign) {
                Rational cand = sign == 0 ? Rational(pd, qd) : Rational(-pd, qd);
                if (!eval(work, cand).is_zero()) continue;
                int mult = 0;
                Poly lin = Poly::t() - Poly(cand);
                while (eval(work, cand).is_zero() && work.degree() > 0) {
                    work = divrem(work, lin).first;
                    ++mult;
                }
                out.push_back({cand, mult});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) { return a.root < b2.root; });
    return out;
}

LinearSplit rational_linear_split(const Poly& b) {
    if (b.is_zero()) throw std::domain_error("split of zero polynomial");
    LinearSplit s;
    s.lead = b.lc();
    s.factors = rational_roots(b);
    Poly rest = b.monic();
    for (const auto& f : s.factors) rest = divrem(rest, pow(Poly::t() - Poly(f.root), f.multiplicity)).first;
    s.remainder = rest;
    return s;
}

Poly reassemble(const LinearSplit& s) {
    Poly acc(s.lead);
    for (const auto& f : s.factors) acc = acc * pow(Poly::t() - Poly(f.root), f.multiplicity);
    return acc * s.remainder;
}

Certificate irreducibility_certificate(const Poly& q) {
    if (q.degree() < 1) throw std::domain_error("irreducibility of a constant");
    if (q.degree() == 1) return Certificate::Proven;
    if (q.degree() <= 3) {
        return rational_roots(q).empty() ? Certificate::Proven : Certificate::Unknown;
    }
    auto zi = primitive_integer_coeffs(q);
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (mpz_divisible_ui_p(zi.back().get_mpz_t(), p)) continue;
        FpPoly red(zi.size());
        for (size_t i = 0; i < zi.size(); ++i) {
            mpz_class r = zi[i] % p;
            if (r < 0) r += p;
            red[i] = static_cast<uint32_t>(r.get_ui());
        }
        fp_trim(red);
        // make monic mod p
        uint64_t lead = red.back();
        uint64_t inv = 1;
        for (uint32_t e = p - 2; e > 0; e >>= 1) {  // Fermat inverse
            if (e & 1) inv = (inv * lead) % p;
            lead = (lead * lead) % p;
        }
        for (auto& c : red) c = static_cast<uint32_t>((static_cast<uint64_t>(c) * inv) % p);
        bool decided = false;
        if (fp_irreducible_exhaustive(red, p, decided)) return Certificate::Proven;
        (void)decided;
    }
    return Certificate::Unknown;
}

}  // namespace weyl
