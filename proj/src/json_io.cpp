#include "weyl/json_io.hpp"

#include "weyl/render.hpp"

namespace weyl {

using nlohmann::json;

json json_of(const Poly& p) { return to_text(p); }

json json_of(const WeylOp& g, bool unicode) { return to_text(g, unicode); }

json json_of(const Subspace& V) {
    json basis = json::array();
    for (const auto& b : V.basis()) basis.push_back(to_text(b));
    return json{{"basis", basis}, {"canonical", V.is_canonical()}, {"modulus", to_text(V.modulus())}};
}

json json_of(const IdealPresentation& I, bool unicode) {
    json gens = json::array();
    for (const auto& g : I.generators) gens.push_back(to_text(g, unicode));
    json out{{"generators", gens}, {"member_verified", I.member_verified}};
    if (I.poly_member) out["poly_member"] = to_text(*I.poly_member);
    return out;
}

json json_of(const Caps& caps) {
    return json{{"p_max", caps.p_max}, {"r_max", caps.r_max}, {"t_max", caps.t_max}, {"window", caps.window}};
}

json json_of(const PdVerdict& v) {
    if (const auto* pd = std::get_if<PdPositive>(&v)) {
        json realizers = json::array();
        for (const auto& f : pd->realizers) realizers.push_back(to_text(f));
        return json{{"r", pd->r}, {"realizers", realizers}, {"verdict", "pd"}, {"witness", to_text(pd->witness)}};
    }
    if (const auto* neg = std::get_if<PdNegative>(&v)) {
        return json{{"degree", neg->q.degree()}, {"q", to_text(neg->q)}, {"rule", neg->rule}, {"verdict", "not-pd"}};
    }
    const auto& inc = std::get<PdInconclusive>(v);
    return json{{"caps", json_of(inc.caps)}, {"last_star1", json_of(inc.last_star1)}, {"verdict", "inconclusive"}};
}

json json_of(const CaseReport& r) {
    json out{{"case", r.description}, {"pass", r.pass}};
    if (!r.counterexample.empty()) out["counterexample"] = r.counterexample;
    return out;
}

json json_of(const GammaReport& r) {
    return json{{"added_count", r.added_count},
                {"enlarged", r.enlarged},
                {"p_checked", r.p_checked},
                {"verified", r.verified}};
}

json json_of(const RoundtripReport& r) {
    return json{{"generators_in_drv", r.generators_in_drv},
                {"p_checked", r.p_checked},
                {"star1", json_of(r.v_prime)},
                {"truncations_agree", r.truncations_agree}};
}

}  // namespace weyl
