#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "weyl/correspondence.hpp"
#include "weyl/errors.hpp"
#include "weyl/json_io.hpp"
#include "weyl/oracle.hpp"
#include "weyl/parse.hpp"
#include "weyl/render.hpp"

using nlohmann::json;
using namespace weyl;

namespace {

// exit codes: 0 ok, 2 parse error, 3 precondition violation,
// 4 inconclusive or not found, 5 internal verification failure
constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kPrecondition = 3;
constexpr int kInconclusive = 4;
constexpr int kVerificationFailure = 5;

struct Options {
    bool json = false;
    bool unicode = false;
    std::uint64_t seed = 42;
    int slack = 0;
    std::string caps_text;
    std::string file;
    Caps caps;
};

Caps parse_caps(const std::string& text) {
    Caps caps;
    if (text.empty()) return caps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::domain_error("caps format: pmax=4,tmax=8,window=2,rmax=3");
        std::string key = item.substr(0, eq);
        int value = std::stoi(item.substr(eq + 1));
        if (key == "pmax") caps.p_max = value;
        else if (key == "tmax") caps.t_max = value;
        else if (key == "window") caps.window = value;
        else if (key == "rmax") caps.r_max = value;
        else throw std::domain_error("unknown caps key: " + key);
    }
    caps.validate();
    return caps;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot read file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

/// Expression arguments may come inline or from a file: a value of the
/// form @path loads the file, and --file fills the command's main input.
std::string resolve(const Options& opt, const std::string& value, bool is_main) {
    if (!value.empty() && value[0] == '@') return read_file(value.substr(1));
    if (value.empty() && is_main && !opt.file.empty()) return read_file(opt.file);
    if (value.empty()) throw std::domain_error("missing required expression argument");
    return value;
}

std::string compact(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ') out += c;
    return out;
}

void emit(const Options& opt, const std::string& text, const json& j) {
    if (opt.json) std::cout << j.dump() << "\n";
    else std::cout << text << "\n";
}

int cmd_not_found_message(const Options& opt) {
    if (opt.json)
        std::cout << json{{"found", false}, {"message", "no polynomial member found within caps"}}.dump() << "\n";
    else
        std::cout << "no polynomial member found within caps\n";
    return kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weylcalc: exact computations with differential operators on Q[t],\n"
                 "finite-codimension subspaces, and the right-ideal correspondence"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "structured JSON output (schema: share/output-schema.json)");
    app.add_flag("--unicode", opt.unicode, "render the operator symbol as a partial-derivative glyph");
    app.add_option("--seed", opt.seed, "seed for randomized verification suites");
    app.add_option("--slack", opt.slack, "extra indices on top of the finite membership bound");
    app.add_option("--caps", opt.caps_text, "search caps, e.g. pmax=4,tmax=8,window=2,rmax=3");
    app.add_option("--file", opt.file, "read the command's main expression from a file");

    std::string arg_op, arg_poly, arg_a, arg_b, arg_h, arg_space, arg_ideal, arg_num, arg_den, arg_suite;
    int arg_cases = 0;
    int arg_degree = 12;

    auto* normalize = app.add_subcommand("normalize", "normal form of an operator expression");
    normalize->add_option("--op", arg_op, "operator expression");

    auto* apply = app.add_subcommand("apply", "apply an operator to a polynomial");
    apply->add_option("--op", arg_op, "operator expression");
    apply->add_option("--poly", arg_poly, "polynomial argument");

    auto* mul = app.add_subcommand("mul", "product of two operators");
    mul->add_option("--a", arg_a, "left factor");
    mul->add_option("--b", arg_b, "right factor");

    auto* comm = app.add_subcommand("commutator", "commutator a*b - b*a");
    comm->add_option("--a", arg_a, "left operand");
    comm->add_option("--b", arg_b, "right operand");

    auto* sig = app.add_subcommand("sigma", "substitution D -> D - h");
    sig->add_option("--shift", arg_h, "shift polynomial h");
    sig->add_option("--op", arg_op, "operator expression");

    auto* buildf = app.add_subcommand("build-f", "the operator f with D*f = b*D^(deg b + 1)");
    buildf->add_option("--b", arg_b, "polynomial b");

    auto* cond = app.add_subcommand("conductor", "monic generator of the largest ideal inside V");
    cond->add_option("--space", arg_space, "subspace expression");

    auto* stab = app.add_subcommand("stabilizer", "multiplier algebra S(V) = {a : aV inside V}");
    stab->add_option("--space", arg_space, "subspace expression");

    auto* sum_cmd = app.add_subcommand("sum", "sum of two subspaces");
    sum_cmd->add_option("--a", arg_a, "first subspace");
    sum_cmd->add_option("--b", arg_b, "second subspace");

    auto* inter_cmd = app.add_subcommand("intersect", "intersection of two subspaces");
    inter_cmd->add_option("--a", arg_a, "first subspace");
    inter_cmd->add_option("--b", arg_b, "second subspace");

    auto* scale_cmd = app.add_subcommand("scale", "multiply a subspace by num/den");
    scale_cmd->add_option("--num", arg_num, "numerator polynomial");
    scale_cmd->add_option("--den", arg_den, "denominator polynomial");
    scale_cmd->add_option("--space", arg_space, "subspace expression");

    auto* member = app.add_subcommand("member", "polynomial membership in a subspace");
    member->add_option("--space", arg_space, "subspace expression");
    member->add_option("--poly", arg_poly, "candidate polynomial");

    auto* equal_cmd = app.add_subcommand("equal", "set equality of two subspaces");
    equal_cmd->add_option("--a", arg_a, "first subspace");
    equal_cmd->add_option("--b", arg_b, "second subspace");

    auto* pdtest = app.add_subcommand("pd-test", "decide primary decomposability");
    pdtest->add_option("--space", arg_space, "subspace expression");

    auto* gamma_cmd = app.add_subcommand("gamma", "generators of the operator ideal D(R,V)");
    gamma_cmd->add_option("--space", arg_space, "subspace expression");

    auto* gammainv = app.add_subcommand("gamma-inv", "the subspace I*1 of a right ideal");
    gammainv->add_option("--ideal", arg_ideal, "ideal literal ideal[g1; g2; ...]");

    auto* findpoly = app.add_subcommand("find-poly", "nonzero polynomial member of a right ideal");
    findpoly->add_option("--ideal", arg_ideal, "ideal literal");

    auto* roundtrip = app.add_subcommand("roundtrip", "verify the correspondence round trip");
    roundtrip->add_option("--space", arg_space, "subspace expression (star1(gamma(V)) = V)");
    roundtrip->add_option("--ideal", arg_ideal, "ideal literal (truncation-level I = D(R, I*1))");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", arg_suite, "suite name; see --list")->required(false);
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "list available suites");
    verify->add_option("--cases", arg_cases, "case count override");

    auto* zerocond = app.add_subcommand("oracle-zero-conductor",
                                        "exhibit a finite-codimension subspace with empty conductor");
    zerocond->add_option("--degree", arg_degree, "truncation degree of the demonstration");

    for (auto* sc : app.get_subcommands(/*filter=*/[](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        opt.caps = parse_caps(opt.caps_text);

        if (normalize->parsed()) {
            WeylOp g = parse_weyl(resolve(opt, arg_op, true));
            emit(opt, to_text(g, opt.unicode), json{{"result", to_text(g, opt.unicode)}});
            return kOk;
        }
        if (apply->parsed()) {
            WeylOp g = parse_weyl(resolve(opt, arg_op, true));
            Poly p = parse_poly(resolve(opt, arg_poly, false));
            Poly r = g.apply(p);
            emit(opt, to_text(r), json{{"result", to_text(r)}});
            return kOk;
        }
        if (mul->parsed() || comm->parsed()) {
            WeylOp a = parse_weyl(resolve(opt, arg_a, true));
            WeylOp b = parse_weyl(resolve(opt, arg_b, false));
            WeylOp r = mul->parsed() ? a * b : commutator(a, b);
            emit(opt, to_text(r, opt.unicode), json{{"result", to_text(r, opt.unicode)}});
            return kOk;
        }
        if (sig->parsed()) {
            Poly h = parse_poly(resolve(opt, arg_h, false));
            WeylOp g = parse_weyl(resolve(opt, arg_op, true));
            WeylOp r = sigma(h, g);
            emit(opt, to_text(r, opt.unicode), json{{"result", to_text(r, opt.unicode)}});
            return kOk;
        }
        if (buildf->parsed()) {
            Poly b = parse_poly(resolve(opt, arg_b, true));
            WeylOp f = build_f(b);
            emit(opt, to_text(f, opt.unicode), json{{"result", to_text(f, opt.unicode)}});
            return kOk;
        }
        if (cond->parsed()) {
            Poly g = conductor(parse_subspace(resolve(opt, arg_space, true)));
            emit(opt, to_text(g), json{{"result", to_text(g)}});
            return kOk;
        }
        if (stab->parsed()) {
            auto rep = stabilizer(parse_subspace(resolve(opt, arg_space, true)));
            emit(opt, to_text(rep.algebra),
                 json{{"is_unital_algebra", rep.is_unital_algebra}, {"result", json_of(rep.algebra)}});
            return kOk;
        }
        if (sum_cmd->parsed() || inter_cmd->parsed()) {
            Subspace a = parse_subspace(resolve(opt, arg_a, true));
            Subspace b = parse_subspace(resolve(opt, arg_b, false));
            Subspace r = sum_cmd->parsed() ? sum(a, b) : intersect(a, b);
            emit(opt, to_text(r), json{{"result", json_of(r)}});
            return kOk;
        }
        if (scale_cmd->parsed()) {
            Subspace V = parse_subspace(resolve(opt, arg_space, true));
            RatFunc s(parse_poly(resolve(opt, arg_num, false)), parse_poly(resolve(opt, arg_den, false)));
            Subspace r = scale(V, s);
            emit(opt, to_text(r), json{{"result", json_of(r)}});
            return kOk;
        }
        if (member->parsed()) {
            Subspace V = parse_subspace(resolve(opt, arg_space, true));
            bool r = V.contains(parse_poly(resolve(opt, arg_poly, false)));
            emit(opt, r ? "true" : "false", json{{"result", r}});
            return kOk;
        }
        if (equal_cmd->parsed()) {
            bool r = equal(parse_subspace(resolve(opt, arg_a, true)), parse_subspace(resolve(opt, arg_b, false)));
            emit(opt, r ? "true" : "false", json{{"result", r}});
            return kOk;
        }
        if (pdtest->parsed()) {
            Subspace V = parse_subspace(resolve(opt, arg_space, true));
            PdVerdict v = pd_decide(V, opt.caps, opt.slack);
            if (const auto* pd = std::get_if<PdPositive>(&v)) {
                emit(opt,
                     "primary-decomposable (r=" + std::to_string(pd->r) + ", witness=" + compact(to_text(pd->witness)) + ")",
                     json_of(v));
                return kOk;
            }
            if (const auto* neg = std::get_if<PdNegative>(&v)) {
                emit(opt,
                     "not-primary-decomposable (" + neg->rule + ": q=" + compact(to_text(neg->q)) +
                         " irreducible, deg " + std::to_string(neg->q.degree()) + ")",
                     json_of(v));
                return kOk;
            }
            emit(opt,
                 "inconclusive (caps: pmax=" + std::to_string(opt.caps.p_max) + ", tmax=" + std::to_string(opt.caps.t_max) +
                     ", window=" + std::to_string(opt.caps.window) + ", rmax=" + std::to_string(opt.caps.r_max) + ")",
                 json_of(v));
            return kInconclusive;
        }
        if (gamma_cmd->parsed()) {
            Subspace V = parse_subspace(resolve(opt, arg_space, true));
            auto [I, rep] = gamma(V, opt.caps, /*minimize=*/true, opt.slack);
            std::string text = to_text(I, opt.unicode) + "\nverified at truncation level p <= " +
                               std::to_string(rep.p_checked) +
                               (rep.enlarged ? "; enlarged (+" + std::to_string(rep.added_count) + " generators)" : "");
            emit(opt, text, json{{"ideal", json_of(I, opt.unicode)}, {"report", json_of(rep)}});
            return kOk;
        }
        if (gammainv->parsed() || findpoly->parsed()) {
            IdealPresentation I = parse_ideal(resolve(opt, arg_ideal, true));
            if (!I.poly_member) {
                auto found = find_poly_in_ideal(I, opt.caps);
                if (!found) return cmd_not_found_message(opt);
                I.poly_member = found;
                I.member_verified = true;
            }
            if (findpoly->parsed()) {
                emit(opt, to_text(*I.poly_member), json{{"found", true}, {"result", to_text(*I.poly_member)}});
                return kOk;
            }
            Subspace V = star1(I, opt.caps, opt.slack);
            emit(opt, to_text(V), json{{"result", json_of(V)}});
            return kOk;
        }
        if (roundtrip->parsed()) {
            if (!arg_space.empty() || (arg_ideal.empty() && !opt.file.empty())) {
                Subspace V = parse_subspace(resolve(opt, arg_space, true));
                bool ok = roundtrip_gamma_inv_gamma(V, opt.caps, opt.slack);
                emit(opt, ok ? "roundtrip ok: star1(gamma(V)) = V" : "roundtrip failed",
                     json{{"mode", "space"}, {"ok", ok}});
                return ok ? kOk : kVerificationFailure;
            }
            IdealPresentation I = parse_ideal(resolve(opt, arg_ideal, false));
            IdealPresentation J = with_poly_member(I, opt.caps);
            auto rep = roundtrip_gamma_gamma_inv(J, opt.caps, opt.slack);
            bool ok = rep.generators_in_drv && rep.truncations_agree;
            std::string text = "star1: " + to_text(rep.v_prime) +
                               "\ngenerators_in_drv: " + (rep.generators_in_drv ? "true" : "false") +
                               "\ntruncations_agree: " + (rep.truncations_agree ? "true" : "false") + " (p <= " +
                               std::to_string(rep.p_checked) + ")";
            json j = json_of(rep);
            j["mode"] = "ideal";
            emit(opt, text, j);
            return ok ? kOk : kVerificationFailure;
        }
        if (verify->parsed()) {
            if (list_suites) {
                json names = json::array();
                std::string text;
                for (const auto& n : suite_names()) {
                    names.push_back(n);
                    text += n + "\n";
                }
                if (!text.empty()) text.pop_back();
                emit(opt, text, json{{"suites", names}});
                return kOk;
            }
            if (arg_suite.empty()) throw std::domain_error("verify needs a suite name (or --list)");
            auto reports = run_suite(arg_suite, opt.seed, opt.caps, arg_cases);
            int failed = 0;
            json cases = json::array();
            for (const auto& r : reports) {
                if (!r.pass) ++failed;
                if (opt.json) {
                    cases.push_back(json_of(r));
                } else {
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.description;
                    if (!r.pass) std::cout << "  <<" << r.counterexample << ">>";
                    std::cout << "\n";
                }
            }
            int passed = static_cast<int>(reports.size()) - failed;
            if (opt.json) {
                std::cout << json{{"cases", cases}, {"failed", failed}, {"passed", passed}, {"suite", arg_suite}}.dump()
                          << "\n";
            } else {
                std::cout << "suite " << arg_suite << ": " << passed << "/" << reports.size() << " passed\n";
            }
            return failed == 0 ? kOk : kVerificationFailure;
        }
        if (zerocond->parsed()) {
            CaseReport r = oracle_zero_conductor_demo(arg_degree);
            emit(opt, std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.description, json_of(r));
            return r.pass ? kOk : kVerificationFailure;
        }
        throw std::domain_error("no command given");
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.line << ":" << e.col << ": " << e.what() << " (expected " << e.expected
                  << ")\n";
        return kParseError;
    } catch (const verification_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
}
