// Command-line front end: reductions, simplicial maps, the de Rham
// transcriptions, Taylor splits, ideal queries, and the verification
// harnesses. Exit code 0 on success / all-pass, 1 on a failed check or
// non-membership, 2 on usage or parse errors.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <nilform/nilform.hpp>

namespace {

using nlohmann::json;
using namespace nilform;

struct GlobalOpts {
    int n = 1;
    int m = 0;
    std::string coords = "difference";
    std::string format = "text";

    Coords coords_enum() const {
        return coords == "vertex" ? Coords::Vertex : Coords::Difference;
    }

    json params() const {
        return json{{"n", n}, {"m", m}, {"coords", coords}};
    }
};

void emit_value(const GlobalOpts& g, const std::string& command, json params,
                const std::string& text_result, const json& json_result) {
    if (g.format == "json") {
        json out{{"command", command}, {"params", std::move(params)}, {"result", json_result}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text_result << "\n";
    }
}

int emit_report(const GlobalOpts& g, const CheckReport& report) {
    if (g.format == "json")
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    return report.pass() ? 0 : 1;
}

// Parse a level polynomial honoring the coords flag; vertex input is
// converted to difference coordinates.
Poly read_level_poly(const std::string& text, const GlobalOpts& g) {
    Poly p = parse_poly(text, g.n, g.m, g.coords_enum());
    if (g.coords_enum() == Coords::Vertex)
        return to_difference(p, g.n, g.m);
    return p;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto slash = item.find('/');
        if (slash == std::string::npos)
            out.push_back(Rational(Integer(item)));
        else
            out.push_back(make_rational(Integer(item.substr(0, slash)),
                                        Integer(item.substr(slash + 1))));
    }
    return out;
}

std::string sigma_key(const std::vector<int>& sigma) {
    std::string s = "(";
    for (std::size_t i = 0; i < sigma.size(); ++i)
        s += (i ? "," : "") + std::to_string(sigma[i]);
    return s + ")";
}

json certificate_json(const LocusPresentation& pres, const IdealMembership& im) {
    json cert;
    cert["verified"] = im.certificate.verified;
    cert["combination"] = json::array();
    for (const auto& [k, cof] : im.certificate.combination)
        cert["combination"].push_back(
            {{"index", k},
             {"generator", to_string(pres.generators[static_cast<std::size_t>(k)])},
             {"cofactor", to_string(cof)}});
    return cert;
}

std::string certificate_text(const LocusPresentation& pres, const IdealMembership& im) {
    std::string out;
    for (const auto& [k, cof] : im.certificate.combination)
        out += "  g" + std::to_string(k) + " = " +
               to_string(pres.generators[static_cast<std::size_t>(k)]) +
               "  cofactor: " + to_string(cof) + "\n";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for infinitesimal simplices, the de Rham complex "
                 "and Quillen modules"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--n", g.n, "ambient dimension")->check(CLI::PositiveNumber);
    app.add_option("--m", g.m, "simplicial level")->check(CLI::NonNegativeNumber);
    app.add_option("--coords", g.coords, "variable coordinates")
        ->check(CLI::IsMember({"vertex", "difference"}));
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string expr;
    std::string theta_csv;
    int target_level = -1;
    std::string point_csv;
    int order = 0;
    std::string kind = "rbracket";
    int deg_bound = -1;
    int deg = 2, trials = 100;
    std::uint64_t seed = 0;

    auto* reduce = app.add_subcommand("reduce", "normal form of a level polynomial");
    reduce->fallthrough();
    reduce->add_option("expr", expr)->required();

    auto* mapc = app.add_subcommand("map", "apply a simplex-category map to a level element");
    mapc->fallthrough();
    mapc->add_option("--theta", theta_csv, "value table of the monotone map")->required();
    mapc->add_option("--target", target_level, "target level (default: max of theta)");
    mapc->add_option("expr", expr)->required();

    auto* phic = app.add_subcommand("phi", "form transcription of a level element");
    phic->fallthrough();
    phic->add_option("expr", expr)->required();

    auto* psic = app.add_subcommand("psi", "level element transcription of a form");
    psic->fallthrough();
    psic->add_option("expr", expr)->required();

    auto* dc = app.add_subcommand("d", "exterior derivative of a form");
    dc->fallthrough();
    dc->add_option("expr", expr)->required();

    auto* d0c = app.add_subcommand("d0", "normalized differential of a level element");
    d0c->fallthrough();
    d0c->add_option("expr", expr)->required();

    auto* taylorc = app.add_subcommand("taylor", "Taylor split around a rational point");
    taylorc->fallthrough();
    taylorc->add_option("--point", point_csv, "comma-separated rational coordinates")->required();
    taylorc->add_option("--order", order)->required()->check(CLI::NonNegativeNumber);
    taylorc->add_option("expr", expr)->required();

    auto* ideal = app.add_subcommand("ideal", "ideal membership and equality queries");
    ideal->fallthrough();
    ideal->require_subcommand(1);
    auto* member = ideal->add_subcommand("member", "membership with certificate");
    member->fallthrough();
    member->add_option("--kind", kind)->check(CLI::IsMember({"d", "dtilde", "rbracket"}));
    member->add_option("--deg-bound", deg_bound);
    member->add_option("expr", expr)->required();
    auto* equality = ideal->add_subcommand("equality", "equality of the level-m ideals");
    equality->fallthrough();
    equality->add_option("--deg-bound", deg_bound);

    auto* check = app.add_subcommand("check", "verification harnesses");
    check->fallthrough();
    check->require_subcommand(1);
    auto* derham_c = check->add_subcommand("derham", "normalized complex vs exterior derivative");
    auto* cosimp_c = check->add_subcommand("cosimplicial", "functoriality and ideal preservation");
    auto* modules_c = check->add_subcommand("modules", "square-zero/tangent module suite");
    for (auto* c : {derham_c, cosimp_c, modules_c}) {
        c->fallthrough();
        c->add_option("--deg", deg, "coefficient degree bound");
        c->add_option("--trials", trials);
        c->add_option("--seed", seed);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*reduce) {
            const InfElement e = normal_form(read_level_poly(expr, g), g.n, g.m);
            emit_value(g, "reduce", g.params(), to_string(e), to_string(e));
            return 0;
        }
        if (*mapc) {
            const auto values = parse_int_list(theta_csv);
            int target = target_level;
            if (target < 0)
                for (int v : values)
                    target = std::max(target, v);
            const DeltaMap theta = make_delta(values, target);
            if (theta.source() != g.m)
                throw error("theta has source level " + std::to_string(theta.source()) +
                            " but --m is " + std::to_string(g.m));
            const InfElement e = normal_form(read_level_poly(expr, g), g.n, g.m);
            const InfElement out = inf_map(theta, e);
            json params = g.params();
            params["theta"] = theta_csv;
            params["target"] = target;
            emit_value(g, "map", params, to_string(out), to_string(out));
            return 0;
        }
        if (*phic) {
            const DForm w = phi(normal_form(read_level_poly(expr, g), g.n, g.m));
            emit_value(g, "phi", g.params(), to_string(w), to_string(w));
            return 0;
        }
        if (*psic) {
            const ParsedForm pf = parse_form(expr, g.n);
            for (const auto& warning : pf.warnings)
                std::cerr << "warning: " << warning << "\n";
            const InfElement e = psi(pf.form);
            json params = g.params();
            params["m"] = pf.form.degree();
            emit_value(g, "psi", params, to_string(e), to_string(e));
            return 0;
        }
        if (*dc) {
            const ParsedForm pf = parse_form(expr, g.n);
            for (const auto& warning : pf.warnings)
                std::cerr << "warning: " << warning << "\n";
            const DForm dw = exterior_derivative(pf.form);
            emit_value(g, "d", g.params(), to_string(dw), to_string(dw));
            return 0;
        }
        if (*d0c) {
            const InfElement e = normal_form(read_level_poly(expr, g), g.n, g.m);
            const InfElement out = normalized_differential(normalized_class(e));
            emit_value(g, "d0", g.params(), to_string(out), to_string(out));
            return 0;
        }
        if (*taylorc) {
            const Poly f = parse_base_poly(expr, g.n);
            const auto coords = parse_rational_list(point_csv);
            if (static_cast<int>(coords.size()) != g.n)
                throw error("--point needs exactly n = " + std::to_string(g.n) + " coordinates");
            std::map<Var, Rational> point;
            for (int j = 1; j <= g.n; ++j)
                point.emplace(base_var(j), coords[static_cast<std::size_t>(j - 1)]);
            const TaylorSplit split = taylor_split(f, point, order);
            json params = g.params();
            params["point"] = point_csv;
            params["order"] = order;
            std::string text = "taylor: " + to_string(split.taylor);
            json remainders = json::object();
            for (const auto& [sigma, gpoly] : split.remainders) {
                text += "\ng" + sigma_key(sigma) + ": " + to_string(gpoly);
                remainders[sigma_key(sigma)] = to_string(gpoly);
            }
            emit_value(g, "taylor", params,
                       text, json{{"taylor", to_string(split.taylor)}, {"remainders", remainders}});
            return 0;
        }
        if (*member) {
            const LocusKind lk = kind == "d" ? LocusKind::D
                                 : kind == "dtilde" ? LocusKind::Dtilde
                                                    : LocusKind::Rbracket;
            const Coords coords = lk == LocusKind::D ? Coords::Difference : g.coords_enum();
            const LocusPresentation pres = generators(lk, coords, g.n, g.m);
            const Poly p = lk == LocusKind::D ? parse_base_poly(expr, g.n)
                                              : parse_poly(expr, g.n, g.m, coords);
            const int bound = deg_bound < 0 ? std::max(2, p.degree()) : deg_bound;
            const IdealMembership im = ideal_member(p, pres, bound);
            json params = g.params();
            params["kind"] = kind;
            params["deg_bound"] = bound;
            if (g.format == "json") {
                json out{{"command", "ideal member"},
                         {"params", params},
                         {"member", im.member}};
                if (im.member)
                    out["certificate"] = certificate_json(pres, im);
                std::cout << out.dump(2) << "\n";
            } else if (im.member) {
                std::cout << "member\n" << certificate_text(pres, im);
            } else {
                std::cout << "not a member (cofactor degree bound " << bound - 2 << ")\n";
            }
            return im.member ? 0 : 1;
        }
        if (*equality) {
            const int bound = deg_bound < 0 ? 2 : deg_bound;
            const IdealEqualityReport rep = ideal_equality_check(g.m, g.n, bound);
            if (g.format == "json") {
                json out{{"command", "ideal equality"}, {"params", g.params()},
                         {"equal", rep.equal}};
                out["lhs_in_rhs"] = json::array();
                for (std::size_t i = 0; i < rep.lhs_in_rhs.size(); ++i)
                    out["lhs_in_rhs"].push_back(
                        {{"generator", to_string(rep.lhs.generators[i])},
                         {"member", rep.lhs_in_rhs[i].member},
                         {"certificate", certificate_json(rep.rhs, rep.lhs_in_rhs[i])}});
                out["rhs_in_lhs"] = json::array();
                for (std::size_t i = 0; i < rep.rhs_in_lhs.size(); ++i)
                    out["rhs_in_lhs"].push_back(
                        {{"generator", to_string(rep.rhs.generators[i])},
                         {"member", rep.rhs_in_lhs[i].member},
                         {"certificate", certificate_json(rep.lhs, rep.rhs_in_lhs[i])}});
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << (rep.equal ? "equal" : "NOT equal") << " ("
                          << rep.lhs.generators.size() << " pairwise-difference generators, "
                          << rep.rhs.generators.size() << " antisymmetry generators)\n";
            }
            return rep.equal ? 0 : 1;
        }
        if (*derham_c)
            return emit_report(g, theorem_check(g.n, g.m, deg, trials, seed));
        if (*cosimp_c)
            return emit_report(g, check_cosimplicial_identities(g.n, g.m, deg, trials, seed));
        if (*modules_c)
            return emit_report(g, check_modules(trials, seed));
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
