#include "modcurve/cli/cli.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modcurve/belyi/catalog.hpp"
#include "modcurve/belyi/parse.hpp"
#include "modcurve/belyi/ratmap.hpp"
#include "modcurve/dessin/dot.hpp"
#include "modcurve/dessin/passport.hpp"
#include "modcurve/isogeny/curve.hpp"
#include "modcurve/isogeny/wp.hpp"
#include "modcurve/modeq/jvalues.hpp"
#include "modcurve/modeq/modular.hpp"
#include "modcurve/psl2/coset.hpp"
#include "modcurve/psl2/cusp.hpp"
#include "modcurve/psl2/subgroup.hpp"

namespace modcurve {

namespace {

using nlohmann::json;

std::string sci(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6e", x);
    return buf;
}

Int parse_integer(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("not an integer: " + s);
    }
}

Rat parse_rational(const std::string& s) {
    Rat r;
    try {
        r = Rat(s);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("not a rational number: " + s);
    }
    if (sgn(Int(r.get_den())) == 0) throw std::domain_error("zero denominator in " + s);
    r.canonicalize();
    return r;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int do_subgroup_info(const std::string& spec_str, bool use_json, std::ostream& out) {
    SubgroupSpec spec = parse_subgroup_spec(spec_str);
    CosetTable table(spec, Ambient::Gamma1);
    SubgroupInvariants inv = subgroup_invariants(table);
    if (use_json) {
        json cs = json::array();
        for (const auto& c : inv.cusps) cs.push_back({{"rep", c.rep.text()}, {"width", c.width}});
        emit(out, json{{"index", inv.index},
                       {"genus", inv.genus},
                       {"nu2", inv.nu2},
                       {"nu3", inv.nu3},
                       {"cusps", cs}});
    } else {
        out << "index=" << inv.index << " genus=" << inv.genus << " nu2=" << inv.nu2
            << " nu3=" << inv.nu3 << " cusps=[";
        for (size_t i = 0; i < inv.cusps.size(); ++i) {
            if (i) out << ",";
            out << "(" << inv.cusps[i].rep.text() << "," << inv.cusps[i].width << ")";
        }
        out << "]\n";
    }
    return 0;
}

int do_dessin(bool dot_mode, long construction, const std::string& spec_str, bool use_json,
              std::ostream& out) {
    SubgroupSpec spec = parse_subgroup_spec(spec_str);
    CosetTable table(spec, construction == 1 ? Ambient::Gamma1 : Ambient::Gamma2);
    if (dot_mode) {
        MonodromyTriple tr =
            construction == 1 ? construction1_triple(table) : construction2_triple(table);
        std::string dot = export_dot(tr);
        if (use_json)
            emit(out, json{{"dot", dot}});
        else
            out << dot;
        return 0;
    }
    DessinPassport p =
        construction == 1 ? passport_from_construction1(table) : passport_from_construction2(table);
    if (use_json) {
        json j{{"m", p.m},       {"g", p.genus},      {"black", p.black},
               {"white", p.white}, {"faces", p.faces}};
        if (p.has_counts) {
            j["nu2"] = p.nu2;
            j["nu3"] = p.nu3;
            j["nu_inf"] = p.nu_inf;
        }
        emit(out, j);
    } else {
        out << p.text() << "\n";
    }
    return 0;
}

int do_belyi_verify(const std::string& expr, bool use_json, std::ostream& out) {
    RatMap f = parse_rat_map(expr);
    RamProfile prof = ram_profile(f);
    bool ok = is_belyi(f);
    if (use_json) {
        emit(out, json{{"belyi", ok},
                       {"degree", prof.degree},
                       {"over0", prof.over_zero},
                       {"over1", prof.over_one},
                       {"overinf", prof.over_inf}});
    } else {
        out << "belyi=" << (ok ? "true" : "false") << " " << prof.text() << "\n";
    }
    return ok ? 0 : 1;
}

int do_modeq(long level, const std::string& fexpr, const std::string& gexpr,
             const std::string& scale_str, bool check_route, const std::string& shift_str,
             bool use_json, std::ostream& out) {
    const bool preset = level != 0;
    RatMap f = preset ? (level == 2 ? j_map_gamma0_2() : j_map_gamma0_3()) : parse_rat_map(fexpr);
    RatMap g = preset ? (level == 2 ? scaled_j_map_gamma0_2() : scaled_j_map_gamma0_3())
                      : parse_rat_map(gexpr);
    Int scale = preset ? Int(1728) : parse_integer(scale_str);
    if (check_route && scale != 1728)
        throw std::domain_error("the symmetric-route check is defined for scale 1728 only");

    ModularPolynomial m = modular_polynomial(f, g, scale);
    if (preset) m.level = level;

    int code = 0;
    json j{{"phi", m.text()},
           {"level", m.level},
           {"symmetric", m.symmetric},
           {"leading_one", m.leading_one},
           {"sign_flipped", m.sign_flipped},
           {"content_removed", m.content_removed.get_str()}};
    std::string extra;
    if (check_route) {
        SymmetricRouteReport rep = symmetric_route_check(f, g, parse_rational(shift_str));
        extra = "p=" + rep.p.text("y") + "\nq=" + rep.q.text("y") +
                "\nsymmetric-route=" + (rep.matches ? "match" : "mismatch") + "\n";
        j["route"] = json{{"match", rep.matches}, {"p", rep.p.text("y")}, {"q", rep.q.text("y")}};
        if (!rep.matches) code = 1;
    }
    if (use_json)
        emit(out, j);
    else
        out << m.text() << "\n" << extra;
    return code;
}

int do_jvalues(long level, bool use_json, std::ostream& out) {
    std::vector<SpecialValue> vals = special_values_level(level);
    if (use_json) {
        json arr = json::array();
        for (const auto& v : vals) {
            json e{{"label", v.label}, {"point", v.point.text()}, {"ok", v.ok}};
            e["value"] = v.ok ? json(v.value.text()) : json(nullptr);
            e["factored"] = v.factored;
            arr.push_back(e);
        }
        emit(out, json{{"level", level}, {"values", arr}});
    } else {
        for (const auto& v : vals) out << v.text() << "\n";
    }
    return 0;
}

int do_isogeny_verify(const std::string& preset, const std::string& src_expr,
                      const std::string& tgt_expr, const std::string& h_expr,
                      const std::string& g_expr, bool use_json, std::ostream& out) {
    EllCurveHyper source = hexagonal_curve();
    EllCurveHyper target = hexagonal_curve();
    IsogenyMap map = hexagonal_isogeny3();
    if (!preset.empty()) {
        if (preset == "square5") {
            source = target = square_curve();
            map = square_isogeny5();
        } else if (preset != "hexagonal3") {
            throw std::domain_error("unknown preset: " + preset +
                                    " (expected hexagonal3 or square5)");
        }
    } else {
        auto curve_from = [](const std::string& expr) {
            RatMap m = parse_rat_map(expr);
            if (!m.func().is_polynomial())
                throw std::domain_error("curve right-hand side must be a polynomial: " + expr);
            return EllCurveHyper(m.func().num());
        };
        source = curve_from(src_expr);
        target = curve_from(tgt_expr);
        map = IsogenyMap{parse_rat_map(h_expr).func(), parse_rat_map(g_expr).func()};
    }
    IsogenyCheck chk = verify_isogeny(source, target, map);
    if (use_json) {
        emit(out, json{{"verified", chk.verified},
                       {"degree", chk.degree},
                       {"source", source.text()},
                       {"target", target.text()}});
    } else {
        out << "verified=" << (chk.verified ? "true" : "false") << " degree=" << chk.degree
            << "\n";
    }
    return chk.verified ? 0 : 1;
}

int do_wp_check(const std::string& lattice, bool perturbed, bool use_json, std::ostream& out) {
    std::vector<std::pair<std::string, WpPreset>> runs;
    if (lattice == "hexagonal" || lattice == "both")
        runs.emplace_back("hexagonal", WpPreset::hexagonal);
    if (lattice == "square" || lattice == "both") runs.emplace_back("square", WpPreset::square);
    if (runs.empty())
        throw std::domain_error("unknown lattice: " + lattice +
                                " (expected hexagonal, square or both)");
    bool all = true;
    json arr = json::array();
    std::string lines;
    for (const auto& [name, which] : runs) {
        WpIdentityReport rep = verify_wp_identity(which, 1e-6, perturbed);
        all = all && rep.passed;
        lines += name + ": " + rep.text() + "\n";
        arr.push_back(json{{"lattice", name},
                           {"max_error", sci(rep.max_error)},
                           {"evaluated", rep.evaluated},
                           {"skipped", rep.skipped},
                           {"passed", rep.passed},
                           {"half_periods", rep.swapped_half_periods ? "swapped" : "standard"}});
    }
    if (use_json)
        emit(out, json{{"results", arr}});
    else
        out << lines;
    return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("modcurve");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for modular-group covers, Belyi maps and modular equations"};
    app.name("modcurve");
    app.require_subcommand(1);
    app.fallthrough();

    bool use_json = false;
    app.add_flag("--json", use_json, "emit a stable-key JSON document instead of plain text");

    int exit_code = 0;

    // subgroup info <spec>
    auto* subgroup = app.add_subcommand("subgroup", "congruence-subgroup invariants");
    subgroup->require_subcommand(1);
    auto* info = subgroup->add_subcommand("info", "index, genus, elliptic counts, cusps");
    std::string info_spec;
    info->add_option("spec", info_spec,
                     "gamma:N | gamma0:N | kernel:sigmaA=..;sigmaB=.. | join:gamma:N;word=..")
        ->required();
    info->callback([&] { exit_code = do_subgroup_info(info_spec, use_json, out); });

    // dessin passport|dot [--construction 1|2] <spec>
    auto* dessin = app.add_subcommand("dessin", "bipartite-graph data of a subgroup");
    dessin->require_subcommand(1);
    std::string dessin_spec;
    long construction = 1;
    auto add_dessin_sub = [&](const char* name, const char* help, bool dot_mode) {
        auto* s = dessin->add_subcommand(name, help);
        s->add_option("spec", dessin_spec, "subgroup spec")->required();
        s->add_option("--construction", construction, "1 (full ambient) or 2 (level-two ambient)")
            ->check(CLI::IsMember({1, 2}));
        s->callback(
            [&, dot_mode] { exit_code = do_dessin(dot_mode, construction, dessin_spec, use_json, out); });
        return s;
    };
    add_dessin_sub("passport", "degree, genus and the three partitions", false);
    add_dessin_sub("dot", "DOT text of the bipartite edge graph", true);

    // belyi verify --f <expr>
    auto* belyi = app.add_subcommand("belyi", "ramification of rational maps");
    belyi->require_subcommand(1);
    auto* bverify = belyi->add_subcommand("verify", "ramification profile and the Belyi test");
    std::string belyi_expr;
    bverify->add_option("--f", belyi_expr, "rational map in z")->required();
    bverify->callback([&] { exit_code = do_belyi_verify(belyi_expr, use_json, out); });

    // modeq --level 2|3 | --f .. --g .. [--scale ..] [--check-symmetric-route [--shift ..]]
    auto* modeq = app.add_subcommand("modeq", "eliminate z between two scaled maps");
    long modeq_level = 0;
    std::string modeq_f, modeq_g, modeq_scale = "1728", modeq_shift = "1";
    bool check_route = false;
    auto* level_opt = modeq->add_option("--level", modeq_level, "built-in pair (2 or 3)")
                          ->check(CLI::IsMember({2, 3}));
    auto* f_opt = modeq->add_option("--f", modeq_f, "first map");
    auto* g_opt = modeq->add_option("--g", modeq_g, "second map");
    modeq->add_option("--scale", modeq_scale, "integer multiplier of both maps (default 1728)");
    modeq->add_flag("--check-symmetric-route", check_route,
                    "also eliminate via y = z + 1/z and compare");
    modeq->add_option("--shift", modeq_shift,
                      "rational shift of z used by the symmetric route (default 1)");
    level_opt->excludes(f_opt)->excludes(g_opt);
    f_opt->needs(g_opt);
    g_opt->needs(f_opt);
    modeq->callback([&] {
        if (modeq_level == 0 && modeq_f.empty())
            throw CLI::RequiredError("--level or --f/--g");
        exit_code = do_modeq(modeq_level, modeq_f, modeq_g, modeq_scale, check_route, modeq_shift,
                             use_json, out);
    });

    // jvalues --level 2|3
    auto* jv = app.add_subcommand("jvalues", "registered special values of the scaled j-maps");
    long jv_level = 0;
    jv->add_option("--level", jv_level, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
    jv->callback([&] { exit_code = do_jvalues(jv_level, use_json, out); });

    // isogeny verify [preset] | --source .. --target .. --h .. --g ..
    auto* iso = app.add_subcommand("isogeny", "exact isogeny identities");
    iso->require_subcommand(1);
    auto* iverify = iso->add_subcommand("verify", "g^2 * rhs_source == rhs_target(h)");
    std::string iso_preset, iso_src, iso_tgt, iso_h, iso_g;
    auto* preset_opt =
        iverify->add_option("preset", iso_preset, "hexagonal3 or square5");
    auto* src_opt = iverify->add_option("--source", iso_src, "source curve right-hand side in z");
    auto* tgt_opt = iverify->add_option("--target", iso_tgt, "target curve right-hand side in z");
    auto* h_opt = iverify->add_option("--map-h", iso_h, "x-coordinate map in z");
    auto* g_opt2 = iverify->add_option("--map-g", iso_g, "y-multiplier map in z");
    preset_opt->excludes(src_opt)->excludes(tgt_opt)->excludes(h_opt)->excludes(g_opt2);
    src_opt->needs(tgt_opt)->needs(h_opt)->needs(g_opt2);
    iverify->callback([&] {
        if (iso_preset.empty() && iso_src.empty())
            throw CLI::RequiredError("preset or --source/--target/--map-h/--map-g");
        exit_code =
            do_isogeny_verify(iso_preset, iso_src, iso_tgt, iso_h, iso_g, use_json, out);
    });

    // wp check [--lattice hexagonal|square|both] [--perturbed]
    auto* wp = app.add_subcommand("wp", "numeric lattice-function identities");
    wp->require_subcommand(1);
    auto* wcheck = wp->add_subcommand("check", "multiplication identities at sample points");
    std::string wp_lattice = "both";
    bool wp_perturbed = false;
    wcheck->add_option("--lattice", wp_lattice, "hexagonal, square or both (default both)");
    wcheck->add_flag("--perturbed", wp_perturbed,
                     "use a wrong multiplier constant (negative control)");
    wcheck->callback([&] { exit_code = do_wp_check(wp_lattice, wp_perturbed, use_json, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace modcurve
