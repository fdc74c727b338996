#include "rp2braid/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rp2braid/acceptance.hpp"
#include "rp2braid/finite_models.hpp"
#include "rp2braid/geometry.hpp"
#include "rp2braid/intlinear.hpp"
#include "rp2braid/nilpotent.hpp"
#include "rp2braid/presentation.hpp"
#include "rp2braid/splitting.hpp"

namespace rp2braid::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// what a command hands back besides the payload
struct Outcome {
    json payload = json::object();
    json diagnostics = json::object();
    bool ok = true;
    std::string artifact;  // svg or plain text for stdout, replaces the report there
};

json abelian_json(const AbelianStructure& a) {
    json t = json::array();
    for (const auto& d : a.torsion) t.push_back(d.get_str());
    // small invariants print as numbers
    for (auto& x : t)
        if (x.get<std::string>().size() < 18) x = std::stoll(x.get<std::string>());
    return {{"rank", a.free_rank}, {"torsion", t}};
}

json words_json(const std::vector<Word>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(w.str());
    return a;
}

json vec_json(const geom::Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json points_json(const std::vector<geom::RP2Point>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(vec_json(p.v));
    return a;
}

json congruence_json(const Congruence& c) { return {{"modulus", c.modulus}, {"residues", c.residues}}; }

json checks_json(const std::vector<ModelCheck>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return a;
}

// flag values as numbers where they parse as numbers
json scalar_json(const std::string& v) {
    std::size_t used = 0;
    try {
        long long i = std::stoll(v, &used);
        if (used == v.size()) return i;
        double d = std::stod(v, &used);
        if (used == v.size()) return d;
    } catch (const std::exception&) {
    }
    return v;
}

std::optional<int> opt_m(int m) { return m > 0 ? std::optional<int>(m) : std::nullopt; }

std::vector<geom::RP2Point> read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open points file " + path);
    std::vector<geom::RP2Point> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream s(line);
        double a, b, c;
        if (!(s >> a)) continue;  // blank
        std::string rest;
        if (!(s >> b >> c) || (s >> rest)) throw UsageError("points file line " + std::to_string(lineno) + ": expected three floats");
        out.push_back(geom::RP2Point::from({a, b, c}));
    }
    return out;
}

std::string text_listing(const Presentation& p) {
    std::ostringstream s;
    s << to_string(p.family) << " n=" << p.n;
    if (p.m) s << " m=" << *p.m;
    s << "\ngenerators:";
    for (const auto& g : p.generators) s << ' ' << to_string(g);
    s << "\nrelators:\n";
    for (const auto& r : p.relators) s << "  " << (r.empty() ? "1" : r.str()) << '\n';
    return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Braid groups of the projective plane: presentations, quotients, splitting constraints, sections"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t seed = 0;
    double tol = 1e-9;
    app.add_option("--seed", seed, "seed for every randomized step")->capture_default_str();
    app.add_option("--tol", tol, "tolerance for coincident input points (section-geom)")->capture_default_str();

    std::string family, format = "json", word, method, points_file;
    int n = 0, m = 0, total = 0, keep = 0, k = 1;
    bool trace = false;

    auto* present = app.add_subcommand("present", "list generators and relators");
    present->add_option("--family", family)->required();
    present->add_option("--n", n)->required();
    present->add_option("--m", m);
    present->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* abel = app.add_subcommand("abelianize", "abelianization as rank and invariant factors");
    abel->add_option("--family", family)->required();
    abel->add_option("--n", n)->required();
    abel->add_option("--m", m);

    auto* nil = app.add_subcommand("nilpotent-check", "Gamma_2/Gamma_3 of beta_{n,m}");
    nil->add_option("--n", n)->required();
    nil->add_option("--m", m)->required();

    auto* split = app.add_subcommand("split-constraints", "linear constraints a splitting would impose");
    split->add_option("--n", n)->required();
    split->add_flag("--trace", trace, "include every relation instance and the named identities");

    auto* cong = app.add_subcommand("congruence", "admissible m modulo n(n-1)");
    cong->add_option("--n", n)->required();

    auto* vsec = app.add_subcommand("verify-section", "check the two-strand section");
    vsec->add_option("--n", n)->required();
    vsec->add_option("--m", m)->required();

    auto* vnos = app.add_subcommand("verify-no-section", "check the one-strand obstruction");
    vnos->add_option("--n", n)->required();
    vnos->add_option("--m", m)->required();

    auto* forget = app.add_subcommand("forget", "delete strands from a braid word");
    forget->add_option("--word", word)->required();
    forget->add_option("--total", total)->required();
    forget->add_option("--keep", keep)->required();

    auto* geo = app.add_subcommand("section-geom", "numeric cross-section from n points");
    geo->add_option("--method", method)->required()->check(CLI::IsMember({"mobius", "shrink"}));
    geo->add_option("--n", n);
    geo->add_option("--k", k)->capture_default_str();
    geo->add_option("--points", points_file, "one point per line, three floats");
    geo->add_option("--format", format)->check(CLI::IsMember({"json", "svg", "text"}));

    auto* self = app.add_subcommand("selftest", "run the acceptance suite");

    json report;
    report["schema_version"] = kSchemaVersion;
    auto emit = [&](const std::string& command, const json& params, const std::string& status, const json& payload,
                    const json& diag, int code, const std::string& artifact) {
        report["command"] = command;
        report["parameters"] = params;
        report["status"] = status;
        report["payload"] = payload;
        report["diagnostics"] = diag;
        if (artifact.empty()) {
            out << report.dump(2) << '\n';
        } else {
            out << artifact;
            err << report.dump(2) << '\n';
        }
        return code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        err << app.help();
        return emit("help", json::object(), "ok", json::object(), json::object(), 0, "");
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        std::string cmd = app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name();
        return emit(cmd, json::object(), "fail", json::object(), {{"error", e.what()}}, 2, "");
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    json params = {{"seed", seed}, {"tol", tol}};
    for (const CLI::Option* o : sub->get_options()) {
        if (o->get_name() == "--help" || o->count() == 0) continue;
        std::string key = o->get_name();
        while (!key.empty() && key[0] == '-') key.erase(0, 1);
        if (o->get_expected_min() == 0)
            params[key] = true;
        else
            params[key] = scalar_json(o->as<std::string>());
    }

    Outcome res;
    try {
        if (sub == present || sub == abel) {
            auto fam = parse_family(family);
            auto p = build(fam, n, family_uses_m(fam) ? opt_m(m) : std::nullopt);
            if (sub == present) {
                json gens = json::array();
                for (const auto& g : p.generators) gens.push_back(to_string(g));
                res.payload = {{"family", to_string(p.family)}, {"n", p.n}, {"m", p.m ? json(*p.m) : json(nullptr)},
                               {"generators", gens}, {"relators", words_json(p.relators)}};
                if (format == "text") res.artifact = text_listing(p);
                err << p.generators.size() << " generators, " << p.relators.size() << " relators\n";
            } else {
                auto a = abelianization(p);
                res.payload = abelian_json(a);
                err << "abelianization: " << a.str() << '\n';
            }
        } else if (sub == nil) {
            auto chk = check_gamma2_equals_gamma3(build(PresentationFamily::PuncturedFull_beta, n, m));
            res.payload = {{"gamma2_mod_gamma3", abelian_json(chk.result.quotient)}, {"equal", chk.equal}};
            err << "Gamma_2/Gamma_3 = " << chk.result.quotient.str() << (chk.equal ? " (Gamma_2 = Gamma_3)\n" : "\n");
        } else if (sub == split) {
            auto sys = derive_constraints(n);
            auto c = solve_for_m(sys);
            res.payload = congruence_json(c);
            json eqs = json::array();
            for (const auto& e : sys.equations) {
                json q = {{"source", e.source}, {"lhs", e.lhs.str()}, {"rhs", e.rhs.str()}};
                if (trace) {
                    q["indices"] = e.indices;
                    q["coordinate"] = e.coordinate;
                    q["mod2"] = e.mod2;
                }
                eqs.push_back(q);
            }
            res.payload["equations"] = eqs;
            if (trace) {
                json ids = json::array();
                bool all = true;
                for (const auto& d : derived_identities(sys)) {
                    ids.push_back({{"label", d.label}, {"mod2", d.mod2}, {"holds", d.holds}});
                    all = all && d.holds;
                }
                res.payload["identities"] = ids;
                json inst = json::array();
                for (const auto& r : relation_instances(n))
                    inst.push_back({{"source", r.source}, {"indices", r.indices}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}});
                res.payload["instances"] = inst;
                res.ok = all;
            }
            err << sys.equations.size() << " equations; m " << c.str() << '\n';
        } else if (sub == cong) {
            auto c = combined_congruence(n);
            res.payload = congruence_json(c);
            res.diagnostics = {{"splitting", congruence_json(solve_for_m(n))}, {"torsion", congruence_json(torsion_residues(n))}};
            err << c.str() << '\n';
        } else if (sub == vsec || sub == vnos) {
            if (sub == vsec && n != 2) throw UsageError("verify-section covers n = 2 only");
            if (sub == vnos && n != 1) throw UsageError("verify-no-section covers n = 1 only");
            auto rep = sub == vsec ? verify_section_n2(m) : verify_no_section_n1(m);
            json imgs = json::object();
            for (const auto& [name, w] : rep.images) imgs[name] = w.str();
            res.payload = {{"ok", rep.ok}, {"checks", checks_json(rep.checks)}, {"images", imgs}, {"oracle_facts", rep.oracle_facts}};
            res.ok = rep.ok;
            for (const auto& c : rep.checks) err << (c.passed ? "pass " : "FAIL ") << c.name << '\n';
        } else if (sub == forget) {
            Word w = forget_strands(Word::parse(word), total, keep);
            res.payload = {{"word", w.str()}, {"empty", w.empty()}};
            err << (w.empty() ? "1" : w.str()) << '\n';
        } else if (sub == geo) {
            std::vector<geom::RP2Point> pts;
            if (!points_file.empty()) {
                pts = read_points(points_file);
                if (n != 0 && n != static_cast<int>(pts.size()))
                    throw UsageError("--n " + std::to_string(n) + " but the file has " + std::to_string(pts.size()) + " points");
            } else {
                if (n < 1) throw UsageError("section-geom needs --points or --n with --seed");
                pts = geom::seeded_configuration(n, seed);
            }
            geom::antipodal_lift(pts, tol);  // duplicate check at the requested tolerance
            geom::GeometryOptions opt;
            opt.seed = seed;
            auto r = method == "mobius" ? geom::section_mobius(pts, k, opt) : geom::section_shrink(pts);
            res.payload = {{"method", r.method}, {"inputs", points_json(r.inputs)}, {"outputs", points_json(r.outputs)}};
            res.diagnostics = {{"radius", r.radius},
                               {"min_separation", r.min_separation},
                               {"max_residual", r.max_residual},
                               {"sep", r.sep},
                               {"antipodal_residual", r.antipodal_residual},
                               {"max_center_distance", r.max_center_distance},
                               {"discs_disjoint", r.discs_disjoint}};
            if (method == "mobius") res.diagnostics["pole"] = vec_json(r.pole);
            res.ok = r.min_separation > 1e-8 && r.max_residual < 1e-8 && r.antipodal_residual < 1e-10 &&
                     r.max_center_distance <= r.sep * (1 + 1e-12);
            if (format == "svg") res.artifact = geom::render_svg(r);
            if (format == "text") {
                std::ostringstream s;
                s << std::setprecision(17);
                for (const auto& p : r.outputs) s << p.v[0] << ' ' << p.v[1] << ' ' << p.v[2] << '\n';
                res.artifact = s.str();
            }
            err << r.outputs.size() << " output points, min separation " << r.min_separation << '\n';
        } else if (sub == self) {
            json crit = json::array();
            for (const auto& c : acceptance::run_all()) {
                crit.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"summary", c.summary}, {"failures", c.failures}});
                res.ok = res.ok && c.passed;
                err << "criterion " << c.id << ": " << (c.passed ? "PASS" : "FAIL") << "  " << c.title << " (" << c.seconds << " s)\n";
            }
            res.payload = {{"criteria", crit}};
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return emit(cmd, params, "fail", json::object(), {{"error", e.what()}}, 2, "");
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return emit(cmd, params, "fail", json::object(), {{"error", e.what()}}, 2, "");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return emit(cmd, params, "fail", json::object(), {{"error", e.what()}}, 1, "");
    }
    return emit(cmd, params, res.ok ? "ok" : "fail", res.payload, res.diagnostics, res.ok ? 0 : 1, res.artifact);
}

}  // namespace rp2braid::cli
