#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rp2braid/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out, err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "rp2braid");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = rp2braid::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

void check_envelope(const json& j, const std::string& command) {
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("command") == command);
    CHECK(j.contains("parameters"));
    CHECK(j.contains("payload"));
    CHECK(j.contains("diagnostics"));
    CHECK((j.at("status") == "ok" || j.at("status") == "fail"));
}

}  // namespace

TEST_CASE("congruence n=3") {
    auto r = run({"congruence", "--n", "3"});
    CHECK(r.code == 0);
    auto j = r.report();
    check_envelope(j, "congruence");
    CHECK(j["payload"]["modulus"] == 6);
    CHECK(j["payload"]["residues"] == json::array({0, 4}));
    CHECK(!r.err.empty());
}

TEST_CASE("nilpotent-check n=1 m=3 is equal") {
    auto r = run({"nilpotent-check", "--n", "1", "--m", "3"});
    CHECK(r.code == 0);
    CHECK(r.report()["payload"]["equal"] == true);
    auto c = run({"nilpotent-check", "--n", "2", "--m", "1"}).report();
    CHECK(c["payload"]["equal"] == false);
    CHECK(c["payload"]["gamma2_mod_gamma3"]["rank"] == 1);
}

TEST_CASE("present the one-strand group") {
    auto j = run({"present", "--family", "VanBuskirk_Bn", "--n", "1"}).report();
    check_envelope(j, "present");
    CHECK(j["payload"]["generators"].size() == 1);
    CHECK(j["payload"]["relators"].size() == 1);
    auto t = run({"present", "--family", "VanBuskirk_Bn", "--n", "1", "--format", "text"});
    CHECK(t.code == 0);
    CHECK(t.out.find("relators:") != std::string::npos);
    CHECK(json::parse(t.err.substr(t.err.find('{')))["command"] == "present");
}

TEST_CASE("abelianize") {
    auto j = run({"abelianize", "--family", "PuncturedFull_beta", "--n", "3", "--m", "2"}).report();
    CHECK(j["payload"]["rank"] == 3);
    CHECK(j["payload"]["torsion"] == json::array({2}));
}

TEST_CASE("split-constraints with trace") {
    auto r = run({"split-constraints", "--n", "5", "--trace"});
    CHECK(r.code == 0);
    auto j = r.report();
    CHECK(j["payload"]["modulus"] == 4);
    CHECK(j["payload"]["residues"] == json::array({0}));
    CHECK(!j["payload"]["equations"].empty());
    bool l_zero = false, kbar = false, mlbar = false;
    for (const auto& id : j["payload"]["identities"]) {
        std::string l = id["label"];
        CHECK(id["holds"] == true);
        l_zero = l_zero || l == "l_{1} = 0";
        kbar = kbar || l == "kbar_{1,4} = 0";
        mlbar = mlbar || l == "m + lbar = (n-2)(k_{1,1} + k_{1,2})";
    }
    CHECK(l_zero);
    CHECK(kbar);
    CHECK(mlbar);
    auto plain = run({"split-constraints", "--n", "5"}).report();
    CHECK(!plain["payload"].contains("identities"));
}

TEST_CASE("verify-section and verify-no-section") {
    auto a = run({"verify-section", "--n", "2", "--m", "4"});
    CHECK(a.code == 0);
    CHECK(a.report()["payload"]["checks"].size() == 3);
    auto b = run({"verify-no-section", "--n", "1", "--m", "3"});
    CHECK(b.code == 0);
    CHECK(!b.report()["payload"]["oracle_facts"].empty());
    CHECK(run({"verify-section", "--n", "3", "--m", "4"}).code == 2);
}

TEST_CASE("forget") {
    auto j = run({"forget", "--word", "s2 r3 s2^-1", "--total", "3", "--keep", "2"}).report();
    CHECK(j["payload"]["word"] == "r2");
}

TEST_CASE("usage errors exit 2 and still report") {
    for (auto args : std::vector<std::vector<std::string>>{
             {}, {"frobnicate"}, {"congruence"}, {"congruence", "--n", "3", "--bogus"}, {"congruence", "--n", "2"},
             {"present", "--family", "Nope", "--n", "1"}, {"section-geom", "--method", "spiral", "--n", "3"}}) {
        auto r = run(args);
        CHECK(r.code == 2);
        auto j = r.report();
        CHECK(j["status"] == "fail");
        CHECK(j["diagnostics"].contains("error"));
    }
}

TEST_CASE("section-geom from a seed and from a file; reports are deterministic") {
    auto a = run({"--seed", "5", "section-geom", "--method", "mobius", "--n", "3"});
    auto b = run({"section-geom", "--method", "mobius", "--n", "3", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = a.report();
    CHECK(j["payload"]["outputs"].size() == 60);
    CHECK(j["parameters"]["seed"] == 5);
    for (auto key : {"radius", "min_separation", "max_residual"}) CHECK(j["diagnostics"].contains(key));

    const std::string path = "cli_points_test.txt";
    {
        std::ofstream f(path);
        f << "1 0 0\n# comment\n0 1 0\n\n0 0 1\n0.6 0.8 0.0\n";
    }
    auto s = run({"section-geom", "--method", "shrink", "--points", path});
    CHECK(s.code == 0);
    CHECK(s.report()["payload"]["outputs"].size() == 24);
    CHECK(run({"section-geom", "--method", "shrink", "--points", path, "--n", "3"}).code == 2);
    auto svg = run({"section-geom", "--method", "shrink", "--points", path, "--format", "svg"});
    CHECK(svg.out.rfind("<svg", 0) == 0);
    {
        std::ofstream f(path);
        f << "1 0 0\n0 1 0\n-1 0 0\n";
    }
    CHECK(run({"section-geom", "--method", "shrink", "--points", path}).code == 2);
    std::remove(path.c_str());
}
