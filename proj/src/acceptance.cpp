#include "rp2braid/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <set>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rp2braid/finite_models.hpp"
#include "rp2braid/geometry.hpp"
#include "rp2braid/intlinear.hpp"
#include "rp2braid/nilpotent.hpp"
#include "rp2braid/presentation.hpp"
#include "rp2braid/splitting.hpp"

namespace rp2braid::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class... Ts>
std::string cat(const Ts&... parts) {
    std::ostringstream s;
    (s << ... << parts);
    return s.str();
}

// unit quaternions with +-1, +-i, +-j, +-k as sign * basis index
struct Quat {
    int sign = 1;
    int unit = 0;  // 0 = 1, 1 = i, 2 = j, 3 = k
    bool operator<(const Quat& o) const { return std::tie(sign, unit) < std::tie(o.sign, o.unit); }
    bool operator==(const Quat& o) const { return sign == o.sign && unit == o.unit; }
};

Quat qmul(Quat a, Quat b) {
    static const int tbl[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                                     {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                                     {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                                     {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
    const auto& e = tbl[a.unit][b.unit];
    return {a.sign * b.sign * e[0], e[1]};
}

Quat qinv(Quat a) { return a.unit == 0 ? a : Quat{-a.sign, a.unit}; }

Quat qeval(const Word& w, const std::map<Generator, Quat>& img) {
    Quat r;
    for (const auto& l : w.letters()) {
        Quat g = img.at(l.gen);
        if (l.exp < 0) g = qinv(g);
        for (std::int64_t e = 0; e < (l.exp < 0 ? -l.exp : l.exp); ++e) r = qmul(r, g);
    }
    return r;
}

void c1(CriterionResult& r) {
    r.title = "abelianization of beta_{n,m} is Z^n + Z_2 for 1<=n<=5, 1<=m<=4";
    auto t0 = Clock::now();
    int ok = 0;
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 4; ++m) {
            auto a = abelianization(build(PresentationFamily::PuncturedFull_beta, n, m));
            AbelianStructure want{n, {Int(2)}};
            if (a == want)
                ++ok;
            else
                r.failures.push_back(cat("n=", n, " m=", m, ": got ", a.str()));
        }
    double s = since(t0);
    if (s >= 5) r.failures.push_back(cat("runtime ", s, " s >= 5 s"));
    r.summary = cat(ok, "/20 parameter pairs match");
}

void c2(CriterionResult& r) {
    r.title = "base cases: B_1(RP^2) abelianizes to Z_2; P_2(RP^2) relators hold in Q_8";
    auto b1 = abelianization(build(PresentationFamily::VanBuskirk_Bn, 1));
    if (!(b1 == AbelianStructure{0, {Int(2)}})) r.failures.push_back("B_1 abelianization is " + b1.str());
    auto p2 = build(PresentationFamily::Pure_Pn, 2);
    // rho_1 -> i, rho_2 -> j, and the surface relation forces B_{1,2} = rho_1^2 = -1
    std::map<Generator, Quat> img{{Generator::rho(1), {1, 1}}, {Generator::rho(2), {1, 2}}, {Generator::B(1, 2), {-1, 0}}};
    for (const auto& rel : p2.relators)
        if (!(qeval(rel, img) == Quat{})) r.failures.push_back("relator " + rel.str() + " not killed in Q_8");
    std::set<Quat> seen{Quat{}};
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto x : std::vector<Quat>(seen.begin(), seen.end()))
            for (const auto& [g, q] : img)
                if (seen.insert(qmul(x, q)).second) grew = true;
    }
    if (seen.size() != 8) r.failures.push_back(cat("images generate ", seen.size(), " elements, not 8"));
    r.summary = cat("B_1 -> ", b1.str(), "; P_2 image has ", seen.size(), " elements");
}

void c3(CriterionResult& r) {
    r.title = "Gamma_2/Gamma_3 trivial for (1,3),(1,4),(2,3),(3,3); free rank-2 control gives Z";
    auto t0 = Clock::now();
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}, {3, 3}}) {
        auto chk = check_gamma2_equals_gamma3(build(PresentationFamily::PuncturedFull_beta, n, m));
        if (!chk.equal) r.failures.push_back(cat("(", n, ",", m, "): quotient ", chk.result.quotient.str()));
    }
    auto ctl = gamma2_mod_gamma3(build(PresentationFamily::PuncturedFull_beta, 2, 1));
    if (!(ctl.quotient == AbelianStructure{1, {}})) r.failures.push_back("control (2,1) gives " + ctl.quotient.str());
    double s = since(t0);
    if (s >= 60) r.failures.push_back(cat("runtime ", s, " s >= 60 s"));
    r.summary = "control quotient " + ctl.quotient.str();
}

void c4(CriterionResult& r) {
    r.title = "split-constraints gives modulus n-1, residues {0}, with the expected intermediate identities";
    for (int n = 3; n <= 6; ++n) {
        auto sys = derive_constraints(n);
        auto c = solve_for_m(sys);
        if (c.modulus != n - 1 || c.residues != std::vector<long long>{0})
            r.failures.push_back(cat("n=", n, ": ", c.str()));
        auto ids = derived_identities(sys);
        auto ends = [](const std::string& s, const std::string& t) {
            return s.size() >= t.size() && s.compare(s.size() - t.size(), t.size(), t) == 0;
        };
        const std::string tail = "," + std::to_string(n - 1) + "} = 0";
        const std::vector<std::pair<std::string, std::function<bool(const std::string&)>>> wanted{
            {"l_i = 0", [&](const std::string& l) { return l.rfind("l_{", 0) == 0 && ends(l, "} = 0"); }},
            {"kbar_{j,n-1} = 0", [&](const std::string& l) { return l.rfind("kbar_{", 0) == 0 && ends(l, tail); }},
            {"m + lbar = (n-2)(k_{1,1} + k_{1,2})",
             [](const std::string& l) { return l == "m + lbar = (n-2)(k_{1,1} + k_{1,2})"; }}};
        for (const auto& [name, match] : wanted) {
            int found = 0;
            bool all = true;
            for (const auto& d : ids)
                if (match(d.label)) {
                    ++found;
                    all = all && d.holds;
                }
            if (!found || !all) r.failures.push_back(cat("n=", n, ": identity ", name, found ? " fails" : " missing"));
        }
    }
    r.summary = "n = 3..6";
}

void c5(CriterionResult& r) {
    r.title = "congruence {0,(n-1)^2} mod n(n-1) for 3<=n<=10, equal to brute force";
    auto t0 = Clock::now();
    for (int n = 3; n <= 10; ++n) {
        const long long M = 1LL * n * (n - 1);
        Congruence c = combined_congruence(n);
        std::vector<long long> want{0, (n - 1LL) * (n - 1) % M};
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        if (c.modulus != M || c.residues != want) r.failures.push_back(cat("n=", n, ": ", c.str()));
        // independent enumeration: divisibility from the splitting constraints, torsion from strand counts
        std::set<long long> brute;
        for (long long m = 1; m <= 5 * M; ++m)
            if (m % (n - 1) == 0 && ((n + m) % n == 0 || (n - 1 + m) % n == 0)) brute.insert(m % M);
        if (brute != std::set<long long>(c.residues.begin(), c.residues.end()))
            r.failures.push_back(cat("n=", n, ": brute force disagrees"));
    }
    double s = since(t0);
    if (s >= 1) r.failures.push_back(cat("runtime ", s, " s >= 1 s"));
    r.summary = "n = 3..10";
}

void c6(CriterionResult& r) {
    r.title = "geometric section counts lie in the residue set";
    int checked = 0;
    for (int n = 3; n <= 10; ++n) {
        Congruence c = combined_congruence(n);
        std::vector<long long> ms{2LL * n * (n - 1)};
        for (int k = 1; k <= 5; ++k) ms.push_back(1LL * k * n * (2 * n - 1) * (2 * n - 2));
        for (long long m : ms) {
            ++checked;
            if (!c.contains(m)) r.failures.push_back(cat("n=", n, " m=", m, " not in ", c.str()));
        }
    }
    r.summary = cat(checked, " counts checked");
}

void c7(CriterionResult& r) {
    r.title = "n=2 section passes all three checks for 1<=m<=8";
    auto t0 = Clock::now();
    for (int m = 1; m <= 8; ++m) {
        auto rep = verify_section_n2(m);
        if (rep.checks.size() != 3) r.failures.push_back(cat("m=", m, ": expected three checks"));
        for (const auto& ch : rep.checks)
            if (!ch.passed) r.failures.push_back(cat("m=", m, ": ", ch.name, " ", ch.detail));
    }
    double s = since(t0);
    if (s >= 5) r.failures.push_back(cat("runtime ", s, " s >= 5 s"));
    r.summary = "m = 1..8";
}

void c8(CriterionResult& r) {
    r.title = "n=1: forgetting kills the full twist, non-existence via the order-2 fact";
    for (int m = 1; m <= 6; ++m) {
        Word f = forget_strands(full_twist(1 + m), 1 + m, 1);
        if (!f.empty()) r.failures.push_back(cat("m=", m, ": forgotten twist is ", f.str()));
        auto rep = verify_no_section_n1(m);
        if (!rep.ok) r.failures.push_back(cat("m=", m, ": report not ok"));
        if (rep.oracle_facts.empty()) r.failures.push_back(cat("m=", m, ": no oracle fact cited"));
    }
    r.summary = "m = 1..6";
}

std::vector<geom::RP2Point> permuted(std::vector<geom::RP2Point> p) {
    std::rotate(p.begin(), p.begin() + 1, p.end());
    std::swap(p[0], p[1]);
    return p;
}

void c9(CriterionResult& r) {
    r.title = "Mobius section numerics for n in {3,4,5}, k in {1,2}";
    double worst_res = 0, worst_sep = 1e9, worst_anti = 0, worst_perm = 0;
    for (int n = 3; n <= 5; ++n)
        for (int k = 1; k <= 2; ++k) {
            auto pts = geom::seeded_configuration(n, 100 + n);
            auto t0 = Clock::now();
            auto res = geom::section_mobius(pts, k);
            double s = since(t0);
            auto tag = cat("n=", n, " k=", k, ": ");
            long long want = 1LL * k * n * (2 * n - 1) * (2 * n - 2);
            if (static_cast<long long>(res.outputs.size()) != want)
                r.failures.push_back(cat(tag, res.outputs.size(), " outputs, want ", want));
            if (!(res.max_residual < 1e-8)) r.failures.push_back(cat(tag, "residual ", res.max_residual));
            if (!(res.min_separation > 1e-8)) r.failures.push_back(cat(tag, "separation ", res.min_separation));
            if (!(res.antipodal_residual < 1e-10)) r.failures.push_back(cat(tag, "antipodal ", res.antipodal_residual));
            double perm = geom::set_distance(res.outputs, geom::section_mobius(permuted(pts), k).outputs);
            if (!(perm < 1e-9)) r.failures.push_back(cat(tag, "permutation ", perm));
            if (s >= 10) r.failures.push_back(cat(tag, "runtime ", s, " s"));
            worst_res = std::max(worst_res, res.max_residual);
            worst_sep = std::min(worst_sep, res.min_separation);
            worst_anti = std::max(worst_anti, res.antipodal_residual);
            worst_perm = std::max(worst_perm, perm);
        }
    r.summary = cat("residual ", worst_res, ", separation ", worst_sep, ", antipodal ", worst_anti, ", permutation ",
                    worst_perm);
}

geom::Vec3 fixed_rotation(const geom::Vec3& p) {
    const geom::Vec3 k{1.0 / 3, 2.0 / 3, 2.0 / 3};
    const double c = std::cos(0.7), s = std::sin(0.7);
    geom::Vec3 kx = geom::cross(k, p);
    double kp = geom::dot(k, p);
    return {p[0] * c + kx[0] * s + k[0] * kp * (1 - c), p[1] * c + kx[1] * s + k[1] * kp * (1 - c),
            p[2] * c + kx[2] * s + k[2] * kp * (1 - c)};
}

void c10(CriterionResult& r) {
    r.title = "shrinking section numerics for n in {3,4,5}";
    double worst_rot = 0;
    for (int n = 3; n <= 5; ++n) {
        auto pts = geom::seeded_configuration(n, 100 + n);
        auto t0 = Clock::now();
        auto res = geom::section_shrink(pts);
        auto tag = cat("n=", n, ": ");
        if (static_cast<long long>(res.outputs.size()) != 2LL * n * (n - 1))
            r.failures.push_back(cat(tag, res.outputs.size(), " outputs"));
        if (!(res.max_center_distance <= res.sep * (1 + 1e-12)))
            r.failures.push_back(cat(tag, "output at distance ", res.max_center_distance, " > sep ", res.sep));
        if (!res.discs_disjoint) r.failures.push_back(tag + "discs overlap");
        std::vector<geom::RP2Point> rot, want;
        for (const auto& p : pts) rot.push_back(geom::RP2Point::from(fixed_rotation(p.v)));
        for (const auto& p : res.outputs) want.push_back(geom::RP2Point::from(fixed_rotation(p.v)));
        double d = geom::set_distance(want, geom::section_shrink(rot).outputs);
        if (!(d < 1e-9)) r.failures.push_back(cat(tag, "rotation ", d));
        double s = since(t0);
        if (s >= 1) r.failures.push_back(cat(tag, "runtime ", s, " s"));
        worst_rot = std::max(worst_rot, d);
    }
    r.summary = cat("rotation equivariance ", worst_rot);
}

}  // namespace

CriterionResult run_criterion(int id) {
    static const std::array<void (*)(CriterionResult&), 10> fns{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
    if (id < 1 || id > 10) throw std::invalid_argument("criterion id must be in 1..10");
    CriterionResult r;
    r.id = id;
    auto t0 = Clock::now();
    try {
        fns[id - 1](r);
    } catch (const std::exception& e) {
        r.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = since(t0);
    r.passed = r.failures.empty();
    return r;
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id));
    return out;
}

}  // namespace rp2braid::acceptance
