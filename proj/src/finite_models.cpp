#include "rp2braid/finite_models.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "rp2braid/presentation.hpp"

namespace rp2braid {

namespace {

int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

Word sigma_run(int from, int to, int e = 1) {
    Word w;
    if (from <= to)
        for (int i = from; i <= to; ++i) w.push(Generator::sigma(i), e);
    else
        for (int i = from; i >= to; --i) w.push(Generator::sigma(i), e);
    return w;
}

// B letters become sigma words; everything else is passed through.
Word expand_pure(const Word& w) {
    Word out;
    for (const auto& l : w.letters()) {
        if (l.gen.family != Family::B) {
            out.push(l.gen, l.exp);
            continue;
        }
        Word b = expand_B(l.gen.i, l.gen.j, 0);
        out.append(power(b, l.exp));
    }
    return out;
}

void check_letter(const Letter& l, int strands) {
    switch (l.gen.family) {
    case Family::sigma:
        if (l.gen.i < 1 || l.gen.i >= strands)
            throw std::invalid_argument(to_string(l.gen) + " out of range for " + std::to_string(strands) + " strands");
        break;
    case Family::rho:
        if (l.gen.i < 1 || l.gen.i > strands)
            throw std::invalid_argument(to_string(l.gen) + " out of range for " + std::to_string(strands) + " strands");
        break;
    case Family::B:
        if (l.gen.j > strands)
            throw std::invalid_argument(to_string(l.gen) + " out of range for " + std::to_string(strands) + " strands");
        break;
    default:
        throw std::invalid_argument(to_string(l.gen) + " is not a braid generator");
    }
}

}  // namespace

DicElement DicElement::x(int N, int p) { return {N, mod(p, 2 * N), 0}; }
DicElement DicElement::y(int N) { return {N, 0, 1}; }

std::string DicElement::str() const {
    if (i == 0 && eps == 0) return "1";
    std::string s;
    if (i != 0) s = i == 1 ? "x" : "x^" + std::to_string(i);
    if (eps) s += s.empty() ? "y" : " y";
    return s;
}

DicElement dic_mul(const DicElement& a, const DicElement& b) {
    if (a.N != b.N) throw std::invalid_argument("dicyclic elements with different N");
    const int M = 2 * a.N;
    if (a.eps == 0) return {a.N, mod(a.i + b.i, M), b.eps};
    if (b.eps == 0) return {a.N, mod(a.i - b.i, M), 1};
    return {a.N, mod(a.i - b.i + a.N, M), 0};
}

DicElement dic_inv(const DicElement& a) {
    if (a.eps == 0) return {a.N, mod(-a.i, 2 * a.N), 0};
    return {a.N, mod(a.i + a.N, 2 * a.N), 1};
}

DicElement dic_pow(const DicElement& a, long long k) {
    DicElement base = k < 0 ? dic_inv(a) : a;
    long long e = k < 0 ? -k : k;
    DicElement r = DicElement::one(a.N);
    while (e > 0) {
        if (e & 1) r = dic_mul(r, base);
        base = dic_mul(base, base);
        e >>= 1;
    }
    return r;
}

DicSubgroup dic_subgroup(int N, const std::vector<DicElement>& gens) {
    auto key = [](const DicElement& d) { return std::pair{d.i, d.eps}; };
    std::set<std::pair<int, int>> seen{{0, 0}};
    std::vector<DicElement> frontier{DicElement::one(N)};
    while (!frontier.empty()) {
        std::vector<DicElement> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                DicElement h = dic_mul(e, g);
                if (seen.insert(key(h)).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    DicSubgroup out;
    out.order = static_cast<int>(seen.size());
    if (gens.size() >= 2) {
        const DicElement& a = gens[0];
        const DicElement& b = gens[1];
        DicElement one = DicElement::one(N);
        out.dic16_relations = dic_pow(a, 8) == one && dic_pow(b, 2) == dic_pow(a, 4) &&
                              dic_mul(dic_mul(b, a), dic_inv(b)) == dic_inv(a);
    }
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t p = 0; p < img.size(); ++p)
        if (img[p] != static_cast<int>(p) + 1) return false;
    return true;
}

bool Permutation::preserves_block(int n) const {
    for (int p = 0; p < n && p < static_cast<int>(img.size()); ++p)
        if (img[p] > n) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s = "[";
    for (std::size_t p = 0; p < img.size(); ++p) s += (p ? " " : "") + std::to_string(img[p]);
    return s + "]";
}

Permutation perm_image(const Word& w, int strands) {
    if (strands < 1) throw std::invalid_argument("need at least one strand");
    Permutation P;
    P.img.resize(strands);
    std::iota(P.img.begin(), P.img.end(), 1);
    for (const auto& l : w.letters()) {
        check_letter(l, strands);
        if (l.gen.family == Family::sigma && (l.exp % 2 != 0)) std::swap(P.img[l.gen.i - 1], P.img[l.gen.i]);
    }
    return P;
}

Word forget_strands(const Word& w, int total, int keep) {
    if (keep < 0 || keep > total) throw std::invalid_argument("keep must lie in [0, total]");
    if (!perm_image(w, total).preserves_block(keep))
        throw std::invalid_argument("word does not preserve the strand partition; not in B_{n,m}");
    Word flat = expand_pure(w);
    std::vector<int> occ(total + 1);
    std::iota(occ.begin(), occ.end(), 0);
    auto kept_up_to = [&](int p) {
        int c = 0;
        for (int q = 1; q <= p; ++q) c += occ[q] <= keep;
        return c;
    };
    Word out;
    for (const auto& l : flat.letters()) {
        const int p = l.gen.i;
        if (l.gen.family == Family::sigma) {
            if (occ[p] <= keep && occ[p + 1] <= keep) out.push(Generator::sigma(kept_up_to(p)), l.exp);
            if (l.exp % 2 != 0) std::swap(occ[p], occ[p + 1]);
        } else if (occ[p] <= keep) {
            out.push(Generator::rho(kept_up_to(p)), l.exp);
        }
    }
    return free_reduce(out);
}

DicElement eval_B2RP2(const Word& w) {
    const DicElement s = DicElement::y(4);
    const DicElement r = dic_mul(DicElement::y(4), DicElement::x(4));
    DicElement acc = DicElement::one(4);
    for (const auto& l : w.letters()) {
        const Generator& g = l.gen;
        if (g == Generator::sigma(1))
            acc = dic_mul(acc, dic_pow(s, l.exp));
        else if (g == Generator::rho(1))
            acc = dic_mul(acc, dic_pow(r, l.exp));
        else
            throw std::invalid_argument("eval_B2RP2 accepts s1 and r1 only, got " + to_string(g));
    }
    return acc;
}

Word full_twist(int strands) { return free_reduce(power(sigma_run(1, strands - 1), strands)); }

Word half_twist(int strands) {
    Word w;
    for (int top = strands - 1; top >= 1; --top) w.append(sigma_run(1, top));
    return w;
}

Word dic_generator_a(int last_sigma) {
    Word w = sigma_run(last_sigma, 1, -1);
    w.push(Generator::rho(1));
    return w;
}

SectionReport verify_section_n2(int m) {
    if (m < 1) throw std::invalid_argument("verify-section needs m >= 1");
    SectionReport rep;
    rep.n = 2;
    rep.m = m;
    const int N = 2 + m;
    const int k = m / 2;
    Word c;  // s2 s3 ... s_{k+1}, empty when k = 0
    for (int i = 2; i <= k + 1; ++i) c.push(Generator::sigma(i));

    Word img_a, img_d;
    if (m % 2 == 0) {
        Word a = dic_generator_a(1 + 2 * k);
        img_a = power(a, k + 1);
        img_d = concat(power(a, k), half_twist(N));
    } else {
        Word b = dic_generator_a(2 * k + 1);
        Word a = dic_generator_a(2 * k + 2);
        img_a = power(b, k + 1);
        img_d = product({power(b, k), half_twist(N), invert(a)});
    }
    img_a = product({c, img_a, invert(c)});
    img_d = product({c, img_d, invert(c)});
    rep.images = {{"a2", img_a}, {"Delta2", img_d}};

    // (1) the abstract subgroup <x^{k+1}, x^k y> of Dic_{8(2+2k)}
    const int dicN = 2 * (2 + 2 * k);
    DicSubgroup sub = dic_subgroup(dicN, {DicElement::x(dicN, k + 1), dic_mul(DicElement::x(dicN, k), DicElement::y(dicN))});
    rep.checks.push_back({"dic16_subgroup", sub.order == 16 && sub.dic16_relations,
                          "order " + std::to_string(sub.order) + " in Dic_" + std::to_string(4 * dicN) +
                              (sub.dic16_relations ? ", relations hold" : ", relations fail")});

    // (2) images lie in B_{2,m}
    Permutation pa = perm_image(img_a, N), pd = perm_image(img_d, N);
    bool block = pa.preserves_block(2) && pd.preserves_block(2);
    rep.checks.push_back({"images_in_B2m", block, "perm(a2) " + pa.str() + ", perm(Delta2) " + pd.str()});

    // (3) forgetting the extra strands returns the generators
    bool back = false;
    std::string detail;
    if (block) {
        Word fa = forget_strands(img_a, N, 2), fd = forget_strands(img_d, N, 2);
        DicElement ea = eval_B2RP2(fa), ed = eval_B2RP2(fd);
        DicElement ta = eval_B2RP2(Word::parse("s1^-1 r1")), td = eval_B2RP2(Word::parse("s1"));
        back = ea == ta && ed == td;
        detail = "forget(a2) = [" + fa.str() + "] -> " + ea.str() + " (want " + ta.str() + "), forget(Delta2) = [" +
                 fd.str() + "] -> " + ed.str() + " (want " + td.str() + ")";
    } else {
        detail = "skipped: images not in B_{2,m}";
    }
    rep.checks.push_back({"forget_is_left_inverse", back, detail});

    rep.oracle_facts.push_back("B_2(RP^2) is isomorphic to Dic_16 (only the relations-hold direction is checked)");
    rep.ok = true;
    for (const auto& ch : rep.checks) rep.ok = rep.ok && ch.passed;
    return rep;
}

SectionReport verify_no_section_n1(int m) {
    if (m < 1) throw std::invalid_argument("verify-no-section needs m >= 1");
    SectionReport rep;
    rep.n = 1;
    rep.m = m;
    const int N = 1 + m;
    Word tw = full_twist(N);
    rep.images = {{"rho1", tw}};

    Permutation p = perm_image(tw, N);
    rep.checks.push_back({"full_twist_pure", p.is_identity(), "perm " + p.str()});

    Word f = forget_strands(tw, N, 1);
    rep.checks.push_back({"forget_full_twist_trivial", f.empty(), "forget = [" + f.str() + "]"});

    // B_1(RP^2) = Z_2 generated by r1; the image is the r1 exponent sum mod 2
    long long r = 0;
    for (const auto& l : f.letters()) r += l.exp;
    bool differs = (r % 2 + 2) % 2 != 1;
    rep.checks.push_back({"composite_not_identity", differs,
                          "q(s(r1)) = " + std::string(differs ? "1" : "r1") + " in Z_2, while r1 != 1"});

    rep.oracle_facts.push_back("the full twist is the unique element of order two in B_{1,m}(RP^2)");
    rep.ok = true;
    for (const auto& ch : rep.checks) rep.ok = rep.ok && ch.passed;
    return rep;
}

}  // namespace rp2braid
