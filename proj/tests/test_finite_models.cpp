#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <stdexcept>

#include "rp2braid/finite_models.hpp"
#include "rp2braid/presentation.hpp"
#include "support.hpp"

using namespace rp2braid;

namespace {

// Dic_{4N} inside SU(2): x -> diag(z, 1/z), y -> [[0,-1],[1,0]].
using C = std::complex<double>;
struct M2 {
    C a, b, c, d;
};
M2 mul(const M2& p, const M2& q) {
    return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}
M2 mat(const DicElement& e) {
    const double pi = std::acos(-1.0);
    C z = std::polar(1.0, pi * e.i / e.N);
    M2 xi{z, 0, 0, 1.0 / z};
    M2 y{0, -1, 1, 0};
    return e.eps ? mul(xi, y) : xi;
}
bool close(const M2& p, const M2& q) {
    return std::abs(p.a - q.a) + std::abs(p.b - q.b) + std::abs(p.c - q.c) + std::abs(p.d - q.d) < 1e-9;
}

std::vector<DicElement> all_elements(int N) {
    std::vector<DicElement> v;
    for (int e = 0; e < 2; ++e)
        for (int i = 0; i < 2 * N; ++i) v.push_back({N, i, e});
    return v;
}

// composition of transpositions, tracked independently of perm_image
std::vector<int> transposition_product(const Word& w, int N) {
    std::vector<int> at(N);
    std::iota(at.begin(), at.end(), 1);
    for (const auto& l : w.letters())
        for (long long t = 0; t < std::llabs(l.exp); ++t)
            if (l.gen.family == Family::sigma) std::swap(at[l.gen.i - 1], at[l.gen.i]);
    return at;
}

// random word in s_i, r_i on N strands, then sorted back into B_{n,m} with sigma letters
Word random_block_word(std::mt19937& rng, int N, int n, int len) {
    std::uniform_int_distribution<int> coin(0, 2), e(-2, 2);
    Word w;
    for (int t = 0; t < len; ++t) {
        int x = e(rng);
        if (x == 0) x = 1;
        if (coin(rng) == 0)
            w.push(Generator::rho(std::uniform_int_distribution<int>(1, N)(rng)), x);
        else if (N > 1)
            w.push(Generator::sigma(std::uniform_int_distribution<int>(1, N - 1)(rng)), x);
    }
    // bubble kept strands back into positions 1..n
    std::vector<int> occ = perm_image(w, N).img;
    for (bool moved = true; moved;) {
        moved = false;
        for (int p = 0; p + 1 < N; ++p)
            if (occ[p] > n && occ[p + 1] <= n) {
                std::swap(occ[p], occ[p + 1]);
                w.push(Generator::sigma(p + 1), (p % 2) ? 1 : -1);
                moved = true;
            }
    }
    return w;
}

}  // namespace

TEST_CASE("dicyclic defining relations, N = 4") {
    DicElement x = DicElement::x(4), y = DicElement::y(4), one = DicElement::one(4);
    CHECK(dic_pow(x, 8) == one);
    CHECK(dic_mul(y, y) == DicElement{4, 4, 0});
    CHECK(dic_mul(dic_mul(y, x), dic_inv(y)) == dic_inv(x));
    CHECK_THROWS_AS(dic_mul(x, DicElement::x(3)), std::invalid_argument);
}

TEST_CASE("dicyclic product agrees with the SU(2) model") {
    for (int N = 1; N <= 8; ++N) {
        auto els = all_elements(N);
        for (const auto& a : els) {
            CHECK(close(mat(dic_inv(a)), M2{mat(a).d, -mat(a).b, -mat(a).c, mat(a).a}));
            for (const auto& b : els) REQUIRE(close(mat(dic_mul(a, b)), mul(mat(a), mat(b))));
        }
    }
}

TEST_CASE("dicyclic group axioms, exhaustive for N <= 8") {
    for (int N = 1; N <= 8; ++N) {
        auto els = all_elements(N);
        DicElement one = DicElement::one(N);
        for (const auto& a : els) {
            CHECK(dic_mul(a, one) == a);
            CHECK(dic_mul(one, a) == a);
            CHECK(dic_mul(a, dic_inv(a)) == one);
            for (const auto& b : els)
                for (const auto& c : els) REQUIRE(dic_mul(dic_mul(a, b), c) == dic_mul(a, dic_mul(b, c)));
        }
    }
}

TEST_CASE("dicyclic relations hold for every N <= 12") {
    for (int N = 1; N <= 12; ++N) {
        DicElement x = DicElement::x(N), y = DicElement::y(N), one = DicElement::one(N);
        CHECK(dic_pow(x, 2 * N) == one);
        for (int t = 1; t < 2 * N; ++t) CHECK(dic_pow(x, t) != one);
        CHECK(dic_mul(y, y) == dic_pow(x, N));
        CHECK(dic_mul(dic_mul(y, x), dic_inv(y)) == dic_inv(x));
        CHECK(dic_subgroup(N, {x, y}).order == 4 * N);
    }
}

TEST_CASE("dic_subgroup examples") {
    auto k1 = dic_subgroup(8, {DicElement::x(8, 2), dic_mul(DicElement::x(8, 1), DicElement::y(8))});
    CHECK(k1.order == 16);
    CHECK(k1.dic16_relations);
    auto k2 = dic_subgroup(12, {DicElement::x(12, 3), dic_mul(DicElement::x(12, 2), DicElement::y(12))});
    CHECK(k2.order == 16);
    CHECK(k2.dic16_relations);
    auto cyc = dic_subgroup(4, {DicElement::x(4)});
    CHECK(cyc.order == 8);
    CHECK_FALSE(cyc.dic16_relations);
    for (int k = 0; k <= 6; ++k) {
        int N = 4 * (k + 1);
        auto s = dic_subgroup(N, {DicElement::x(N, k + 1), dic_mul(DicElement::x(N, k), DicElement::y(N))});
        CHECK(s.order == 16);
        CHECK(s.dic16_relations);
    }
}

TEST_CASE("perm_image examples") {
    CHECK(perm_image(Word::parse("s1"), 2).img == std::vector<int>{2, 1});
    CHECK(perm_image(Word::parse("r3"), 4).is_identity());
    CHECK(perm_image(Word::parse("s1 s2 s1 s2 s1 s2"), 3).is_identity());
    CHECK(transposition_product(Word::parse("s1 s2 s1 s2 s1 s2"), 3) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(perm_image(Word::parse("s3"), 3), std::invalid_argument);
    CHECK_THROWS_AS(perm_image(Word::parse("r4"), 3), std::invalid_argument);
    CHECK_THROWS_AS(perm_image(Word::parse("t1"), 3), std::invalid_argument);
}

TEST_CASE("perm_image is a homomorphism into S_N") {
    std::mt19937 rng(11);
    for (int t = 0; t < 500; ++t) {
        int N = 2 + t % 5;
        Word u = random_block_word(rng, N, N, 8), v = random_block_word(rng, N, N, 8);
        CHECK(perm_image(concat(u, v), N).img == transposition_product(concat(u, v), N));
        CHECK(perm_image(u, N).img == transposition_product(u, N));
    }
}

TEST_CASE("forget_strands examples") {
    for (int m = 1; m <= 5; ++m) CHECK(forget_strands(full_twist(1 + m), 1 + m, 1).empty());
    CHECK(forget_strands(Word::parse("s1^2"), 2, 1).empty());
    CHECK_THROWS_AS(forget_strands(Word::parse("s1"), 2, 1), std::invalid_argument);
    CHECK(forget_strands(Word::parse("r1 s2"), 3, 1) == Word::parse("r1"));
    CHECK(forget_strands(Word::parse("s2 r3 s2"), 3, 1).empty());
    CHECK(forget_strands(Word::parse("s2 r2 s2^-1"), 3, 2).empty());
    CHECK(forget_strands(Word::parse("s2 r3 s2^-1"), 3, 2) == Word::parse("r2"));
    CHECK(forget_strands(Word::parse("B1_3"), 3, 2).empty());
    CHECK_THROWS_AS(forget_strands(Word::parse("s2"), 3, 2), std::invalid_argument);
}

TEST_CASE("forget_strands is functorial and restricts permutations") {
    std::mt19937 rng(23);
    for (int t = 0; t < 2000; ++t) {
        int N = 2 + t % 6;
        int n = 1 + static_cast<int>(rng() % (N - 1));
        Word u = random_block_word(rng, N, n, 10), v = random_block_word(rng, N, n, 10);
        REQUIRE(perm_image(u, N).preserves_block(n));
        Word fu = forget_strands(u, N, n), fv = forget_strands(v, N, n);
        CHECK(forget_strands(concat(u, v), N, n) == concat(fu, fv));
        const std::vector<int> full = perm_image(u, N).img;
        std::vector<int> restricted(full.begin(), full.begin() + n);
        CHECK(perm_image(fu, n).img == restricted);
    }
}

TEST_CASE("eval_B2RP2 examples and model relations") {
    CHECK(eval_B2RP2(Word::parse("s1")) == DicElement{4, 0, 1});
    CHECK(eval_B2RP2(Word::parse("r1^2")) == DicElement{4, 4, 0});
    CHECK(eval_B2RP2(Word::parse("s1^2")) == DicElement{4, 4, 0});
    CHECK(eval_B2RP2(Word::parse("s1 r1^-1 s1 r1^-1 s1 r1^-1 s1 r1^-1")) == DicElement{4, 4, 0});
    CHECK_THROWS_AS(eval_B2RP2(Word::parse("r2")), std::invalid_argument);
    CHECK(dic_subgroup(4, {eval_B2RP2(Word::parse("s1")), eval_B2RP2(Word::parse("r1"))}).order == 16);

    // a2 = s1^-1 r1 and Delta2 = s1 satisfy the Dic_16 relations
    DicElement a = eval_B2RP2(Word::parse("s1^-1 r1")), d = eval_B2RP2(Word::parse("s1"));
    auto sub = dic_subgroup(4, {a, d});
    CHECK(sub.dic16_relations);
    CHECK(sub.order == 16);
}

TEST_CASE("eval_B2RP2 kills every relator of the two-strand braid group") {
    Presentation p = build(PresentationFamily::VanBuskirk_Bn, 2);
    Morphism phi{{Generator::sigma(1), Word::parse("s1")},
                 {Generator::rho(1), Word::parse("r1")},
                 {Generator::rho(2), Word::parse("s1^-1 r1 s1^-1")}};
    for (const auto& r : p.relators) CHECK(eval_B2RP2(apply_morphism(r, phi)) == DicElement::one(4));
}

TEST_CASE("section for n = 2 exists for every m") {
    for (int m = 1; m <= 9; ++m) {
        CAPTURE(m);
        SectionReport rep = verify_section_n2(m);
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.passed);
        }
        CHECK(rep.ok);
    }
}

TEST_CASE("section for n = 2, m = 2 forgets to the generators literally") {
    SectionReport rep = verify_section_n2(2);
    CHECK(forget_strands(rep.images[0].second, 4, 2) == Word::parse("s1^-1 r1"));
    CHECK(forget_strands(rep.images[1].second, 4, 2) == Word::parse("s1"));
}

TEST_CASE("section images are homomorphic images of the Dic_16 relations") {
    // the forgotten images satisfy the relations because eval is a homomorphism; check the words themselves
    for (int m = 1; m <= 6; ++m) {
        SectionReport rep = verify_section_n2(m);
        Word a = rep.images[0].second, d = rep.images[1].second;
        int N = 2 + m;
        CHECK(perm_image(power(a, 8), N).is_identity());
        CHECK(perm_image(concat(power(d, 2), invert(power(a, 4))), N).is_identity());
    }
}

TEST_CASE("no section for n = 1") {
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        SectionReport rep = verify_no_section_n1(m);
        CHECK(rep.ok);
        CHECK(rep.checks.size() == 3);
        CHECK(perm_image(full_twist(1 + m), 1 + m).is_identity());
        CHECK_FALSE(rep.oracle_facts.empty());
    }
    CHECK_THROWS_AS(verify_no_section_n1(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_section_n2(0), std::invalid_argument);
}
