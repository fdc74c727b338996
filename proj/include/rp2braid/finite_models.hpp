#pragma once

#include <string>
#include <vector>

#include "rp2braid/word.hpp"

namespace rp2braid {

// x^i y^eps in Dic_{4N} = <x, y | x^{2N}, y^2 = x^N, y x y^-1 = x^-1>.
struct DicElement {
    int N = 1;
    int i = 0;
    int eps = 0;

    bool operator==(const DicElement&) const = default;
    static DicElement x(int N, int power = 1);
    static DicElement y(int N);
    static DicElement one(int N) { return {N, 0, 0}; }
    std::string str() const;
};

DicElement dic_mul(const DicElement& a, const DicElement& b);
DicElement dic_inv(const DicElement& a);
DicElement dic_pow(const DicElement& a, long long k);

struct DicSubgroup {
    int order = 0;
    bool dic16_relations = false;  // checked on gens[0], gens[1]
};
DicSubgroup dic_subgroup(int N, const std::vector<DicElement>& gens);

// img[p-1] = strand sitting at position p after the braid, strands start at their own position.
struct Permutation {
    std::vector<int> img;
    bool operator==(const Permutation&) const = default;
    bool is_identity() const;
    // true when positions 1..n hold strands 1..n in some order
    bool preserves_block(int n) const;
    std::string str() const;
};

Permutation perm_image(const Word& w, int strands);

// Deletes strands n+1..N. Throws std::invalid_argument when w does not lie in B_{n,N-n}.
Word forget_strands(const Word& w, int total, int keep);

// B_2(RP^2) -> Dic_16, sigma_1 -> y, rho_1 -> y x.
DicElement eval_B2RP2(const Word& w);

struct ModelCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SectionReport {
    int n = 0;
    int m = 0;
    bool ok = false;
    std::vector<ModelCheck> checks;
    // image words of the two generators (n = 2) or of rho_1 (n = 1)
    std::vector<std::pair<std::string, Word>> images;
    std::vector<std::string> oracle_facts;
};

// Braid words used by the n = 2 section; N strands in B_N(RP^2).
Word full_twist(int strands);                    // Delta^2 = (s1 ... s_{N-1})^N
Word half_twist(int strands);                    // Delta
Word dic_generator_a(int last_sigma);            // s_{last}^-1 ... s1^-1 r1

SectionReport verify_section_n2(int m);
SectionReport verify_no_section_n1(int m);

}  // namespace rp2braid
