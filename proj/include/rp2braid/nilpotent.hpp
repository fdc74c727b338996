#pragma once

#include <vector>

#include "rp2braid/intlinear.hpp"
#include "rp2braid/presentation.hpp"

namespace rp2braid {

// Element of the free class-2 nilpotent group on k generators, written
// prod_{i<j} [g_i,g_j]^{c_ij} * g_1^{e_1} ... g_k^{e_k}, with [x,y] = x y x^-1 y^-1.
struct Class2Element {
    std::vector<Int> e;
    std::vector<Int> c;  // pairs (i,j), i<j, lexicographic

    static Class2Element identity(std::size_t k);
    std::size_t rank() const { return e.size(); }
    bool operator==(const Class2Element& o) const { return e == o.e && c == o.c; }
};

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t k);  // 0-based, i < j

Class2Element operator*(const Class2Element& x, const Class2Element& y);
Class2Element inverse(const Class2Element& x);
Class2Element power(const Class2Element& x, const Int& n);

// Q(a) = sum_{i<j} a_i a_j E_ij
std::vector<Int> quadratic_part(const std::vector<Int>& a);
// a ^ b in commutator coordinates: (a_i b_j - a_j b_i)_{i<j}
std::vector<Int> wedge(const std::vector<Int>& a, const std::vector<Int>& b);

Class2Element collect(const Word& w, const std::vector<Generator>& ordering);

struct Gamma2Result {
    AbelianStructure quotient;
    IntMatrix lattice_hnf;  // basis of (H cap Gamma_2) in commutator coordinates
    bool equal() const { return quotient.trivial(); }
};

// Gamma_2(G)/Gamma_3(G) for G = <gens | relators>.
Gamma2Result gamma2_mod_gamma3(const Presentation& P);

struct Gamma2Check {
    bool equal;
    Gamma2Result result;
};
Gamma2Check check_gamma2_equals_gamma3(const Presentation& P);

}  // namespace rp2braid
