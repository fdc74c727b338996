#pragma once

#include <map>
#include <string>
#include <vector>

#include "rp2braid/intlinear.hpp"

namespace rp2braid {

// constant + sum coeff * unknown
struct SymbolicAffine {
    long long constant = 0;
    std::map<std::string, long long> coeff;

    static SymbolicAffine unknown(const std::string& name, long long c = 1);
    static SymbolicAffine number(long long c);

    SymbolicAffine& operator+=(const SymbolicAffine& o);
    SymbolicAffine& operator-=(const SymbolicAffine& o);
    SymbolicAffine operator+(const SymbolicAffine& o) const { return SymbolicAffine(*this) += o; }
    SymbolicAffine operator-(const SymbolicAffine& o) const { return SymbolicAffine(*this) -= o; }
    SymbolicAffine operator-() const;
    SymbolicAffine operator*(long long s) const;
    bool operator==(const SymbolicAffine& o) const;
    bool is_zero() const;
    SymbolicAffine mod2() const;
    long long evaluate(const std::map<std::string, long long>& values) const;
    std::string str() const;
};

// Element of beta_{n,m}/Gamma_2 = Z^n x Z_2 written on beta_1..beta_n, rho, sigma.
// The beta/rho part is only meaningful modulo (1,...,1 | 2).
struct SymbolicKernelVector {
    std::vector<SymbolicAffine> beta;
    SymbolicAffine rho;
    SymbolicAffine sigma;  // kept reduced mod 2

    static SymbolicKernelVector zero(int n);
    SymbolicKernelVector operator+(const SymbolicKernelVector& o) const;
    SymbolicKernelVector operator-() const;
    // coordinates on the quotient basis: beta_s - beta_n (s < n), rho - 2 beta_n
    std::vector<SymbolicAffine> reduced() const;
    bool equivalent(const SymbolicKernelVector& o) const;
    std::string str() const;
};

struct CosetLetter {
    enum Kind { Tau, Q } kind = Tau;
    int index = 1;
    int sign = 1;
    bool operator==(const CosetLetter&) const = default;
    CosetLetter inverse() const { return {kind, index, -sign}; }
    std::string str() const;
};

using CosetWord = std::vector<CosetLetter>;
std::string to_string(const CosetWord& w);

// v' with letter * v = v' * letter
SymbolicKernelVector push_kernel_right(const CosetLetter& letter, const SymbolicKernelVector& v);

// word * kernel
struct CosetElement {
    CosetWord word;
    SymbolicKernelVector kernel;
};
CosetElement coset_mul(const CosetElement& a, const CosetElement& b);

// s_*(tau_i) = tau_i beta_1^{k_{i,1}} ... beta_{n-1}^{k_{i,n-1}} rho^{l_i} sigma^{m_i}, likewise for q_j with bars.
CosetElement section_image(int n, const CosetLetter& letter);
CosetElement section_image(int n, const CosetWord& w);

// A rewriting move from the quotient presentation: from = to * correction.
struct CosetRewrite {
    CosetWord from;
    CosetWord to;
    SymbolicKernelVector correction;
};

struct NormalizedSide {
    CosetWord canonical;
    SymbolicKernelVector kernel;
};
// Applies the move when `side` equals rw.from; passes it through when it already equals rw.to.
NormalizedSide normalize_relation_side(int n, const CosetWord& side, const CosetRewrite& rw);

struct RelationInstance {
    std::string source;   // R1..R6
    std::string indices;  // e.g. "i=2,j=1"
    CosetWord lhs, rhs;
    CosetRewrite rewrite;
};
std::vector<RelationInstance> relation_instances(int n);

struct Equation {
    std::string source;
    std::string indices;
    std::string coordinate;  // beta_s, rho or sigma
    SymbolicAffine lhs, rhs;
    bool mod2 = false;
};

struct ConstraintSystem {
    int n = 0;
    std::vector<std::string> unknowns;   // integer unknowns, "m" included
    std::vector<std::string> parity;     // sigma exponents m_i, mbar_j
    std::vector<Equation> equations;     // nontrivial only
    IntMatrix integer_rows;              // lhs - rhs over `unknowns`
    std::vector<std::vector<int>> parity_rows;
    IntMatrix solution_basis;            // rows span the integer solutions
};
ConstraintSystem derive_constraints(int n);

// Does every integer (resp. parity) solution satisfy expr = 0?
bool implied(const ConstraintSystem& sys, const SymbolicAffine& expr);
bool implied_mod2(const ConstraintSystem& sys, const SymbolicAffine& expr);

struct Congruence {
    long long modulus = 0;  // 0 means only m = 0
    std::vector<long long> residues;
    bool contains(long long m) const;
    std::string str() const;
};

Congruence solve_for_m(const ConstraintSystem& sys);
Congruence solve_for_m(int n);
Congruence torsion_residues(int n);
Congruence combine(const Congruence& a, const Congruence& b);
Congruence combined_congruence(int n);

// Named consequences checked against the solution lattice.
struct DerivedIdentity {
    std::string label;
    SymbolicAffine expr;  // claim: expr = 0
    bool mod2 = false;
    bool holds = false;
};
std::vector<DerivedIdentity> derived_identities(const ConstraintSystem& sys);

struct KnownSectionCheck {
    long long m = 0;
    std::string family;
    bool allowed = false;
};
std::vector<KnownSectionCheck> check_known_sections(int n);

}  // namespace rp2braid
