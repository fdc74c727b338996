#include "rp2braid/nilpotent.hpp"

#include <map>
#include <stdexcept>

namespace rp2braid {

Class2Element Class2Element::identity(std::size_t k) {
    return {std::vector<Int>(k), std::vector<Int>(k * (k - (k ? 1 : 0)) / 2)};
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t k) {
    // rows 0..i-1 contribute (k-1) + ... + (k-i) pairs
    return i * k - i * (i + 1) / 2 + (j - i - 1);
}

// (a,c)(b,d) = (a+b, c+d - sum_{i<j} a_j b_i E_ij): moving g_j^{a_j} past g_i^{b_i}
Class2Element operator*(const Class2Element& x, const Class2Element& y) {
    const std::size_t k = x.rank();
    if (y.rank() != k) throw std::invalid_argument("rank mismatch");
    Class2Element z = x;
    for (std::size_t t = 0; t < z.c.size(); ++t) z.c[t] += y.c[t];
    for (std::size_t i = 0; i < k; ++i) {
        if (y.e[i] == 0) continue;
        for (std::size_t j = i + 1; j < k; ++j)
            if (x.e[j] != 0) z.c[pair_index(i, j, k)] -= x.e[j] * y.e[i];
    }
    for (std::size_t i = 0; i < k; ++i) z.e[i] += y.e[i];
    return z;
}

std::vector<Int> quadratic_part(const std::vector<Int>& a) {
    const std::size_t k = a.size();
    std::vector<Int> q(k * (k - (k ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) q[pair_index(i, j, k)] = a[i] * a[j];
    return q;
}

std::vector<Int> wedge(const std::vector<Int>& a, const std::vector<Int>& b) {
    const std::size_t k = a.size();
    std::vector<Int> w(k * (k - (k ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) w[pair_index(i, j, k)] = a[i] * b[j] - a[j] * b[i];
    return w;
}

Class2Element inverse(const Class2Element& x) {
    Class2Element z = x;
    auto q = quadratic_part(x.e);
    for (std::size_t t = 0; t < z.c.size(); ++t) z.c[t] = -x.c[t] - q[t];
    for (auto& v : z.e) v = -v;
    return z;
}

// (a,kappa)^n = (n a, n kappa - C(n,2) Q(a)) for n >= 0
Class2Element power(const Class2Element& x, const Int& n) {
    if (n < 0) return power(inverse(x), -n);
    Class2Element z = x;
    Int half = n * (n - 1) / 2;
    auto q = quadratic_part(x.e);
    for (std::size_t t = 0; t < z.c.size(); ++t) z.c[t] = n * x.c[t] - half * q[t];
    for (auto& v : z.e) v *= n;
    return z;
}

Class2Element collect(const Word& w, const std::vector<Generator>& ordering) {
    std::map<Generator, std::size_t> pos;
    for (std::size_t t = 0; t < ordering.size(); ++t) pos.emplace(ordering[t], t);
    const std::size_t k = ordering.size();
    Class2Element x = Class2Element::identity(k);
    for (const auto& l : w.letters()) {
        auto it = pos.find(l.gen);
        if (it == pos.end()) throw std::invalid_argument("generator " + to_string(l.gen) + " not in ordering");
        const std::size_t i = it->second;
        const Int e = static_cast<long>(l.exp);
        for (std::size_t j = i + 1; j < k; ++j)
            if (x.e[j] != 0) x.c[pair_index(i, j, k)] -= x.e[j] * e;
        x.e[i] += e;
    }
    return x;
}

Gamma2Result gamma2_mod_gamma3(const Presentation& P) {
    const std::size_t k = P.generators.size();
    const std::size_t pairs = k * (k - (k ? 1 : 0)) / 2;
    std::vector<Class2Element> rel;
    rel.reserve(P.relators.size());
    for (const auto& r : P.relators) rel.push_back(collect(free_reduce(r), P.generators));

    std::vector<std::vector<Int>> rows;
    // conjugates of relators: [g_j, r] contributes eps(r) ^ e_j
    for (const auto& x : rel)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Int> ej(k);
            ej[j] = 1;
            auto w = wedge(x.e, ej);
            bool nz = false;
            for (const auto& v : w) nz = nz || v != 0;
            if (nz) rows.push_back(std::move(w));
        }
    // products of relator powers with vanishing abelianization
    IntMatrix A(rel.size(), k);
    for (std::size_t u = 0; u < rel.size(); ++u)
        for (std::size_t j = 0; j < k; ++j) A(u, j) = rel[u].e[j];
    IntMatrix K = left_kernel(A);
    for (std::size_t b = 0; b < K.rows(); ++b) {
        Class2Element h = Class2Element::identity(k);
        for (std::size_t u = 0; u < rel.size(); ++u)
            if (K(b, u) != 0) h = h * power(rel[u], K(b, u));
        rows.push_back(h.c);
    }
    Gamma2Result out;
    out.lattice_hnf = hermite_normal_form(IntMatrix::from_int_rows(rows, pairs));
    out.quotient = cokernel_structure(out.lattice_hnf);
    return out;
}

Gamma2Check check_gamma2_equals_gamma3(const Presentation& P) {
    auto r = gamma2_mod_gamma3(P);
    return {r.equal(), std::move(r)};
}

}  // namespace rp2braid
