#include "rp2braid/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rp2braid {

// ---- SymbolicAffine

SymbolicAffine SymbolicAffine::unknown(const std::string& name, long long c) {
    SymbolicAffine a;
    if (c != 0) a.coeff[name] = c;
    return a;
}

SymbolicAffine SymbolicAffine::number(long long c) {
    SymbolicAffine a;
    a.constant = c;
    return a;
}

SymbolicAffine& SymbolicAffine::operator+=(const SymbolicAffine& o) {
    constant += o.constant;
    for (const auto& [k, v] : o.coeff) {
        long long& slot = coeff[k];
        slot += v;
        if (slot == 0) coeff.erase(k);
    }
    return *this;
}

SymbolicAffine& SymbolicAffine::operator-=(const SymbolicAffine& o) { return *this += -o; }

SymbolicAffine SymbolicAffine::operator-() const { return *this * -1; }

SymbolicAffine SymbolicAffine::operator*(long long s) const {
    SymbolicAffine r;
    if (s == 0) return r;
    r.constant = constant * s;
    for (const auto& [k, v] : coeff) r.coeff[k] = v * s;
    return r;
}

bool SymbolicAffine::operator==(const SymbolicAffine& o) const { return (*this - o).is_zero(); }

bool SymbolicAffine::is_zero() const { return constant == 0 && coeff.empty(); }

SymbolicAffine SymbolicAffine::mod2() const {
    SymbolicAffine r;
    r.constant = ((constant % 2) + 2) % 2;
    for (const auto& [k, v] : coeff)
        if (v % 2 != 0) r.coeff[k] = 1;
    return r;
}

long long SymbolicAffine::evaluate(const std::map<std::string, long long>& values) const {
    long long s = constant;
    for (const auto& [k, v] : coeff) {
        auto it = values.find(k);
        if (it == values.end()) throw std::invalid_argument("no value for unknown " + k);
        s += v * it->second;
    }
    return s;
}

std::string SymbolicAffine::str() const {
    std::string s;
    for (const auto& [k, v] : coeff) {
        long long a = v < 0 ? -v : v;
        if (s.empty())
            s += v < 0 ? "-" : "";
        else
            s += v < 0 ? " - " : " + ";
        if (a != 1) s += std::to_string(a) + "*";
        s += k;
    }
    if (constant != 0 || s.empty()) {
        if (s.empty())
            s = std::to_string(constant);
        else
            s += (constant < 0 ? " - " : " + ") + std::to_string(constant < 0 ? -constant : constant);
    }
    return s;
}

// ---- SymbolicKernelVector

SymbolicKernelVector SymbolicKernelVector::zero(int n) {
    SymbolicKernelVector v;
    v.beta.resize(n);
    return v;
}

SymbolicKernelVector SymbolicKernelVector::operator+(const SymbolicKernelVector& o) const {
    if (beta.size() != o.beta.size()) throw std::invalid_argument("kernel vectors of different rank");
    SymbolicKernelVector r = *this;
    for (std::size_t s = 0; s < beta.size(); ++s) r.beta[s] += o.beta[s];
    r.rho += o.rho;
    r.sigma = (r.sigma + o.sigma).mod2();
    return r;
}

SymbolicKernelVector SymbolicKernelVector::operator-() const {
    SymbolicKernelVector r = *this;
    for (auto& b : r.beta) b = -b;
    r.rho = -r.rho;
    r.sigma = r.sigma.mod2();  // -x = x in Z_2
    return r;
}

std::vector<SymbolicAffine> SymbolicKernelVector::reduced() const {
    const std::size_t n = beta.size();
    std::vector<SymbolicAffine> out;
    for (std::size_t s = 0; s + 1 < n; ++s) out.push_back(beta[s] - beta[n - 1]);
    out.push_back(rho - beta[n - 1] * 2);
    return out;
}

bool SymbolicKernelVector::equivalent(const SymbolicKernelVector& o) const {
    return reduced() == o.reduced() && sigma.mod2() == o.sigma.mod2();
}

std::string SymbolicKernelVector::str() const {
    std::string s;
    auto part = [&](const std::string& g, const SymbolicAffine& e) {
        if (e.is_zero()) return;
        if (!s.empty()) s += " ";
        s += g + "^(" + e.str() + ")";
    };
    for (std::size_t k = 0; k < beta.size(); ++k) part("beta_" + std::to_string(k + 1), beta[k]);
    part("rho", rho);
    part("sigma", sigma);
    return s.empty() ? "1" : s;
}

// ---- coset letters

std::string CosetLetter::str() const {
    std::string s = (kind == Tau ? "tau_" : "q_") + std::to_string(index);
    return sign < 0 ? s + "^-1" : s;
}

std::string to_string(const CosetWord& w) {
    std::string s;
    for (const auto& l : w) s += (s.empty() ? "" : " ") + l.str();
    return s.empty() ? "1" : s;
}

SymbolicKernelVector push_kernel_right(const CosetLetter& letter, const SymbolicKernelVector& v) {
    const int n = static_cast<int>(v.beta.size());
    SymbolicKernelVector r = v;
    // both actions are involutions, so the sign of the letter does not matter
    if (letter.kind == CosetLetter::Tau) {
        if (letter.index < 1 || letter.index >= n) throw std::invalid_argument("tau index out of range");
        std::swap(r.beta[letter.index - 1], r.beta[letter.index]);
    } else {
        if (letter.index < 1 || letter.index > n) throw std::invalid_argument("q index out of range");
        SymbolicAffine& b = r.beta[letter.index - 1];
        b = -b + v.rho;
    }
    return r;
}

CosetElement coset_mul(const CosetElement& a, const CosetElement& b) {
    CosetElement r;
    r.word = a.word;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    SymbolicKernelVector v = a.kernel;
    for (const auto& l : b.word) v = push_kernel_right(l.inverse(), v);
    r.kernel = v + b.kernel;
    return r;
}

namespace {

std::string idx(int a) { return std::to_string(a); }
std::string idx(int a, int b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

SymbolicAffine K(int i, int s) { return SymbolicAffine::unknown("k_" + idx(i, s)); }
SymbolicAffine L(int i) { return SymbolicAffine::unknown("l_" + idx(i)); }
SymbolicAffine Kb(int j, int s) { return SymbolicAffine::unknown("kbar_" + idx(j, s)); }
SymbolicAffine Lb(int j) { return SymbolicAffine::unknown("lbar_" + idx(j)); }
SymbolicAffine Mu(int i) { return SymbolicAffine::unknown("m_" + idx(i)); }
SymbolicAffine Mub(int j) { return SymbolicAffine::unknown("mbar_" + idx(j)); }
const SymbolicAffine Mpar = SymbolicAffine::unknown("m");

CosetLetter tau(int i, int s = 1) { return {CosetLetter::Tau, i, s}; }
CosetLetter qq(int j, int s = 1) { return {CosetLetter::Q, j, s}; }

void require_n(int n) {
    if (n < 3) throw std::invalid_argument("splitting constraints need n >= 3");
}

}  // namespace

CosetElement section_image(int n, const CosetLetter& letter) {
    SymbolicKernelVector u = SymbolicKernelVector::zero(n);
    const int a = letter.index;
    if (letter.kind == CosetLetter::Tau) {
        if (a < 1 || a >= n) throw std::invalid_argument("tau index out of range");
        for (int s = 1; s < n; ++s) u.beta[s - 1] = K(a, s);
        u.rho = L(a);
        u.sigma = Mu(a);
    } else {
        if (a < 1 || a > n) throw std::invalid_argument("q index out of range");
        for (int s = 1; s < n; ++s) u.beta[s - 1] = Kb(a, s);
        u.rho = Lb(a);
        u.sigma = Mub(a);
    }
    CosetLetter pos{letter.kind, a, 1};
    if (letter.sign > 0) return {{pos}, u};
    // (l u)^-1 = l^-1 (l u^-1 l^-1)
    return {{pos.inverse()}, push_kernel_right(pos, -u)};
}

CosetElement section_image(int n, const CosetWord& w) {
    CosetElement acc{{}, SymbolicKernelVector::zero(n)};
    for (const auto& l : w) acc = coset_mul(acc, section_image(n, l));
    return acc;
}

NormalizedSide normalize_relation_side(int n, const CosetWord& side, const CosetRewrite& rw) {
    CosetElement img = section_image(n, side);
    if (side == rw.to) return {side, img.kernel};
    if (side == rw.from) return {rw.to, rw.correction + img.kernel};
    throw std::invalid_argument("coset word " + to_string(side) + " is not reducible to " + to_string(rw.to));
}

std::vector<RelationInstance> relation_instances(int n) {
    require_n(n);
    std::vector<RelationInstance> out;
    const auto none = SymbolicKernelVector::zero(n);
    auto plain = [&](std::string src, std::string ind, CosetWord lhs, CosetWord rhs) {
        out.push_back({std::move(src), std::move(ind), lhs, rhs, {lhs, rhs, none}});
    };
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1) plain("R1", "i=" + idx(i) + ",j=" + idx(j), {tau(i), qq(j)}, {qq(j), tau(i)});
    for (int i = 1; i <= n - 1; ++i) {
        CosetWord lhs{qq(i)}, rhs{tau(i), qq(i + 1), tau(i)};
        out.push_back({"R2", "i=" + idx(i), lhs, rhs, {rhs, lhs, none}});
    }
    for (int i = 1; i < n - 1; ++i)
        plain("R3", "i=" + idx(i), {tau(i), tau(i + 1), tau(i)}, {tau(i + 1), tau(i), tau(i + 1)});
    for (int i = 1; i <= n - 1; ++i)
        plain("R4", "i=" + idx(i), {tau(i), tau(i)}, {qq(i + 1, -1), qq(i, -1), qq(i + 1), qq(i)});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) plain("R5", "i=" + idx(i) + ",j=" + idx(j), {tau(i), tau(j)}, {tau(j), tau(i)});

    // q_1^2 = (tau_1 ... tau_{n-1}) beta_n^m (tau_{n-1} ... tau_1)
    CosetWord up, down;
    for (int i = 1; i <= n - 1; ++i) up.push_back(tau(i));
    for (int i = n - 1; i >= 1; --i) down.push_back(tau(i));
    SymbolicKernelVector bn = none;
    bn.beta[n - 1] = Mpar;
    CosetElement c = coset_mul(coset_mul({up, none}, {{}, bn}), {down, none});
    CosetWord rhs = up;
    rhs.insert(rhs.end(), down.begin(), down.end());
    out.push_back({"R6", "", {qq(1), qq(1)}, rhs, {{qq(1), qq(1)}, c.word, c.kernel}});
    return out;
}

ConstraintSystem derive_constraints(int n) {
    require_n(n);
    ConstraintSystem sys;
    sys.n = n;
    for (int i = 1; i <= n - 1; ++i) {
        for (int s = 1; s < n; ++s) sys.unknowns.push_back("k_" + idx(i, s));
        sys.unknowns.push_back("l_" + idx(i));
    }
    for (int j = 1; j <= n; ++j) {
        for (int s = 1; s < n; ++s) sys.unknowns.push_back("kbar_" + idx(j, s));
        sys.unknowns.push_back("lbar_" + idx(j));
    }
    sys.unknowns.push_back("m");
    for (int i = 1; i <= n - 1; ++i) sys.parity.push_back("m_" + idx(i));
    for (int j = 1; j <= n; ++j) sys.parity.push_back("mbar_" + idx(j));

    std::map<std::string, std::size_t> col, pcol;
    for (std::size_t c = 0; c < sys.unknowns.size(); ++c) col[sys.unknowns[c]] = c;
    for (std::size_t c = 0; c < sys.parity.size(); ++c) pcol[sys.parity[c]] = c;

    std::vector<std::vector<Int>> rows;
    for (const auto& inst : relation_instances(n)) {
        NormalizedSide a = normalize_relation_side(n, inst.lhs, inst.rewrite);
        NormalizedSide b = normalize_relation_side(n, inst.rhs, inst.rewrite);
        if (!(a.canonical == b.canonical)) throw std::logic_error("sides of " + inst.source + " normalize differently");
        auto ra = a.kernel.reduced(), rb = b.kernel.reduced();
        for (std::size_t t = 0; t < ra.size(); ++t) {
            SymbolicAffine d = ra[t] - rb[t];
            if (d.is_zero()) continue;
            if (d.constant != 0) throw std::logic_error("inhomogeneous equation from " + inst.source);
            std::string coord = t + 1 < ra.size() ? "beta_" + idx(static_cast<int>(t) + 1) : "rho";
            sys.equations.push_back({inst.source, inst.indices, coord, ra[t], rb[t], false});
            std::vector<Int> row(sys.unknowns.size(), 0);
            for (const auto& [k, v] : d.coeff) row[col.at(k)] = static_cast<long>(v);
            rows.push_back(std::move(row));
        }
        SymbolicAffine ds = (a.kernel.sigma - b.kernel.sigma).mod2();
        if (!ds.is_zero()) {
            sys.equations.push_back({inst.source, inst.indices, "sigma", a.kernel.sigma, b.kernel.sigma, true});
            std::vector<int> row(sys.parity.size(), 0);
            for (const auto& [k, v] : ds.coeff) row[pcol.at(k)] = 1;
            sys.parity_rows.push_back(std::move(row));
        }
    }
    sys.integer_rows = IntMatrix::from_int_rows(rows, sys.unknowns.size());
    sys.solution_basis = right_kernel(sys.integer_rows);
    return sys;
}

bool implied(const ConstraintSystem& sys, const SymbolicAffine& expr) {
    if (expr.constant != 0) return false;
    std::vector<long long> t(sys.unknowns.size(), 0);
    for (const auto& [k, v] : expr.coeff) {
        auto it = std::find(sys.unknowns.begin(), sys.unknowns.end(), k);
        if (it == sys.unknowns.end()) throw std::invalid_argument("unknown symbol " + k);
        t[it - sys.unknowns.begin()] = v;
    }
    for (std::size_t r = 0; r < sys.solution_basis.rows(); ++r) {
        Int dot = 0;
        for (std::size_t c = 0; c < t.size(); ++c) dot += sys.solution_basis(r, c) * static_cast<long>(t[c]);
        if (dot != 0) return false;
    }
    return true;
}

namespace {

int rank_gf2(std::vector<std::vector<int>> rows) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && rows[r][c])
                for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

}  // namespace

bool implied_mod2(const ConstraintSystem& sys, const SymbolicAffine& expr) {
    SymbolicAffine e = expr.mod2();
    if (e.constant != 0) return false;
    std::vector<int> t(sys.parity.size(), 0);
    for (const auto& [k, v] : e.coeff) {
        auto it = std::find(sys.parity.begin(), sys.parity.end(), k);
        if (it == sys.parity.end()) throw std::invalid_argument("unknown parity symbol " + k);
        t[it - sys.parity.begin()] = 1;
    }
    auto rows = sys.parity_rows;
    int before = rank_gf2(rows);
    rows.push_back(t);
    return rank_gf2(rows) == before;
}

// ---- congruences

bool Congruence::contains(long long m) const {
    if (modulus == 0) return m == 0;
    long long r = ((m % modulus) + modulus) % modulus;
    return std::find(residues.begin(), residues.end(), r) != residues.end();
}

std::string Congruence::str() const {
    if (modulus == 0) return "m = 0";
    std::string s = "m in {";
    for (std::size_t k = 0; k < residues.size(); ++k) s += (k ? ", " : "") + std::to_string(residues[k]);
    return s + "} mod " + std::to_string(modulus);
}

Congruence solve_for_m(const ConstraintSystem& sys) {
    auto it = std::find(sys.unknowns.begin(), sys.unknowns.end(), "m");
    const std::size_t mc = it - sys.unknowns.begin();
    Int g = 0;
    for (std::size_t r = 0; r < sys.solution_basis.rows(); ++r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), sys.solution_basis(r, mc).get_mpz_t());
    Congruence c;
    c.modulus = g.get_si();
    c.residues = {0};
    return c;
}

Congruence solve_for_m(int n) { return solve_for_m(derive_constraints(n)); }

Congruence torsion_residues(int n) {
    require_n(n);
    Congruence c;
    c.modulus = n;
    // an element of order 4n must survive: 4n | 4(n+m) or 4n | 4(n-1+m)
    for (long long r = 0; r < n; ++r)
        if ((4 * (n + r)) % (4 * n) == 0 || (4 * (n - 1 + r)) % (4 * n) == 0) c.residues.push_back(r);
    return c;
}

Congruence combine(const Congruence& a, const Congruence& b) {
    if (a.modulus == 0 || b.modulus == 0) {
        const Congruence& z = a.modulus == 0 ? a : b;
        const Congruence& o = a.modulus == 0 ? b : a;
        Congruence r;
        if (z.contains(0) && o.contains(0)) r.residues = {0};
        return r;
    }
    Congruence r;
    r.modulus = std::lcm(a.modulus, b.modulus);
    for (long long x = 0; x < r.modulus; ++x)
        if (a.contains(x) && b.contains(x)) r.residues.push_back(x);
    return r;
}

Congruence combined_congruence(int n) { return combine(solve_for_m(n), torsion_residues(n)); }

std::vector<DerivedIdentity> derived_identities(const ConstraintSystem& sys) {
    const int n = sys.n;
    std::vector<DerivedIdentity> out;
    auto add = [&](std::string label, SymbolicAffine e, bool mod2 = false) {
        bool h = mod2 ? implied_mod2(sys, e) : implied(sys, e);
        out.push_back({std::move(label), std::move(e), mod2, h});
    };
    for (int j = 1; j <= n - 2; ++j) add("kbar_{" + idx(j) + "," + idx(n - 1) + "} = 0", Kb(j, n - 1));
    for (int j = 1; j <= n - 2; ++j)
        add("l_{" + idx(n - 1) + "} = 2 k_{" + idx(n - 1) + "," + idx(j) + "}", L(n - 1) - K(n - 1, j) * 2);
    for (int i = 1; i <= n - 2; ++i) add("l_{" + idx(i) + "} = 0", L(i));
    for (int i = 1; i <= n - 2; ++i) add("lbar_{" + idx(i) + "} = lbar_{" + idx(i + 1) + "}", Lb(i) - Lb(i + 1));
    for (int i = 1; i <= n - 2; ++i)
        for (int s = 1; s <= n - 1; ++s)
            if (s != i && s != i + 1) add("k_" + idx(i, s) + " = 0", K(i, s));
    for (int j = 1; j <= n - 3; ++j)
        add("k_" + idx(n - 1, j) + " = k_" + idx(n - 1, j + 1), K(n - 1, j) - K(n - 1, j + 1));
    for (int i = 1; i < n - 2; ++i)
        add("k_" + idx(i, i) + " + k_" + idx(i, i + 1) + " = k_" + idx(i + 1, i + 1) + " + k_" + idx(i + 1, i + 2),
            K(i, i) + K(i, i + 1) - K(i + 1, i + 1) - K(i + 1, i + 2));
    for (int i = 1; i <= n - 2; ++i)
        add("k_" + idx(i, i) + " + k_" + idx(i, i + 1) + " = -lbar_" + idx(i) + " + 2 kbar_" + idx(i, i + 1),
            K(i, i) + K(i, i + 1) + Lb(i) - Kb(i, i + 1) * 2);

    SymbolicAffine lambda, omega;
    for (int i = 1; i <= n - 2; ++i) lambda += K(i, i + 1);
    for (int i = 1; i <= n - 1; ++i) omega += K(i, i);
    const SymbolicAffine lbar = Lb(1), k11k12 = K(1, 1) + K(1, 2);
    add("m + lbar = omega + lambda - k_" + idx(n - 1, n - 1) + "  [omega = " + omega.str() + ", lambda = " + lambda.str() + "]",
        Mpar + lbar - omega - lambda + K(n - 1, n - 1));
    add("m + lbar = (n-2)(k_{1,1} + k_{1,2})", Mpar + lbar - k11k12 * (n - 2));
    add("k_" + idx(n - 2, n - 2) + " + k_" + idx(n - 2, n - 1) + " = -lbar", K(n - 2, n - 2) + K(n - 2, n - 1) + lbar);
    add("m = (n-1)(k_{1,1} + k_{1,2})", Mpar - k11k12 * (n - 1));

    for (int i = 1; i < n - 1; ++i) add("m_" + idx(i) + " = m_" + idx(i + 1), Mu(i) - Mu(i + 1), true);
    for (int j = 1; j < n; ++j) add("mbar_" + idx(j) + " = mbar_" + idx(j + 1), Mub(j) - Mub(j + 1), true);
    return out;
}

std::vector<KnownSectionCheck> check_known_sections(int n) {
    require_n(n);
    Congruence c = combined_congruence(n);
    std::vector<KnownSectionCheck> out;
    long long a = 2LL * n * (n - 1);
    out.push_back({a, "2n(n-1)", c.contains(a)});
    for (long long k = 1; k <= 5; ++k) {
        long long v = k * n * (2LL * n - 1) * (2LL * n - 2);
        out.push_back({v, "k n(2n-1)(2n-2), k=" + std::to_string(k), c.contains(v)});
    }
    return out;
}

}  // namespace rp2braid
