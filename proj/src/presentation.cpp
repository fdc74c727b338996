#include "rp2braid/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rp2braid {

std::string to_string(PresentationFamily f) {
    switch (f) {
    case PresentationFamily::VanBuskirk_Bn: return "VanBuskirk_Bn";
    case PresentationFamily::Pure_Pn: return "Pure_Pn";
    case PresentationFamily::PuncturedPure_Pi: return "PuncturedPure_Pi";
    case PresentationFamily::PuncturedFull_beta: return "PuncturedFull_beta";
    case PresentationFamily::Mixed_Bnm: return "Mixed_Bnm";
    case PresentationFamily::QuotientGamma2: return "QuotientGamma2";
    case PresentationFamily::KernelFree: return "KernelFree";
    }
    return "?";
}

PresentationFamily parse_family(const std::string& tag) {
    for (auto f : {PresentationFamily::VanBuskirk_Bn, PresentationFamily::Pure_Pn,
                   PresentationFamily::PuncturedPure_Pi, PresentationFamily::PuncturedFull_beta,
                   PresentationFamily::Mixed_Bnm, PresentationFamily::QuotientGamma2,
                   PresentationFamily::KernelFree})
        if (to_string(f) == tag) return f;
    throw std::invalid_argument("unknown family '" + tag + "'");
}

bool family_uses_m(PresentationFamily f) {
    return f == PresentationFamily::PuncturedPure_Pi || f == PresentationFamily::PuncturedFull_beta ||
           f == PresentationFamily::Mixed_Bnm || f == PresentationFamily::QuotientGamma2;
}

namespace {

Word S(int r, std::int64_t e = 1) { return Word(Generator::sigma(r), e); }
Word R(int k, std::int64_t e = 1) { return Word(Generator::rho(k), e); }
Word T(int s, std::int64_t e = 1) { return Word(Generator::tau(s), e); }
Word Q(int t, std::int64_t e = 1) { return Word(Generator::q(t), e); }
Word Bg(int i, int j, std::int64_t e = 1) { return Word(Generator::B(i, j), e); }

// sigma_hi ... sigma_lo, each to power e; empty if hi < lo
Word sig_down(int hi, int lo, std::int64_t e = 1) {
    Word w;
    for (int r = hi; r >= lo; --r) w.push(Generator::sigma(r), e);
    return w;
}
Word sig_up(int lo, int hi, std::int64_t e = 1) {
    Word w;
    for (int r = lo; r <= hi; ++r) w.push(Generator::sigma(r), e);
    return w;
}

Word tau_up(int lo, int hi) {
    Word w;
    for (int s = lo; s <= hi; ++s) w.push(Generator::tau(s));
    return w;
}
Word tau_down(int hi, int lo) {
    Word w;
    for (int s = hi; s >= lo; --s) w.push(Generator::tau(s));
    return w;
}

Word cat(std::initializer_list<Word> ws) { return product(std::vector<Word>(ws)); }
Word inv(const Word& w) { return invert(w); }

// lhs = rhs stored as lhs rhs^-1
Word rel(const Word& lhs, const Word& rhs) { return concat(lhs, invert(rhs)); }
Word conj(const Word& g, const Word& x) { return cat({g, x, inv(g)}); }

class Builder {
public:
    std::vector<Generator> gens;
    std::vector<Word> rels;
    void gen(Generator g) { gens.push_back(g); }
    void add(const Word& lhs, const Word& rhs) { rels.push_back(rel(lhs, rhs)); }
    void commute(const Word& a, const Word& b) { add(cat({a, b}), cat({b, a})); }
};

void require(bool ok, const std::string& why) {
    if (!ok) throw std::invalid_argument(why);
}

// prod_{l=a}^{b} B_{l,j}, in order
Word B_column(int a, int b, int j) {
    Word w;
    for (int l = a; l <= b; ++l) w.push(Generator::B(l, j));
    return w;
}

Presentation van_buskirk(int n) {
    Builder b;
    for (int i = 1; i <= n - 1; ++i) b.gen(Generator::sigma(i));
    for (int i = 1; i <= n; ++i) b.gen(Generator::rho(i));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) b.commute(S(i), S(j));
    for (int i = 1; i <= n - 2; ++i) b.add(cat({S(i), S(i + 1), S(i)}), cat({S(i + 1), S(i), S(i + 1)}));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1) b.commute(S(i), R(j));
    for (int i = 1; i <= n - 1; ++i) b.add(R(i), cat({S(i), R(i + 1), S(i)}));
    for (int i = 1; i <= n - 1; ++i) b.add(S(i, 2), cat({R(i + 1, -1), R(i, -1), R(i + 1), R(i)}));
    b.add(R(1, 2), cat({sig_up(1, n - 1), sig_down(n - 1, 1)}));
    return {PresentationFamily::VanBuskirk_Bn, n, std::nullopt, b.gens, b.rels};
}

// Artin-type conjugation B_{r,s} B_{i,j} B_{r,s}^-1 shared by the pure presentations.
// `Bw` maps an index pair to its word (atomic or expanded).
template <class BW>
Word artin_rhs(int r, int s, int i, int j, BW Bw) {
    if ((i < r && s < j) || s < i) return Bw(i, j);
    if (r < i && i == s) return cat({inv(Bw(i, j)), inv(Bw(r, j)), Bw(i, j), Bw(r, j), Bw(i, j)});
    if (i == r) return cat({inv(Bw(s, j)), Bw(i, j), Bw(s, j)});
    // r < i < s < j
    return cat({inv(Bw(s, j)), inv(Bw(r, j)), Bw(s, j), Bw(r, j), Bw(i, j), inv(Bw(r, j)), inv(Bw(s, j)),
                Bw(r, j), Bw(s, j)});
}

Presentation pure(int n) {
    Builder b;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.gen(Generator::B(i, j));
    for (int k = 1; k <= n; ++k) b.gen(Generator::rho(k));
    auto Bw = [](int i, int j) { return Bg(i, j); };
    // (i): r<s, i<j with s<j (the cases listed all have s < j or s < i)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int r = 1; r <= n; ++r)
                for (int s = r + 1; s <= n; ++s) {
                    bool listed = (i < r && s < j) || (s < i) || (r < i && i == s && s < j) ||
                                  (i == r && s < j) || (r < i && i < s && s < j);
                    if (!listed) continue;
                    b.add(conj(Bg(r, s), Bg(i, j)), artin_rhs(r, s, i, j, Bw));
                }
    // (ii) surface relations
    for (int i = 1; i <= n; ++i)
    {
        Word right;
        for (int l = i + 1; l <= n; ++l) right.push(Generator::B(i, l));
        b.add(cat({R(i), B_column(1, i - 1, i)}), cat({right, R(i, -1)}));
    }
    // (iii)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Word P = B_column(i + 1, j - 1, j);
            b.add(conj(R(i), R(j)), cat({inv(P), Bg(i, j), P, R(j)}));
        }
    // (iv)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (k == j) continue;
                Word rhs;
                if (j < k || k < i) {
                    rhs = Bg(i, j);
                } else if (k == i) {
                    Word P = B_column(k + 1, j - 1, j);
                    rhs = cat({R(j, -1), inv(P), Bg(i, j, -1), P, R(j)});
                } else {
                    Word P = B_column(k + 1, j - 1, j);
                    Word A = cat({R(j, -1), inv(P), Bg(k, j, -1), P, R(j)});
                    rhs = conj(A, Bg(i, j));
                }
                b.add(conj(R(k), Bg(i, j)), rhs);
            }
    return {PresentationFamily::Pure_Pn, n, std::nullopt, b.gens, b.rels};
}

Presentation punctured_pure(int n, int m) {
    Builder b;
    int N = n + m;
    for (int j = n + 1; j <= N; ++j)
        for (int i = 1; i < j; ++i) b.gen(Generator::B(i, j));
    for (int k = n + 1; k <= N; ++k) b.gen(Generator::rho(k));
    // (i)
    for (int j = n + 1; j <= N; ++j)
        for (int l = j + 1; l <= N; ++l)
            for (int i = 1; i < j; ++i)
                for (int k = 1; k < l; ++k) {
                    Word rhs;
                    if (k < i || j < k) rhs = Bg(k, l);
                    else if (i < k && k == j) rhs = cat({Bg(k, l, -1), Bg(i, l, -1), Bg(k, l), Bg(i, l), Bg(k, l)});
                    else if (k == i) rhs = cat({Bg(j, l, -1), Bg(k, l), Bg(j, l)});
                    else  // i < k < j
                        rhs = cat({Bg(j, l, -1), Bg(i, l, -1), Bg(j, l), Bg(i, l), Bg(k, l), Bg(i, l, -1), Bg(j, l, -1),
                                   Bg(i, l), Bg(j, l)});
                    b.add(conj(Bg(i, j), Bg(k, l)), rhs);
                }
    // (ii)
    for (int k = n + 1; k <= N; ++k) {
        Word right;
        for (int l = k + 1; l <= N; ++l) right.push(Generator::B(k, l));
        b.add(cat({R(k), B_column(1, k - 1, k)}), cat({right, R(k, -1)}));
    }
    // (iii)
    for (int k = n + 1; k <= N; ++k)
        for (int l = k + 1; l <= N; ++l) {
            Word P = B_column(k + 1, l - 1, l);
            b.add(conj(R(k), R(l)), cat({inv(P), Bg(k, l), P, R(l)}));
        }
    // (iv), j > n+1 strictly
    for (int j = n + 2; j <= N; ++j)
        for (int i = 1; i < j; ++i)
            for (int k = n + 1; k <= N; ++k) {
                if (k == j) continue;
                Word rhs;
                if (j < k || k < i) {
                    rhs = Bg(i, j);
                } else if (k == i) {
                    Word P = B_column(k + 1, j - 1, j);
                    rhs = cat({R(j, -1), inv(P), Bg(i, j, -1), P, R(j)});
                } else {
                    Word P = B_column(k + 1, j - 1, j);
                    Word A = cat({R(j, -1), inv(P), Bg(k, j, -1), P, R(j)});
                    rhs = conj(A, Bg(i, j));
                }
                b.add(conj(R(k), Bg(i, j)), rhs);
            }
    std::sort(b.gens.begin(), b.gens.end());
    return {PresentationFamily::PuncturedPure_Pi, n, m, b.gens, b.rels};
}

// sigma_{j-1-n}^-1 ... sigma_{k+1-n}^-1 sigma_{k-n}^2 sigma_{k+1-n} ... sigma_{j-1-n}
Word X_word(int k, int j, int n) {
    return cat({sig_down(j - 1 - n, k + 1 - n, -1), S(k - n, 2), sig_up(k + 1 - n, j - 1 - n)});
}

// sigma_{k-1-n} ... sigma_1^2 ... sigma_{k-1-n}
Word left_loop(int k, int n) { return cat({sig_down(k - 1 - n, 1), sig_up(1, k - 1 - n)}); }

// sigma_{k-n} ... sigma_{m-1}^2 ... sigma_{k-n}
Word right_loop(int k, int n, int m) { return cat({sig_up(k - n, m - 1), sig_down(m - 1, k - n)}); }

void beta_relations(Builder& b, int n, int m) {
    int N = n + m;
    auto Bw = [n](int i, int j) { return expand_B(i, j, n); };
    // (i)
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int j = n + 1; j <= N; ++j)
                for (int l = j + 1; l <= N; ++l) {
                    Word rhs;
                    if (k < i) rhs = Bg(k, l);
                    else if (k == i) rhs = cat({inv(Bw(j, l)), Bg(k, l), Bw(j, l)});
                    else
                        rhs = cat({inv(Bw(j, l)), Bg(i, l, -1), Bw(j, l), Bg(i, l), Bg(k, l), Bg(i, l, -1), inv(Bw(j, l)),
                                   Bg(i, l), Bw(j, l)});
                    b.add(conj(Bg(i, j), Bg(k, l)), rhs);
                }
    // (i), case k = j
    for (int i = 1; i <= n; ++i)
        for (int j = n + 1; j <= N; ++j)
            for (int l = j + 1; l <= N; ++l) {
                Word Lam = cat({sig_down(l - 1 - n, j + 1 - n), S(j - n, -2), sig_up(j + 1 - n, l - 1 - n, -1)});
                b.add(conj(Bg(i, j), Bw(j, l)), cat({Lam, Bg(i, l, -1), inv(Lam), Bg(i, l), inv(Lam)}));
            }
    // (ii)
    for (int k = n + 1; k <= N; ++k)
        b.add(cat({R(k), B_column(1, n, k), left_loop(k, n)}), cat({right_loop(k, n, m), R(k, -1)}));
    // (iii)
    for (int k = n + 1; k <= N; ++k)
        for (int j = k + 1; j <= N; ++j) {
            b.add(conj(R(k), R(j)), cat({X_word(k, j, n), R(j)}));
            b.add(cat({R(k, -1), R(j), R(k)}), cat({R(j), Bw(k, j)}));
        }
    // (iv)
    for (int i = 1; i <= n; ++i)
        for (int j = n + 1; j <= N; ++j)
            for (int k = n + 1; k <= N; ++k) {
                if (k == j) continue;
                Word rhs;
                if (j < k) {
                    rhs = Bg(i, j);
                } else {
                    Word Tw = cat({R(j, -1), X_word(k, j, n), R(j)});
                    rhs = cat({inv(Tw), Bg(i, j), Tw});
                }
                b.add(conj(R(k), Bg(i, j)), rhs);
            }
    // (v)
    for (int r = 1; r <= m - 1; ++r)
        for (int s = r + 2; s <= m - 1; ++s) b.commute(S(r), S(s));
    for (int r = 1; r < m - 1; ++r) b.add(cat({S(r), S(r + 1), S(r)}), cat({S(r + 1), S(r), S(r + 1)}));
    // (vi)
    for (int i = 1; i <= n; ++i)
        for (int j = n + 1; j <= N; ++j)
            for (int r = 1; r <= m - 1; ++r) {
                Word rhs;
                if (r == j - n - 1) rhs = cat({S(j - n - 1, 2), Bg(i, j - 1), S(j - n - 1, -2)});
                else if (r == j - n) rhs = Bg(i, j + 1);
                else rhs = Bg(i, j);
                b.add(conj(S(r), Bg(i, j)), rhs);
            }
    // (vii)
    for (int r = 1; r <= m - 1; ++r)
        for (int k = n + 1; k <= N; ++k) {
            Word rhs;
            if (r == k - n) rhs = cat({S(k - n, 2), R(k + 1)});
            else if (r == k - 1 - n) rhs = cat({R(k - 1), S(k - 1 - n, -2)});
            else rhs = R(k);
            b.add(conj(S(r), R(k)), rhs);
        }
}

void beta_generators(Builder& b, int n, int m) {
    for (int i = 1; i <= n; ++i)
        for (int j = n + 1; j <= n + m; ++j) b.gen(Generator::B(i, j));
    for (int k = n + 1; k <= n + m; ++k) b.gen(Generator::rho(k));
    for (int l = 1; l <= m - 1; ++l) b.gen(Generator::sigma(l));
}

Presentation punctured_full(int n, int m) {
    Builder b;
    beta_generators(b, n, m);
    beta_relations(b, n, m);
    std::sort(b.gens.begin(), b.gens.end());
    return {PresentationFamily::PuncturedFull_beta, n, m, b.gens, b.rels};
}

Presentation mixed(int n, int m) {
    Builder b;
    int N = n + m;
    beta_generators(b, n, m);
    for (int s = 1; s <= n - 1; ++s) b.gen(Generator::tau(s));
    for (int t = 1; t <= n; ++t) b.gen(Generator::q(t));
    // (I)
    beta_relations(b, n, m);
    // (II)
    for (int i = 1; i <= n - 1; ++i)
        for (int k = i + 2; k <= n - 1; ++k) b.commute(T(i), T(k));
    for (int i = 1; i < n - 1; ++i) b.add(cat({T(i), T(i + 1), T(i)}), cat({T(i + 1), T(i), T(i + 1)}));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1) b.commute(T(i), Q(j));
    for (int i = 1; i <= n - 1; ++i) b.add(Q(i), cat({T(i), Q(i + 1), T(i)}));
    for (int i = 1; i <= n - 1; ++i) b.add(T(i, 2), cat({Q(i + 1, -1), Q(i, -1), Q(i + 1), Q(i)}));
    {
        Word row;
        for (int j = n + 1; j <= N; ++j) row.push(Generator::B(n, j));
        b.add(Q(1, 2), cat({tau_up(1, n - 1), row, tau_down(n - 1, 1)}));
    }
    // (III)(a)
    for (int l = 1; l <= m - 1; ++l) {
        for (int s = 1; s <= n - 1; ++s) b.commute(S(l), T(s));
        for (int t = 1; t <= n; ++t) b.commute(S(l), Q(t));
    }
    // (III)(b)
    auto Nw = [&](int t, int k) { return cat({B_column(t + 1, n, k), left_loop(k, n)}); };
    auto Ew = [&](int t, int k) { return cat({inv(Nw(t, k)), Bg(t, k), Nw(t, k)}); };
    for (int k = n + 1; k <= N; ++k) {
        for (int s = 1; s <= n - 1; ++s) b.commute(R(k), T(s));
        for (int t = 1; t <= n; ++t) b.add(conj(Q(t), R(k)), cat({Ew(t, k), R(k)}));
    }
    // (III)(c)
    for (int s = 1; s <= n - 1; ++s)
        for (int i = 1; i <= n; ++i)
            for (int j = n + 1; j <= N; ++j) {
                Word rhs;
                if (s == i - 1) rhs = cat({Bg(i, j, -1), Bg(i - 1, j), Bg(i, j)});
                else if (s == i) rhs = Bg(i + 1, j);
                else rhs = Bg(i, j);
                b.add(conj(T(s), Bg(i, j)), rhs);
            }
    // (III)(d)
    for (int t = 1; t <= n; ++t)
        for (int i = 1; i <= n; ++i)
            for (int k = n + 1; k <= N; ++k) {
                Word rhs;
                if (t < i) {
                    rhs = Bg(i, k);
                } else if (t == i) {
                    Word g = cat({Nw(t, k), R(k)});
                    rhs = cat({inv(g), Bg(i, k, -1), g});
                } else {
                    Word g = cat({R(k, -1), Ew(t, k), R(k)});
                    rhs = cat({inv(g), Bg(i, k), g});
                }
                b.add(conj(Q(t), Bg(i, k)), rhs);
            }
    std::sort(b.gens.begin(), b.gens.end());
    return {PresentationFamily::Mixed_Bnm, n, m, b.gens, b.rels};
}

// beta_i -> B_{i,n+1}, rho -> rho_{n+1}, sigma -> sigma_1
Presentation quotient_gamma2(int n, int m) {
    Builder b;
    for (int i = 1; i <= n; ++i) b.gen(Generator::B(i, n + 1));
    b.gen(Generator::rho(n + 1));
    b.gen(Generator::sigma(1));
    for (int s = 1; s <= n - 1; ++s) b.gen(Generator::tau(s));
    for (int t = 1; t <= n; ++t) b.gen(Generator::q(t));
    auto beta = [n](int i, std::int64_t e = 1) { return Bg(i, n + 1, e); };
    Word rho = R(n + 1), sig = S(1);
    // (I)
    std::vector<Word> ab;
    for (int i = 1; i <= n; ++i) ab.push_back(beta(i));
    ab.push_back(rho);
    ab.push_back(sig);
    for (std::size_t x = 0; x < ab.size(); ++x)
        for (std::size_t y = x + 1; y < ab.size(); ++y) b.commute(ab[x], ab[y]);
    b.add(S(1, 2), Word());
    {
        Word w = R(n + 1, 2);
        for (int i = 1; i <= n; ++i) w.push(Generator::B(i, n + 1));
        b.add(w, Word());
    }
    // (II)
    for (int i = 1; i <= n - 1; ++i)
        for (int k = i + 2; k <= n - 1; ++k) b.commute(T(i), T(k));
    for (int i = 1; i < n - 1; ++i) b.add(cat({T(i), T(i + 1), T(i)}), cat({T(i + 1), T(i), T(i + 1)}));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1) b.commute(T(i), Q(j));
    for (int i = 1; i <= n - 1; ++i) b.add(Q(i), cat({T(i), Q(i + 1), T(i)}));
    for (int i = 1; i <= n - 1; ++i) b.add(T(i, 2), cat({Q(i + 1, -1), Q(i, -1), Q(i + 1), Q(i)}));
    b.add(Q(1, 2), cat({tau_up(1, n - 1), beta(n, m), tau_down(n - 1, 1)}));
    // (III)(a), (b)
    for (int i = 1; i <= n - 1; ++i) b.commute(sig, T(i));
    for (int j = 1; j <= n; ++j) b.commute(sig, Q(j));
    for (int i = 1; i <= n - 1; ++i) b.commute(rho, T(i));
    for (int j = 1; j <= n; ++j) b.add(cat({Q(j), rho}), cat({beta(j), rho, Q(j)}));
    // (III)(c), (d)
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 1; k <= n; ++k) {
            Word rhs = i == k - 1 ? beta(k - 1) : i == k ? beta(k + 1) : beta(k);
            b.add(conj(T(i), beta(k)), rhs);
        }
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) b.add(conj(Q(j), beta(k)), j == k ? beta(k, -1) : beta(k));
    std::sort(b.gens.begin(), b.gens.end());
    return {PresentationFamily::QuotientGamma2, n, m, b.gens, b.rels};
}

Presentation kernel_free(int n) {
    Builder b;
    for (int i = 1; i <= n; ++i) b.gen(Generator::B(i, n + 1));
    b.gen(Generator::rho(n + 1));
    b.add(cat({R(n + 1), B_column(1, n, n + 1), R(n + 1)}), Word());
    return {PresentationFamily::KernelFree, n, std::nullopt, b.gens, b.rels};
}

}  // namespace

Word expand_B(int i, int j, int n) {
    if (i < 1 || i >= j) throw std::invalid_argument("expand_B needs 1 <= i < j");
    if (i <= n) return Bg(i, j);
    // n < i < j
    return cat({sig_down(j - 1 - n, i + 1 - n), S(i - n, 2), sig_up(i + 1 - n, j - 1 - n, -1)});
}

Presentation build(PresentationFamily family, int n, std::optional<int> m) {
    require(n >= 1, to_string(family) + " requires n >= 1");
    if (family_uses_m(family)) {
        require(m.has_value(), to_string(family) + " requires m");
        require(*m >= 1, to_string(family) + " requires m >= 1");
    } else {
        require(!m.has_value(), to_string(family) + " takes no m parameter");
    }
    Presentation p;
    switch (family) {
    case PresentationFamily::VanBuskirk_Bn: p = van_buskirk(n); break;
    case PresentationFamily::Pure_Pn: p = pure(n); break;
    case PresentationFamily::PuncturedPure_Pi: p = punctured_pure(n, *m); break;
    case PresentationFamily::PuncturedFull_beta: p = punctured_full(n, *m); break;
    case PresentationFamily::Mixed_Bnm:
        require(n >= 2, "Mixed_Bnm requires n >= 2");
        p = mixed(n, *m);
        break;
    case PresentationFamily::QuotientGamma2:
        require(n >= 2, "QuotientGamma2 requires n >= 2");
        p = quotient_gamma2(n, *m);
        break;
    case PresentationFamily::KernelFree: p = kernel_free(n); break;
    }
    validate(p);
    return p;
}

void validate(const Presentation& p) {
    std::set<Generator> declared(p.generators.begin(), p.generators.end());
    if (declared.size() != p.generators.size()) throw std::logic_error("duplicate generator");
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const auto& l : p.relators[r].letters())
            if (!declared.count(l.gen))
                throw std::invalid_argument("relator " + std::to_string(r) + " uses undeclared generator " +
                                            to_string(l.gen));
}

long long beta_relator_count(int n, int m) {
    auto C2 = [](long long x) { return x >= 2 ? x * (x - 1) / 2 : 0LL; };
    long long N = n, M = m;
    return N * N * C2(M) + N * C2(M) + M + 2 * C2(M) + N * M * (M - 1) + C2(M - 2) + std::max(0LL, M - 2) +
           N * M * (M - 1) + M * (M - 1);
}

}  // namespace rp2braid
