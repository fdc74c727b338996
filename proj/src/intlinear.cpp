#include "rp2braid/intlinear.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rp2braid {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t k = 0; k < n; ++k) I(k, k) = 1;
    return I;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
    IntMatrix M(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) M(r, c) = static_cast<long>(rows[r][c]);
    }
    return M;
}

IntMatrix IntMatrix::from_int_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix M(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) M(r, c) = rows[r][c];
    }
    return M;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
    return std::vector<Int>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
    IntMatrix P(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) P(r, c) += a * o(k, c);
        }
    return P;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

std::string AbelianStructure::str() const {
    std::string s = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion) s += " x Z_" + d.get_str();
    return s;
}

// ---------------------------------------------------------------- Smith

namespace {

void swap_rows(IntMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < M.cols(); ++c) std::swap(M(a, c), M(b, c));
}
void swap_cols(IntMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < M.rows(); ++r) std::swap(M(r, a), M(r, b));
}
// row a += f * row b
void add_row(IntMatrix& M, std::size_t a, std::size_t b, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < M.cols(); ++c)
        if (M(b, c) != 0) M(a, c) += f * M(b, c);
}
void add_col(IntMatrix& M, std::size_t a, std::size_t b, const Int& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < M.rows(); ++r)
        if (M(r, b) != 0) M(r, a) += f * M(r, b);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    SmithForm S{IntMatrix::identity(A.rows()), A, IntMatrix::identity(A.cols())};
    IntMatrix& D = S.D;
    const std::size_t R = D.rows(), C = D.cols();
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        while (true) {
            // smallest nonzero |entry| in the active block
            bool found = false;
            std::size_t pr = 0, pc = 0;
            Int best;
            for (std::size_t r = t; r < R; ++r)
                for (std::size_t c = t; c < C; ++c) {
                    if (D(r, c) == 0) continue;
                    Int a = abs(D(r, c));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pr = r;
                        pc = c;
                    }
                }
            if (!found) return S;
            swap_rows(D, t, pr);
            swap_rows(S.U, t, pr);
            swap_cols(D, t, pc);
            swap_cols(S.V, t, pc);
            bool dirty = false;
            for (std::size_t r = t + 1; r < R; ++r) {
                if (D(r, t) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D(r, t).get_mpz_t(), D(t, t).get_mpz_t());
                add_row(D, r, t, -q);
                add_row(S.U, r, t, -q);
                if (D(r, t) != 0) dirty = true;
            }
            for (std::size_t c = t + 1; c < C; ++c) {
                if (D(t, c) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D(t, c).get_mpz_t(), D(t, t).get_mpz_t());
                add_col(D, c, t, -q);
                add_col(S.V, c, t, -q);
                if (D(t, c) != 0) dirty = true;
            }
            if (dirty) continue;
            // divisibility of the remaining block by the pivot
            std::size_t bad_row = R;
            for (std::size_t r = t + 1; r < R && bad_row == R; ++r)
                for (std::size_t c = t + 1; c < C; ++c)
                    if (!mpz_divisible_p(D(r, c).get_mpz_t(), D(t, t).get_mpz_t())) {
                        bad_row = r;
                        break;
                    }
            if (bad_row != R) {
                add_row(D, t, bad_row, 1);
                add_row(S.U, t, bad_row, 1);
                continue;
            }
            break;
        }
        if (D(t, t) < 0) {
            for (std::size_t c = 0; c < C; ++c) D(t, c) = -D(t, c);
            for (std::size_t c = 0; c < R; ++c) S.U(t, c) = -S.U(t, c);
        }
    }
    return S;
}

// ---------------------------------------------------------------- Hermite

namespace {

class HnfBuilder {
public:
    explicit HnfBuilder(std::size_t cols) : cols_(cols) {}

    void insert(std::vector<Int> v) {
        std::size_t k = 0;
        while (true) {
            std::size_t lead = 0;
            while (lead < cols_ && v[lead] == 0) ++lead;
            if (lead == cols_) return;
            while (k < rows_.size() && piv_[k] < lead) ++k;
            if (k == rows_.size() || piv_[k] > lead) {
                if (v[lead] < 0)
                    for (auto& x : v) x = -x;
                rows_.insert(rows_.begin() + k, std::move(v));
                piv_.insert(piv_.begin() + k, lead);
                if (++since_reduce_ >= 16) reduce();
                return;
            }
            auto& h = rows_[k];
            const Int a = h[lead], b = v[lead];
            if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
                Int f = b / a;
                for (std::size_t c = lead; c < cols_; ++c)
                    if (h[c] != 0) v[c] -= f * h[c];
            } else {
                Int g, s, t;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                Int ag = a / g, bg = b / g;
                for (std::size_t c = lead; c < cols_; ++c) {
                    Int hn = s * h[c] + t * v[c];
                    Int vn = ag * v[c] - bg * h[c];
                    h[c] = std::move(hn);
                    v[c] = std::move(vn);
                }
                if (h[lead] < 0)
                    for (auto& x : h) x = -x;
            }
            ++k;
        }
    }

    void reduce() {
        since_reduce_ = 0;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::size_t p = piv_[k];
            for (std::size_t r = 0; r < k; ++r) {
                if (rows_[r][p] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows_[r][p].get_mpz_t(), rows_[k][p].get_mpz_t());
                if (q == 0) continue;
                for (std::size_t c = p; c < cols_; ++c)
                    if (rows_[k][c] != 0) rows_[r][c] -= q * rows_[k][c];
            }
        }
    }

    IntMatrix result() {
        reduce();
        return IntMatrix::from_int_rows(rows_, cols_);
    }

private:
    std::size_t cols_;
    std::vector<std::vector<Int>> rows_;
    std::vector<std::size_t> piv_;
    int since_reduce_ = 0;
};

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& A) {
    HnfBuilder b(A.cols());
    for (std::size_t r = 0; r < A.rows(); ++r) b.insert(A.row(r));
    return b.result();
}

bool in_hnf_lattice(const IntMatrix& hnf, std::vector<Int> v) {
    if (v.size() != hnf.cols()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t k = 0; k < hnf.rows(); ++k) {
        std::size_t p = 0;
        while (p < hnf.cols() && hnf(k, p) == 0) ++p;
        for (std::size_t c = 0; c < p; ++c)
            if (v[c] != 0) return false;
        if (!mpz_divisible_p(v[p].get_mpz_t(), hnf(k, p).get_mpz_t())) return false;
        Int f = v[p] / hnf(k, p);
        for (std::size_t c = p; c < hnf.cols(); ++c) v[c] -= f * hnf(k, c);
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// ---------------------------------------------------------------- groups

AbelianStructure cokernel_structure(const IntMatrix& A) {
    IntMatrix H = hermite_normal_form(A);
    SmithForm S = smith_normal_form(H);
    AbelianStructure out;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(S.D.rows(), S.D.cols()); ++k) {
        const Int& d = S.D(k, k);
        if (d == 0) continue;
        ++rank;
        if (d != 1) out.torsion.push_back(d);
    }
    out.free_rank = static_cast<long long>(A.cols() - rank);
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

IntMatrix exponent_matrix(const Presentation& P) {
    IntMatrix M(P.relators.size(), P.generators.size());
    for (std::size_t r = 0; r < P.relators.size(); ++r) {
        auto v = exponent_vector(P.relators[r], P.generators);
        for (std::size_t c = 0; c < v.size(); ++c) M(r, c) = static_cast<long>(v[c]);
    }
    return M;
}

AbelianStructure abelianization(const Presentation& P) { return cokernel_structure(exponent_matrix(P)); }

IntMatrix lattice_intersect_coordinate_subspace(const IntMatrix& L, const std::vector<std::size_t>& keep) {
    std::vector<bool> kept(L.cols(), false);
    for (auto k : keep) {
        if (k >= L.cols()) throw std::invalid_argument("keep index out of range");
        kept[k] = true;
    }
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < L.cols(); ++c)
        if (!kept[c]) order.push_back(c);
    const std::size_t dropped = order.size();
    for (auto k : keep) order.push_back(k);
    IntMatrix P(L.rows(), order.size());
    for (std::size_t r = 0; r < L.rows(); ++r)
        for (std::size_t c = 0; c < order.size(); ++c) P(r, c) = L(r, order[c]);
    IntMatrix H = hermite_normal_form(P);
    std::vector<std::vector<Int>> out;
    for (std::size_t r = 0; r < H.rows(); ++r) {
        bool zero_head = true;
        for (std::size_t c = 0; c < dropped && zero_head; ++c) zero_head = H(r, c) == 0;
        if (!zero_head) continue;
        auto row = H.row(r);
        out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(dropped), row.end());
    }
    return IntMatrix::from_int_rows(out, keep.size());
}

IntMatrix left_kernel(const IntMatrix& A) {
    IntMatrix aug(A.rows(), A.cols() + A.rows());
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) aug(r, c) = A(r, c);
        aug(r, A.cols() + r) = 1;
    }
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < A.rows(); ++r) keep.push_back(A.cols() + r);
    return lattice_intersect_coordinate_subspace(aug, keep);
}

IntMatrix right_kernel(const IntMatrix& A) {
    IntMatrix T(A.cols(), A.rows());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) T(c, r) = A(r, c);
    return left_kernel(T);
}

Int determinant(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && M(s, k) == 0) ++s;
            if (s == n) return 0;
            swap_rows(M, k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

}  // namespace rp2braid
