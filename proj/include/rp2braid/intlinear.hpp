#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rp2braid/presentation.hpp"

namespace rp2braid {

using Int = mpz_class;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols);
    static IntMatrix from_int_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::vector<Int> row(std::size_t r) const;

    bool operator==(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

struct SmithForm {
    IntMatrix U, D, V;  // U * A * V == D
};

// Pivot: smallest nonzero |entry| in the active block, ties broken row-major.
SmithForm smith_normal_form(const IntMatrix& A);

// Row-style HNF; only the nonzero rows are returned, so the result is a basis of the row lattice.
IntMatrix hermite_normal_form(const IntMatrix& A);

struct AbelianStructure {
    long long free_rank = 0;
    std::vector<Int> torsion;  // invariant factors, each >= 2, d_i | d_{i+1}
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianStructure& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
    std::string str() const;
};

// Z^cols / rowspan(A)
AbelianStructure cokernel_structure(const IntMatrix& A);

AbelianStructure abelianization(const Presentation& P);
IntMatrix exponent_matrix(const Presentation& P);

// Basis of {v in rowspan(L) : v_j = 0 for j not in keep}, restricted to keep (in the given order).
IntMatrix lattice_intersect_coordinate_subspace(const IntMatrix& L, const std::vector<std::size_t>& keep);

// Basis of {n in Z^rows : n A = 0}.
IntMatrix left_kernel(const IntMatrix& A);
// Basis of {x in Z^cols : A x = 0}.
IntMatrix right_kernel(const IntMatrix& A);

// Is v in the row lattice spanned by the basis rows of an HNF?
bool in_hnf_lattice(const IntMatrix& hnf, std::vector<Int> v);

// Determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix& A);

}  // namespace rp2braid
