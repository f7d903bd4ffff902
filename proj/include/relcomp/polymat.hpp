#pragma once

#include <cstddef>
#include <vector>

#include "relcomp/linalg.hpp"
#include "relcomp/poly.hpp"

namespace relcomp {

// Dense matrix over K[v]. Column convention throughout: module elements are
// columns, bases are sets of columns, degrees and pivots are per column.
struct PolyMatrix {
    Field F;
    std::size_t rows = 0, cols = 0;
    std::vector<Poly> e;

    PolyMatrix() = default;
    PolyMatrix(Field f, std::size_t r, std::size_t c)
        : F(f), rows(r), cols(c), e(r * c, Poly::zero(f)) {}

    Poly& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    static PolyMatrix identity(Field f, std::size_t n);
    std::size_t max_len() const;  // max entry length (degree + 1), 0 if all zero
};

PolyMatrix pm_transpose(const PolyMatrix& a);
PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_sub(const PolyMatrix& a, const PolyMatrix& b);
// Matrix product with transform-based inner loops when the sizes pay for it;
// memory is kept bounded by processing the output in row blocks.
PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_truncate(const PolyMatrix& a, std::size_t order);
// Entry-wise exact division by v^k followed by truncation (residual step).
PolyMatrix pm_shift_div_trunc(const PolyMatrix& a, std::size_t k, std::size_t order);
// Right multiplication by a constant matrix (column recombination).
PolyMatrix pm_mul_const(const PolyMatrix& a, const Mat& c);
bool pm_eq(const PolyMatrix& a, const PolyMatrix& b);

// Column degrees, leading matrix and reducedness predicates under a row
// shift. For column j, the shifted degree is max_i(deg e(i,j) + shift_i); the
// pivot is the LAST row attaining it. Predicates:
//   column_reduced : leading matrix has full column rank;
//   weak_popov     : pivot of column j sits on row j;
//   popov          : weak_popov, pivots monic, and each pivot strictly
//                    dominates its row by plain degree.
struct ColumnForms {
    std::vector<long long> cdeg;     // shifted column degrees (0 for zero columns)
    std::vector<bool> zero_col;
    std::vector<std::size_t> pivot_row;  // size_t(-1) for zero columns
    Mat leading;
    bool column_reduced = false;
    bool weak_popov = false;
    bool popov = false;
};
ColumnForms form_predicates(const PolyMatrix& a, const std::vector<long long>& shift = {});

// Minimal approximant basis: columns p with p^T F = 0 mod v^sigma, returned
// in shifted Popov form together with the pivot degrees.
struct ApproximantBasis {
    PolyMatrix basis;                 // rows(F) x rows(F)
    std::vector<std::size_t> mindeg;  // pivot degree of column j
};
ApproximantBasis approximant_basis(const PolyMatrix& F, std::size_t sigma,
                                   const std::vector<long long>& shift = {});

// Minimal right matrix generator of the sequence H_0, H_1, ...: a column
// basis, in weak Popov form, of the relations sum_j H_{k-j} V_j = 0 holding
// for cdeg(col) <= k < sigma. degenerate marks the all-zero sequence.
struct MatrixGenerator {
    PolyMatrix gen;
    bool degenerate = false;
    bool verified = false;
};
MatrixGenerator matrix_generator(const std::vector<Mat>& H);

// Vector division with remainder: v = A q + r with deg r_i < pivot degree of
// the column whose pivot row is i. A must be column reduced.
struct MatDivRem {
    std::vector<Poly> q, r;
};
MatDivRem mat_divrem(const std::vector<Poly>& v, const PolyMatrix& A);
std::vector<Poly> mat_rem(const std::vector<Poly>& v, const PolyMatrix& A);

// Determinant by evaluation/interpolation (SmallFieldError if the field has
// too few points and no suitable transform).
Poly pm_det(const PolyMatrix& a);

}  // namespace relcomp
