#include "relcomp/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relcomp {

Mat Mat::identity(Field f, std::size_t n) {
    Mat I(f, n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = f.one();
    return I;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    A.F.check_same(B.F);
    if (A.cols != B.rows) throw DimMismatch("mat_mul shape");
    const Field F = A.F;
    Mat C(F, A.rows, B.cols);
#pragma omp parallel for schedule(static) if (A.rows * B.cols * A.cols > 1u << 16)
    for (long long ii = 0; ii < static_cast<long long>(A.rows); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        for (std::size_t k = 0; k < A.cols; ++k) {
            FieldElement aik = A.at(i, k);
            if (F.is_zero(aik)) continue;
            for (std::size_t j = 0; j < B.cols; ++j) {
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
            }
        }
    }
    return C;
}

Mat mat_add(const Mat& A, const Mat& B) {
    A.F.check_same(B.F);
    if (A.rows != B.rows || A.cols != B.cols) throw DimMismatch("mat_add shape");
    Mat C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.F.add(A.a[i], B.a[i]);
    return C;
}

Mat mat_sub(const Mat& A, const Mat& B) {
    A.F.check_same(B.F);
    if (A.rows != B.rows || A.cols != B.cols) throw DimMismatch("mat_sub shape");
    Mat C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.F.sub(A.a[i], B.a[i]);
    return C;
}

Mat mat_transpose(const Mat& A) {
    Mat T(A.F, A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

bool mat_eq(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols || !A.F.same(B.F)) return false;
    for (std::size_t i = 0; i < A.a.size(); ++i)
        if (A.a[i] != B.a[i]) return false;
    return true;
}

namespace {

// Row echelon in place; returns (rank, det_of_leading_square) where the det
// accumulates row swaps and pivots, valid when A was square.
std::pair<std::size_t, FieldElement> echelon(Mat& A) {
    const Field F = A.F;
    FieldElement det = F.one();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < A.cols && rank < A.rows; ++col) {
        std::size_t piv = rank;
        while (piv < A.rows && F.is_zero(A.at(piv, col))) ++piv;
        if (piv == A.rows) {
            det = F.zero();
            continue;
        }
        if (piv != rank) {
            for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(rank, j));
            det = F.neg(det);
        }
        FieldElement pv = A.at(rank, col);
        det = F.mul(det, pv);
        FieldElement ipv = F.inv(pv);
        for (std::size_t i = rank + 1; i < A.rows; ++i) {
            FieldElement fct = F.mul(A.at(i, col), ipv);
            if (F.is_zero(fct)) continue;
            for (std::size_t j = col; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(fct, A.at(rank, j)));
        }
        ++rank;
    }
    return {rank, det};
}

}  // namespace

std::size_t mat_rank(Mat A) { return echelon(A).first; }

FieldElement mat_det(Mat A) {
    if (A.rows != A.cols) throw DimMismatch("det of non-square matrix");
    auto [rank, det] = echelon(A);
    return rank == A.rows ? det : A.F.zero();
}

Mat mat_kernel(const Mat& A) {
    const Field F = A.F;
    Mat R = A;
    // reduced row echelon with recorded pivot columns
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < R.cols && rank < R.rows; ++col) {
        std::size_t piv = rank;
        while (piv < R.rows && F.is_zero(R.at(piv, col))) ++piv;
        if (piv == R.rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < R.cols; ++j) std::swap(R.at(piv, j), R.at(rank, j));
        FieldElement ipv = F.inv(R.at(rank, col));
        for (std::size_t j = 0; j < R.cols; ++j) R.at(rank, j) = F.mul(R.at(rank, j), ipv);
        for (std::size_t i = 0; i < R.rows; ++i) {
            if (i == rank) continue;
            FieldElement fct = R.at(i, col);
            if (F.is_zero(fct)) continue;
            for (std::size_t j = 0; j < R.cols; ++j)
                R.at(i, j) = F.sub(R.at(i, j), F.mul(fct, R.at(rank, j)));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(R.cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::size_t dim = R.cols - rank;
    Mat K(F, R.cols, dim);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < R.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        K.at(free_col, out) = F.one();
        for (std::size_t r = 0; r < rank; ++r)
            K.at(pivot_col[r], out) = F.neg(R.at(r, free_col));
        ++out;
    }
    return K;
}

Mat mat_inverse(const Mat& A) {
    if (A.rows != A.cols) throw DimMismatch("inverse of non-square matrix");
    const Field F = A.F;
    const std::size_t n = A.rows;
    Mat W(F, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) W.at(i, j) = A.at(i, j);
        W.at(i, n + i) = F.one();
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && F.is_zero(W.at(piv, col))) ++piv;
        if (piv == n) throw SingularBasis("matrix not invertible");
        if (piv != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(W.at(piv, j), W.at(col, j));
        FieldElement ipv = F.inv(W.at(col, col));
        for (std::size_t j = 0; j < 2 * n; ++j) W.at(col, j) = F.mul(W.at(col, j), ipv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            FieldElement fct = W.at(i, col);
            if (F.is_zero(fct)) continue;
            for (std::size_t j = 0; j < 2 * n; ++j)
                W.at(i, j) = F.sub(W.at(i, j), F.mul(fct, W.at(col, j)));
        }
    }
    Mat inv(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = W.at(i, n + j);
    return inv;
}

}  // namespace relcomp
