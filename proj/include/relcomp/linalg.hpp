#pragma once

#include <cstddef>
#include <vector>

#include "relcomp/field.hpp"

namespace relcomp {

// Dense constant matrix over GF(p), row major.
struct Mat {
    Field F;
    std::size_t rows = 0, cols = 0;
    std::vector<FieldElement> a;

    Mat() = default;
    Mat(Field f, std::size_t r, std::size_t c) : F(f), rows(r), cols(c), a(r * c, f.zero()) {}

    FieldElement& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    FieldElement at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(Field f, std::size_t n);
};

Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_sub(const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
bool mat_eq(const Mat& A, const Mat& B);

// Gaussian elimination helpers (exact field arithmetic, first nonzero pivot).
std::size_t mat_rank(Mat A);
FieldElement mat_det(Mat A);
// Basis of the right kernel, one column per basis vector (cols x dim).
Mat mat_kernel(const Mat& A);
// Inverse; throws SingularBasis when A is singular.
Mat mat_inverse(const Mat& A);

}  // namespace relcomp
