#pragma once

#include <cstddef>
#include <vector>

#include "relcomp/bipoly.hpp"
#include "relcomp/linalg.hpp"
#include "relcomp/poly.hpp"

namespace relcomp {
namespace ref {

// Deliberately naive, loop-serial implementations. They exist as independent
// oracles for the tests and as the baseline side of the kernel benchmark;
// none of the fast paths may call into them.

Poly mul(const Poly& a, const Poly& b);                    // schoolbook
struct DivRemResult {
    Poly q, r;
};
DivRemResult divrem(const Poly& a, const Poly& b);         // long division
Poly interpolate(const Field& F, const std::vector<FieldElement>& xs,
                 const std::vector<FieldElement>& ys);     // Lagrange sum
Mat mat_mul(const Mat& A, const Mat& B);                   // triple loop
std::vector<FieldElement> dft(const std::vector<FieldElement>& v, FieldElement root,
                              const Field& F);             // quadratic DFT
Poly compose(const Poly& g, const Poly& a, const Poly& f); // power ladder
Poly eval_y(const BiPoly& G, const Poly& a, const Poly& f);// per-layer ladder
std::vector<FieldElement> mpe(const Poly& a, const std::vector<FieldElement>& xs);

}  // namespace ref
}  // namespace relcomp
