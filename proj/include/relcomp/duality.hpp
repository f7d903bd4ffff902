#pragma once

#include <cstddef>

#include "relcomp/errors.hpp"
#include "relcomp/linalg.hpp"
#include "relcomp/poly.hpp"

namespace relcomp {

// Matrix of the multiplication-by-t map on K[x]/(u): column j holds the
// coefficients of t * x^j mod u.
Mat mult_matrix(const Poly& t, const Poly& u);

// Block Krylov pair for M = mult_matrix(a, f) and X = [I_m 0]^T:
//   K = [X  MX  ...  M^(d-1)X]           (n x m*d)
//   L = rows X^T M^k stacked for k < d   (m*d x n)
struct KrylovPair {
    Mat K, L;
};
KrylovPair build_krylov(const Poly& f, const Poly& a, std::size_t m, std::size_t d);

// Structured companions of f:
//   S   triangular Hankel symmetrizer, S[i][j] = f_(i+j+1) (0-based, entries
//       beyond the coefficient list are zero)
//   Qm  = -mult_matrix(f mod x^m, x^m) * J_m
//   Pn  = mult_matrix(x^m mod f, f) * S
struct StructuredMats {
    Mat S, Qm, Pn;
    bool qm_invertible = false, pn_invertible = false;
};
StructuredMats build_structured(const Poly& f, std::size_t m);

// Exact check of L*Pn == diag(Qm,...,Qm)*K^T and S*M^T == M*S.
struct TranspositionReport {
    bool krylov_identity = false;
    bool symmetrizer_identity = false;
    bool qm_invertible = false;
    bool pn_invertible = false;
};
TranspositionReport check_transposition_identity(const Poly& f, const Poly& a, std::size_t m,
                                                 std::size_t d);

// Characteristic polynomial of mult_matrix(a, f), monic of degree deg f.
// Basis: determinant of the certified x-relation basis (refuses NonGeneric
// when certification fails). Berkowitz: division-free reference, never
// refuses. mu = 0 picks ceil(sqrt(n)) for the basis path.
enum class CharpolyVia { Basis, Berkowitz };
Fallible<Poly> charpoly(const Poly& a, const Poly& f, CharpolyVia via = CharpolyVia::Berkowitz,
                        std::size_t mu = 0);

// The unique g of degree < n with g(a) = h mod f, through the z-derivative
// of the characteristic polynomial of a + z*h over K[z]/(z^2). Requires the
// characteristic polynomial of a to be separable (MinimalPolynomialDefect).
Poly inverse_compose(const Poly& h, const Poly& a, const Poly& f);

// Composition reduced to two inverse compositions: alpha with
// alpha(a) = x mod f, then gamma with gamma(alpha) = g mod charpoly(a);
// gamma equals g(a) mod f. Demonstrator, not a production path.
Poly compose_via_charpoly(const Poly& g, const Poly& a, const Poly& f);

}  // namespace relcomp
