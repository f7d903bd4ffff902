#pragma once

#include <cstddef>
#include <vector>

#include "relcomp/bipoly.hpp"
#include "relcomp/errors.hpp"
#include "relcomp/polymat.hpp"

namespace relcomp {

// Canonical basis of a module of bivariate relations of a modulo f.
//  kind 'N': submodule of K[x]^mu (coordinates = coefficients of y^i),
//            entries are polynomials in x, Popov form, det ~ f.
//  kind 'M': submodule of K[y]^mu (coordinates = coefficients of x^i),
//            entries are polynomials in y, weak Popov, certified.
struct RelationBasis {
    PolyMatrix mat;
    char kind = 'N';
    std::size_t mu = 0, n = 0, delta = 0;  // delta = max column degree
    std::vector<std::size_t> cdeg;
    bool generic = false;  // delta equals the balanced bound ceil(n/mu)
};

// Popov basis of { p in K[x][y], deg_y p < mu : p(x, a) = 0 mod f }.
RelationBasis nmu_basis(const Poly& f, const Poly& a, std::size_t mu);

// Same basis, plus for each u in us a bivariate U (x-degree < delta,
// y-degree < mu) with U(x, a) = u mod f, all from one structured solve.
struct JointReduceResult {
    RelationBasis basis;
    std::vector<BiPoly> reduced;
};
JointReduceResult joint_reduce(const Poly& f, const Poly& a, std::size_t mu,
                               const std::vector<Poly>& us);

// Bivariate representations of the power ladder: A[j](x,a) = a^(j*mu) and
// B[j](x,a) = a^(j*mu^2) mod f for 0 <= j < mu, with A[0] = B[0] = 1.
struct PowerTables {
    Poly f, a;
    std::size_t mu = 0, delta = 0;
    RelationBasis basis;
    std::vector<BiPoly> A, B;
};
PowerTables powers_AB(const Poly& f, const Poly& a, std::size_t mu);

// Truncations t[i][k] = [x^i * base^(k+1) mod f]_0^(m-1) for i < m, k < count.
struct TruncatedPowerTable {
    std::size_t m = 0;
    Poly f, base;
    std::vector<std::vector<Poly>> t;  // t[i][k]

    std::size_t count() const { return t.empty() ? 0 : t[0].size(); }
};

// Rebuild the full table from the single shifted row
// rows[k] = [x^(m-1) * w_k mod f]_0^(2m-2); requires f(0) != 0.
TruncatedPowerTable recover_shifted_truncations(const std::vector<Poly>& rows, const Poly& f,
                                                std::size_t m);

// Reference construction of the same table by plain modular arithmetic
// (base = inverse of a mod f; throws NotInvertibleModF when gcd(a,f) != 1).
TruncatedPowerTable truncated_table_direct(const Poly& f, const Poly& a, std::size_t m,
                                           std::size_t count);

// Certified basis of { p in K[y][x], deg_x p < m : p(x, a) = 0 mod f } from
// the truncation table; refuses (NonGeneric) instead of returning an
// uncertified matrix.
Fallible<RelationBasis> mm_basis(const Poly& f, const Poly& a, std::size_t m,
                                 const TruncatedPowerTable& table);

// Independent dense-kernel construction of the same module restricted to
// y-degree <= ydeg_bound (test oracle; cubic cost).
PolyMatrix mm_basis_oracle(const Poly& f, const Poly& a, std::size_t m, std::size_t ydeg_bound);

// Remainder of g (x-degree < m) modulo the M-basis: same residue class, all
// x-rows reduced below the pivot degrees.
BiPoly reduce_by_mm(const BiPoly& g, const RelationBasis& basis);

// Do two square bases over the same variable generate the same column module?
bool same_column_module(const PolyMatrix& A, const PolyMatrix& B);

}  // namespace relcomp
