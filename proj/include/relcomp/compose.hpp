#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "relcomp/bipoly.hpp"
#include "relcomp/errors.hpp"
#include "relcomp/relations.hpp"

namespace relcomp {

// Wall-clock phase breakdown (milliseconds) plus the block parameters the
// driver picked, filled by the composition drivers when a non-null pointer
// is passed.
struct PhaseTimings {
    std::vector<std::pair<std::string, double>> phases;
    std::size_t m = 0, d = 0, mu = 0, delta = 0;
    void add(const std::string& name, double ms) { phases.emplace_back(name, ms); }
};

// g(a) mod f one modular multiplication per coefficient of g.
Poly horner_compose(const Poly& g, const Poly& a, const Poly& f);

// Baby-step/giant-step composition: baby powers of a, one dense matrix
// product, then a Horner sweep with a^m; y^n-adic segmentation for large g.
Poly brent_kung_compose(const Poly& g, const Poly& a, const Poly& f);

// G(x, a) mod f by square-root segmentation of the y-powers and one
// polynomial matrix product over x-adic chunks of the power table.
Poly nz_bivariate_compose(const BiPoly& G, const Poly& a, const Poly& f);

// G(x, a) mod f using precomputed power tables: the y-degree is split into
// base-mu digits, the two inner digits are folded by one (mu x mu) polynomial
// matrix product, the outer digit by the B ladder, then one y-evaluation.
// Requires y-degree(G) <= mu^3 (BlockTooSmall otherwise) and tables built for
// (f, a) (StaleTables otherwise).
Poly bivariate_compose(const BiPoly& G, const Poly& a, const Poly& f, const PowerTables& tables);

// Coefficients n-t .. n-1 of P*Q mod f without the full product, where
// n = deg f, P has x-degree < n, and t <= n - x_len(Q) + 1. Field case and
// the same computation with coefficients in K[y]/(y^k).
Poly high_part_rem(const Poly& P, const Poly& Q, const Poly& f, std::size_t t);
BiPoly high_part_rem(const BiPoly& P, const BiPoly& Q, const Poly& f, std::size_t t,
                     std::size_t k);

// For each eta in etas: [x^(n-delta) * h * eta mod f]_0^(m-1), where h holds
// the coefficient window n-delta .. n-1 of some polynomial (x-bound of h is
// delta by convention) and the y-blocks of h are folded through products over
// K[y]/(y^(2 mu - 1)).
std::vector<BiPoly> sim_trunc_products(const BiPoly& h, const std::vector<BiPoly>& etas,
                                       const Poly& f, std::size_t m, std::size_t mu);

// rows[k] = [b * base^k mod f]_0^(mlen-1) for 0 <= k < d, using the bivariate
// power tables of base (two table-product cascades instead of d modular
// multiplications). Requires d <= mu^3 and tables built for (f, base).
std::vector<Poly> truncated_powers(const Poly& f, const Poly& base, const Poly& b,
                                   std::size_t mlen, std::size_t d, const PowerTables& tables);

// Full composition g(a) mod f through the relation pipeline; refuses with
// NonGeneric (gcd(a,f) != 1, unbalanced bases) rather than falling back.
Fallible<Poly> univariate_compose(const Poly& g, const Poly& a, const Poly& f,
                                  PhaseTimings* timings = nullptr);

// Evaluate G(x_i, y_i) for all i: builds f = prod (x - x_i), interpolates a,
// composes, and evaluates. DuplicateAbscissa on repeated x_i.
Fallible<std::vector<FieldElement>> multipoint_eval_bivariate(const BiPoly& G,
                                                              const std::vector<FieldElement>& xs,
                                                              const std::vector<FieldElement>& ys);

}  // namespace relcomp
