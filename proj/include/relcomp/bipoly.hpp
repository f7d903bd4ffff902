#pragma once

#include <cstddef>
#include <vector>

#include "relcomp/poly.hpp"

namespace relcomp {

// Dense bivariate polynomial with explicit bounds, x-major: g[i*yb + j] is
// the coefficient of x^i y^j. Bounds are capacities, not degrees; helper
// functions keep them tight where it matters.
struct BiPoly {
    Field F;
    std::size_t xb = 0, yb = 0;
    std::vector<FieldElement> g;

    BiPoly() = default;
    BiPoly(Field f, std::size_t xbound, std::size_t ybound)
        : F(f), xb(xbound), yb(ybound), g(xbound * ybound, f.zero()) {}

    FieldElement& at(std::size_t i, std::size_t j) { return g[i * yb + j]; }
    FieldElement cat(std::size_t i, std::size_t j) const {
        return (i < xb && j < yb) ? g[i * yb + j] : F.zero();
    }

    bool is_zero() const {
        for (auto c : g)
            if (c.v != 0) return false;
        return true;
    }

    // actual degrees: (xdeg, ydeg), (-1 sentinel via bool) kept simple:
    // returns one past the highest used index, 0 when zero.
    std::size_t x_support() const;
    std::size_t y_support() const;

    Poly y_coeff(std::size_t j) const;  // coefficient of y^j as Poly in x
    Poly x_coeff(std::size_t i) const;  // coefficient of x^i as Poly in y
    void set_y_coeff(std::size_t j, const Poly& p);
    void set_x_coeff(std::size_t i, const Poly& p);

    static BiPoly from_poly_in_x(const Poly& p, std::size_t yb = 1);
    static BiPoly from_poly_in_y(const Poly& p, std::size_t xb = 1);

    bool value_eq(const BiPoly& o) const;  // equality ignoring bound padding
};

BiPoly bi_add(const BiPoly& a, const BiPoly& b);
BiPoly bi_sub(const BiPoly& a, const BiPoly& b);
// Full product via Kronecker substitution y -> x^stride into one univariate
// multiplication.
BiPoly bi_mul(const BiPoly& a, const BiPoly& b);
BiPoly bi_scale(const BiPoly& a, FieldElement s);

BiPoly x_slice(const BiPoly& a, std::size_t lo, std::size_t k);  // [a]_lo^k in x
BiPoly x_shift(const BiPoly& a, std::size_t k);                  // *x^k
BiPoly x_reverse(const BiPoly& a, std::size_t at);
BiPoly y_reverse(const BiPoly& a, std::size_t at);
BiPoly y_truncate(const BiPoly& a, std::size_t k);
BiPoly x_truncate(const BiPoly& a, std::size_t k);

// G(x, a(x)) with every x-coefficient reduced modulo f (Horner in y).
Poly eval_y(const BiPoly& G, const Poly& a, const Poly& f);
FieldElement eval_xy(const BiPoly& G, FieldElement x0, FieldElement y0);

// ---- (K[y]/(y^k))[x] ring views -----------------------------------------
// A BiPoly with yb == k read as a polynomial in x whose coefficients are
// truncated y-series. Products truncate y at k; x is exact.

BiPoly tp_mul(const BiPoly& a, const BiPoly& b, std::size_t k);
BiPoly tp_mul_trunc_x(const BiPoly& a, const BiPoly& b, std::size_t k, std::size_t xorder);
// Multiply by a plain x-polynomial (acts on every y layer).
BiPoly tp_mul_field(const BiPoly& a, const Poly& u);
// Remainder modulo a plain x-polynomial, layer by layer.
BiPoly tp_rem_field(const BiPoly& a, const Poly& f);
// First xorder x-coefficients of the inverse; the x-constant term must be a
// unit of K[y]/(y^k), i.e. its y-constant coefficient nonzero.
BiPoly tp_series_inv_x(const BiPoly& a, std::size_t k, std::size_t xorder);

// ---- inverse Kronecker substitution --------------------------------------
// Exponent split i = i0 + i1*mu + i2*mu^2 regrouping G(x,y) of y-degree
// < mu^3 into the mu x mu grid of pieces s_{i1,i2}(x, y0) with y0-degree < mu.
struct MultiPoly3 {
    Field F;
    std::size_t m = 0, mu = 0;
    std::vector<BiPoly> s;  // s[i1*mu + i2]
    const BiPoly& piece(std::size_t i1, std::size_t i2) const { return s[i1 * mu + i2]; }
};
MultiPoly3 inverse_kronecker(const BiPoly& G, std::size_t mu);

}  // namespace relcomp
