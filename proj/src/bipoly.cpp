#include "relcomp/bipoly.hpp"

#include <algorithm>

#include "relcomp/errors.hpp"

namespace relcomp {

std::size_t BiPoly::x_support() const {
    for (std::size_t i = xb; i-- > 0;)
        for (std::size_t j = 0; j < yb; ++j)
            if (g[i * yb + j].v) return i + 1;
    return 0;
}

std::size_t BiPoly::y_support() const {
    for (std::size_t j = yb; j-- > 0;)
        for (std::size_t i = 0; i < xb; ++i)
            if (g[i * yb + j].v) return j + 1;
    return 0;
}

Poly BiPoly::y_coeff(std::size_t j) const {
    std::vector<FieldElement> c(xb, F.zero());
    if (j < yb)
        for (std::size_t i = 0; i < xb; ++i) c[i] = g[i * yb + j];
    return Poly(F, std::move(c));
}

Poly BiPoly::x_coeff(std::size_t i) const {
    if (i >= xb) return Poly::zero(F);
    std::vector<FieldElement> c(g.begin() + static_cast<std::ptrdiff_t>(i * yb),
                                g.begin() + static_cast<std::ptrdiff_t>((i + 1) * yb));
    return Poly(F, std::move(c));
}

void BiPoly::set_y_coeff(std::size_t j, const Poly& p) {
    if (p.is_zero()) {
        if (j < yb)
            for (std::size_t i = 0; i < xb; ++i) g[i * yb + j] = F.zero();
        return;
    }
    if (p.len() > xb || j >= yb) throw DimMismatch("set_y_coeff outside bounds");
    for (std::size_t i = 0; i < xb; ++i) g[i * yb + j] = p.coeff(i);
}

void BiPoly::set_x_coeff(std::size_t i, const Poly& p) {
    if (p.is_zero()) {
        if (i < xb)
            for (std::size_t j = 0; j < yb; ++j) g[i * yb + j] = F.zero();
        return;
    }
    if (p.len() > yb || i >= xb) throw DimMismatch("set_x_coeff outside bounds");
    for (std::size_t j = 0; j < yb; ++j) g[i * yb + j] = p.coeff(j);
}

BiPoly BiPoly::from_poly_in_x(const Poly& p, std::size_t yb) {
    BiPoly b(p.field(), std::max<std::size_t>(p.len(), 1), std::max<std::size_t>(yb, 1));
    for (std::size_t i = 0; i < p.len(); ++i) b.at(i, 0) = p.coeff(i);
    return b;
}

BiPoly BiPoly::from_poly_in_y(const Poly& p, std::size_t xb) {
    BiPoly b(p.field(), std::max<std::size_t>(xb, 1), std::max<std::size_t>(p.len(), 1));
    for (std::size_t j = 0; j < p.len(); ++j) b.at(0, j) = p.coeff(j);
    return b;
}

bool BiPoly::value_eq(const BiPoly& o) const {
    F.check_same(o.F);
    std::size_t xm = std::max(xb, o.xb), ym = std::max(yb, o.yb);
    for (std::size_t i = 0; i < xm; ++i)
        for (std::size_t j = 0; j < ym; ++j)
            if (cat(i, j) != o.cat(i, j)) return false;
    return true;
}

BiPoly bi_add(const BiPoly& a, const BiPoly& b) {
    a.F.check_same(b.F);
    BiPoly r(a.F, std::max(std::max(a.xb, b.xb), std::size_t{1}),
             std::max(std::max(a.yb, b.yb), std::size_t{1}));
    for (std::size_t i = 0; i < r.xb; ++i)
        for (std::size_t j = 0; j < r.yb; ++j) r.at(i, j) = a.F.add(a.cat(i, j), b.cat(i, j));
    return r;
}

BiPoly bi_sub(const BiPoly& a, const BiPoly& b) {
    a.F.check_same(b.F);
    BiPoly r(a.F, std::max(std::max(a.xb, b.xb), std::size_t{1}),
             std::max(std::max(a.yb, b.yb), std::size_t{1}));
    for (std::size_t i = 0; i < r.xb; ++i)
        for (std::size_t j = 0; j < r.yb; ++j) r.at(i, j) = a.F.sub(a.cat(i, j), b.cat(i, j));
    return r;
}

BiPoly bi_scale(const BiPoly& a, FieldElement s) {
    BiPoly r = a;
    for (auto& c : r.g) c = a.F.mul(c, s);
    return r;
}

BiPoly bi_mul(const BiPoly& a, const BiPoly& b) {
    a.F.check_same(b.F);
    std::size_t ax = a.x_support(), ay = a.y_support();
    std::size_t bx = b.x_support(), by = b.y_support();
    if (ax == 0 || bx == 0) return BiPoly(a.F, 1, 1);
    std::size_t ry = ay + by - 1;
    std::size_t rx = ax + bx - 1;
    // Kronecker: pack with x-stride ry so y-exponents cannot collide.
    std::vector<FieldElement> pa(ax * ry, a.F.zero()), pb(bx * ry, a.F.zero());
    for (std::size_t i = 0; i < ax; ++i)
        for (std::size_t j = 0; j < std::min(ay, a.yb); ++j) pa[i * ry + j] = a.cat(i, j);
    for (std::size_t i = 0; i < bx; ++i)
        for (std::size_t j = 0; j < std::min(by, b.yb); ++j) pb[i * ry + j] = b.cat(i, j);
    Poly prod = poly_mul(Poly(a.F, std::move(pa)), Poly(a.F, std::move(pb)));
    BiPoly r(a.F, rx, ry);
    for (std::size_t i = 0; i < rx; ++i)
        for (std::size_t j = 0; j < ry; ++j) r.at(i, j) = prod.coeff(i * ry + j);
    return r;
}

BiPoly x_slice(const BiPoly& a, std::size_t lo, std::size_t k) {
    BiPoly r(a.F, k + 1, std::max<std::size_t>(a.yb, 1));
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j < a.yb; ++j) r.at(i, j) = a.cat(lo + i, j);
    return r;
}

BiPoly x_shift(const BiPoly& a, std::size_t k) {
    BiPoly r(a.F, a.xb + k, std::max<std::size_t>(a.yb, 1));
    for (std::size_t i = 0; i < a.xb; ++i)
        for (std::size_t j = 0; j < a.yb; ++j) r.at(i + k, j) = a.cat(i, j);
    return r;
}

BiPoly x_reverse(const BiPoly& a, std::size_t at) {
    if (a.x_support() > at + 1) throw DegreeOverflow("x_reverse: x-degree exceeds reversal index");
    BiPoly r(a.F, at + 1, std::max<std::size_t>(a.yb, 1));
    for (std::size_t i = 0; i <= at; ++i)
        for (std::size_t j = 0; j < a.yb; ++j) r.at(at - i, j) = a.cat(i, j);
    return r;
}

BiPoly y_reverse(const BiPoly& a, std::size_t at) {
    if (a.y_support() > at + 1) throw DegreeOverflow("y_reverse: y-degree exceeds reversal index");
    BiPoly r(a.F, std::max<std::size_t>(a.xb, 1), at + 1);
    for (std::size_t i = 0; i < a.xb; ++i)
        for (std::size_t j = 0; j <= at; ++j) r.at(i, at - j) = a.cat(i, j);
    return r;
}

BiPoly y_truncate(const BiPoly& a, std::size_t k) {
    BiPoly r(a.F, std::max<std::size_t>(a.xb, 1), std::max<std::size_t>(k, 1));
    for (std::size_t i = 0; i < a.xb; ++i)
        for (std::size_t j = 0; j < std::min(k, a.yb); ++j) r.at(i, j) = a.cat(i, j);
    return r;
}

BiPoly x_truncate(const BiPoly& a, std::size_t k) {
    BiPoly r(a.F, std::max<std::size_t>(k, 1), std::max<std::size_t>(a.yb, 1));
    for (std::size_t i = 0; i < std::min(k, a.xb); ++i)
        for (std::size_t j = 0; j < a.yb; ++j) r.at(i, j) = a.cat(i, j);
    return r;
}

Poly eval_y(const BiPoly& G, const Poly& a, const Poly& f) {
    G.F.check_same(a.field());
    G.F.check_same(f.field());
    if (f.is_zero() || f.deg() == 0) return Poly::zero(G.F);
    Poly ar = poly_rem(a, f);
    Poly acc = Poly::zero(G.F);
    std::size_t ys = G.y_support();
    for (std::size_t j = ys; j-- > 0;) {
        acc = poly_rem(poly_add(poly_mul(acc, ar), G.y_coeff(j)), f);
    }
    return acc;
}

FieldElement eval_xy(const BiPoly& G, FieldElement x0, FieldElement y0) {
    const Field& F = G.F;
    FieldElement acc = F.zero();
    for (std::size_t j = G.yb; j-- > 0;) {
        // Horner in y; inner Horner in x.
        FieldElement row = F.zero();
        for (std::size_t i = G.xb; i-- > 0;) row = F.add(F.mul(row, x0), G.cat(i, j));
        acc = F.add(F.mul(acc, y0), row);
    }
    return acc;
}

BiPoly tp_mul(const BiPoly& a, const BiPoly& b, std::size_t k) {
    return y_truncate(bi_mul(y_truncate(a, k), y_truncate(b, k)), k);
}

BiPoly tp_mul_trunc_x(const BiPoly& a, const BiPoly& b, std::size_t k, std::size_t xorder) {
    return x_truncate(tp_mul(x_truncate(a, xorder), x_truncate(b, xorder), k), xorder);
}

BiPoly tp_mul_field(const BiPoly& a, const Poly& u) {
    a.F.check_same(u.field());
    if (u.is_zero() || a.is_zero()) return BiPoly(a.F, 1, std::max<std::size_t>(a.yb, 1));
    std::size_t ys = std::max<std::size_t>(a.y_support(), 1);
    BiPoly r(a.F, a.x_support() + u.len() - 1, std::max<std::size_t>(a.yb, 1));
    for (std::size_t j = 0; j < ys; ++j) r.set_y_coeff(j, poly_mul(a.y_coeff(j), u));
    return r;
}

BiPoly tp_rem_field(const BiPoly& a, const Poly& f) {
    a.F.check_same(f.field());
    if (f.is_zero()) throw DivisionByZero("tp_rem_field by zero");
    std::size_t n = f.deg() == 0 ? 1 : f.len() - 1;
    BiPoly r(a.F, std::max<std::size_t>(n, 1), std::max<std::size_t>(a.yb, 1));
    std::size_t ys = a.y_support();
    for (std::size_t j = 0; j < ys; ++j) r.set_y_coeff(j, poly_rem(a.y_coeff(j), f));
    return r;
}

BiPoly tp_series_inv_x(const BiPoly& a, std::size_t k, std::size_t xorder) {
    if (xorder == 0) return BiPoly(a.F, 1, std::max<std::size_t>(k, 1));
    Poly c0 = y_truncate(a, k).x_coeff(0);
    if (c0.is_zero() || c0.coeff(0).v == 0)
        throw NeedsUnitConstantTerm("tp_series_inv_x: constant term not a unit");
    // Newton iteration w <- w(2 - aw) over (K[y]/(y^k))[x].
    Poly w0 = series_inv(c0, k);  // inverse of the y-series constant term
    BiPoly w = BiPoly::from_poly_in_y(w0, 1);
    std::size_t prec = 1;
    BiPoly two(a.F, 1, std::max<std::size_t>(k, 1));
    two.at(0, 0) = a.F.add(a.F.one(), a.F.one());
    while (prec < xorder) {
        prec = std::min(prec * 2, xorder);
        BiPoly aw = tp_mul_trunc_x(a, w, k, prec);
        BiPoly corr = bi_sub(two, aw);
        w = tp_mul_trunc_x(w, corr, k, prec);
    }
    return x_truncate(w, xorder);
}

MultiPoly3 inverse_kronecker(const BiPoly& G, std::size_t mu) {
    if (mu == 0) throw BadParameters("inverse_kronecker: mu must be positive");
    if (G.y_support() > mu * mu * mu)
        throw DegreeOverflow("inverse_kronecker: y-degree not below mu^3");
    MultiPoly3 out;
    out.F = G.F;
    out.mu = mu;
    out.m = std::max<std::size_t>(G.x_support(), 1);
    out.s.assign(mu * mu, BiPoly(G.F, out.m, mu));
    std::size_t ys = G.y_support();
    for (std::size_t j = 0; j < ys; ++j) {
        std::size_t i0 = j % mu, i1 = (j / mu) % mu, i2 = j / (mu * mu);
        BiPoly& piece = out.s[i1 * mu + i2];
        for (std::size_t i = 0; i < out.m; ++i)
            piece.at(i, i0) = G.cat(i, j);
    }
    return out;
}

}  // namespace relcomp
