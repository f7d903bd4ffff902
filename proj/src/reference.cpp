#include "relcomp/reference.hpp"

#include "relcomp/errors.hpp"

namespace relcomp {
namespace ref {

Poly mul(const Poly& a, const Poly& b) {
    const Field& F = a.field();
    if (a.is_zero() || b.is_zero()) return Poly::zero(F);
    std::vector<FieldElement> c(a.len() + b.len() - 1, F.zero());
    for (std::size_t i = 0; i < a.len(); ++i)
        for (std::size_t j = 0; j < b.len(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.coeff(i), b.coeff(j)));
    return Poly(F, std::move(c));
}

DivRemResult divrem(const Poly& a, const Poly& b) {
    const Field& F = a.field();
    if (b.is_zero()) throw DivisionByZero("ref::divrem: zero divisor");
    std::vector<FieldElement> r(a.coeffs());
    std::size_t db = b.deg();
    FieldElement linv = F.inv(b.lead());
    if (a.is_zero() || a.deg() < db) return {Poly::zero(F), a};
    std::vector<FieldElement> q(a.deg() - db + 1, F.zero());
    for (std::size_t top = a.deg() + 1; top-- > db;) {
        FieldElement c = F.mul(r[top], linv);
        if (c.v == 0) continue;
        q[top - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            r[top - db + j] = F.sub(r[top - db + j], F.mul(c, b.coeff(j)));
    }
    r.resize(db);
    return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly interpolate(const Field& F, const std::vector<FieldElement>& xs,
                 const std::vector<FieldElement>& ys) {
    std::size_t n = xs.size();
    if (n == 0 || ys.size() != n) throw BadParameters("ref::interpolate: bad point lists");
    Poly acc = Poly::zero(F);
    for (std::size_t i = 0; i < n; ++i) {
        Poly num = Poly::one(F);
        FieldElement den = F.one();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            num = mul(num, Poly(F, {F.neg(xs[j]), F.one()}));
            FieldElement diff = F.sub(xs[i], xs[j]);
            if (diff.v == 0) throw DuplicateAbscissa("ref::interpolate: repeated abscissa");
            den = F.mul(den, diff);
        }
        acc = poly_add(acc, poly_scale(num, F.mul(ys[i], F.inv(den))));
    }
    return acc;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    const Field& F = A.F;
    if (A.cols != B.rows) throw DimMismatch("ref::mat_mul: inner dimensions differ");
    Mat C(F, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < B.cols; ++j) {
            FieldElement s = F.zero();
            for (std::size_t k = 0; k < A.cols; ++k) s = F.add(s, F.mul(A.at(i, k), B.at(k, j)));
            C.at(i, j) = s;
        }
    return C;
}

std::vector<FieldElement> dft(const std::vector<FieldElement>& v, FieldElement root,
                              const Field& F) {
    std::size_t N = v.size();
    std::vector<FieldElement> out(N, F.zero());
    for (std::size_t k = 0; k < N; ++k) {
        FieldElement wk = F.one();
        FieldElement step = F.one();
        for (std::size_t t = 0; t < k; ++t) step = F.mul(step, root);  // root^k
        FieldElement s = F.zero();
        for (std::size_t j = 0; j < N; ++j) {
            s = F.add(s, F.mul(v[j], wk));
            wk = F.mul(wk, step);
        }
        out[k] = s;
    }
    return out;
}

Poly compose(const Poly& g, const Poly& a, const Poly& f) {
    const Field& F = f.field();
    if (f.is_zero()) throw DivisionByZero("ref::compose: zero modulus");
    if (f.deg() == 0) return Poly::zero(F);
    Poly ar = divrem(a, f).r;
    Poly pw = Poly::one(F);
    Poly acc = Poly::zero(F);
    for (std::size_t i = 0; i < g.len(); ++i) {
        acc = poly_add(acc, poly_scale(pw, g.coeff(i)));
        if (i + 1 < g.len()) pw = divrem(mul(pw, ar), f).r;
    }
    return divrem(acc, f).r;
}

Poly eval_y(const BiPoly& G, const Poly& a, const Poly& f) {
    const Field& F = f.field();
    if (f.is_zero()) throw DivisionByZero("ref::eval_y: zero modulus");
    if (f.deg() == 0) return Poly::zero(F);
    Poly ar = divrem(a, f).r;
    Poly pw = Poly::one(F);
    Poly acc = Poly::zero(F);
    std::size_t d = G.y_support();
    for (std::size_t j = 0; j < d; ++j) {
        acc = poly_add(acc, divrem(mul(G.y_coeff(j), pw), f).r);
        if (j + 1 < d) pw = divrem(mul(pw, ar), f).r;
    }
    return divrem(acc, f).r;
}

std::vector<FieldElement> mpe(const Poly& a, const std::vector<FieldElement>& xs) {
    std::vector<FieldElement> out(xs.size(), a.field().zero());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = a.eval(xs[i]);
    return out;
}

}  // namespace ref
}  // namespace relcomp
