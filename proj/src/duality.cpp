#include "relcomp/duality.hpp"

#include <vector>

#include "relcomp/polymat.hpp"
#include "relcomp/relations.hpp"

namespace relcomp {
namespace {

Poly make_monic(const Poly& f) {
    if (f.is_zero()) throw BadParameters("zero modulus");
    FieldElement l = f.lead();
    if (l.v == 1) return f;
    return poly_scale(f, f.field().inv(l));
}

// ---- division-free characteristic polynomial over any commutative ring ----
// Ring must provide: E zero(), E one(), add, sub, mul. Coefficients are
// returned ascending; the leading coefficient is one().
template <class Ring, class E>
std::vector<E> berkowitz(const Ring& R, const std::vector<E>& A, std::size_t n) {
    // p holds the charpoly of the leading r x r block, descending powers
    std::vector<E> p{R.one()};
    for (std::size_t r = 1; r <= n; ++r) {
        std::vector<E> q(r + 1, R.zero());
        q[0] = R.one();
        q[1] = R.sub(R.zero(), A[(r - 1) * n + (r - 1)]);
        if (r >= 2) {
            // s_k = row * B^k * col for the bordering row/column of the block
            std::vector<E> w(r - 1);
            for (std::size_t i = 0; i + 1 < r; ++i) w[i] = A[i * n + (r - 1)];
            for (std::size_t k = 0; k + 2 <= r; ++k) {
                E s = R.zero();
                for (std::size_t i = 0; i + 1 < r; ++i)
                    s = R.add(s, R.mul(A[(r - 1) * n + i], w[i]));
                q[k + 2] = R.sub(R.zero(), s);
                if (k + 3 <= r) {
                    std::vector<E> w2(r - 1, R.zero());
                    for (std::size_t i = 0; i + 1 < r; ++i)
                        for (std::size_t j = 0; j + 1 < r; ++j)
                            w2[i] = R.add(w2[i], R.mul(A[i * n + j], w[j]));
                    w = std::move(w2);
                }
            }
        }
        std::vector<E> np(r + 1, R.zero());
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < p.size() && j <= i; ++j)
                np[i] = R.add(np[i], R.mul(q[i - j], p[j]));
        p = std::move(np);
    }
    // descending -> ascending
    std::vector<E> out(n + 1, R.zero());
    for (std::size_t i = 0; i <= n; ++i) out[n - i] = p[i];
    return out;
}

struct FieldRing {
    Field F;
    FieldElement zero() const { return F.zero(); }
    FieldElement one() const { return F.one(); }
    FieldElement add(FieldElement a, FieldElement b) const { return F.add(a, b); }
    FieldElement sub(FieldElement a, FieldElement b) const { return F.sub(a, b); }
    FieldElement mul(FieldElement a, FieldElement b) const { return F.mul(a, b); }
};

// K[z]/(z^2): pairs (re, eps) with eps^2 = 0.
struct Dual {
    FieldElement re, eps;
};
struct DualRing {
    Field F;
    Dual zero() const { return {F.zero(), F.zero()}; }
    Dual one() const { return {F.one(), F.zero()}; }
    Dual add(Dual a, Dual b) const { return {F.add(a.re, b.re), F.add(a.eps, b.eps)}; }
    Dual sub(Dual a, Dual b) const { return {F.sub(a.re, b.re), F.sub(a.eps, b.eps)}; }
    Dual mul(Dual a, Dual b) const {
        return {F.mul(a.re, b.re), F.add(F.mul(a.re, b.eps), F.mul(a.eps, b.re))};
    }
};

}  // namespace

Mat mult_matrix(const Poly& t, const Poly& u) {
    Poly um = make_monic(u);
    const Field& K = um.field();
    if (um.deg() == 0) throw BadParameters("mult_matrix: modulus must have positive degree");
    std::size_t k = um.deg();
    Mat M(K, k, k);
    Poly v = poly_rem(t, um);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < v.len(); ++i) M.at(i, j) = v.coeff(i);
        if (j + 1 < k) v = poly_rem(poly_shift(v, 1), um);
    }
    return M;
}

KrylovPair build_krylov(const Poly& f, const Poly& a, std::size_t m, std::size_t d) {
    Poly fm = make_monic(f);
    const Field& K = fm.field();
    std::size_t n = fm.deg();
    if (n == 0 || m == 0 || m > n || d == 0) throw BadParameters("build_krylov: need 1 <= m <= deg f, d >= 1");
    Poly ar = poly_rem(a, fm);

    KrylovPair out{Mat(K, n, m * d), Mat(K, m * d, n)};
    // K columns: a^k * x^i mod f
    std::vector<Poly> col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = Poly::xpow(K, i);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t r = 0; r < col[i].len(); ++r) out.K.at(r, k * m + i) = col[i].coeff(r);
            if (k + 1 < d) col[i] = poly_rem(poly_mul(col[i], ar), fm);
        }
    }
    // L rows: rows 0..m-1 of M^k
    Mat M = mult_matrix(ar, fm);
    Mat Pk = Mat::identity(K, n);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t c = 0; c < n; ++c) out.L.at(k * m + i, c) = Pk.at(i, c);
        if (k + 1 < d) Pk = mat_mul(M, Pk);
    }
    return out;
}

StructuredMats build_structured(const Poly& f, std::size_t m) {
    Poly fm = make_monic(f);
    const Field& K = fm.field();
    std::size_t n = fm.deg();
    if (n == 0 || m == 0 || m > n) throw BadParameters("build_structured: need 1 <= m <= deg f");

    StructuredMats out;
    out.S = Mat(K, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j + 1 <= n) out.S.at(i, j) = fm.coeff(i + j + 1);

    Mat mf = mult_matrix(fm, Poly::xpow(K, m));  // multiplication by f mod x^m
    out.Qm = Mat(K, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.Qm.at(i, j) = K.neg(mf.at(i, m - 1 - j));

    Mat mx = mult_matrix(poly_rem(Poly::xpow(K, m), fm), fm);
    out.Pn = mat_mul(mx, out.S);

    out.qm_invertible = mat_det(out.Qm).v != 0;
    out.pn_invertible = mat_det(out.Pn).v != 0;
    return out;
}

TranspositionReport check_transposition_identity(const Poly& f, const Poly& a, std::size_t m,
                                                 std::size_t d) {
    Poly fm = make_monic(f);
    const Field& K = fm.field();
    std::size_t n = fm.deg();
    KrylovPair kp = build_krylov(fm, a, m, d);
    StructuredMats sm = build_structured(fm, m);

    TranspositionReport rep;
    rep.qm_invertible = sm.qm_invertible;
    rep.pn_invertible = sm.pn_invertible;

    Mat lhs = mat_mul(kp.L, sm.Pn);
    Mat diagQ(K, m * d, m * d);
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) diagQ.at(b * m + i, b * m + j) = sm.Qm.at(i, j);
    Mat kt(K, m * d, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m * d; ++j) kt.at(j, i) = kp.K.at(i, j);
    Mat rhs = mat_mul(diagQ, kt);
    rep.krylov_identity = (lhs.a == rhs.a);

    Mat M = mult_matrix(poly_rem(a, fm), fm);
    Mat mt(K, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mt.at(j, i) = M.at(i, j);
    Mat left = mat_mul(sm.S, mt);
    Mat right = mat_mul(M, sm.S);
    rep.symmetrizer_identity = (left.a == right.a);
    return rep;
}

Fallible<Poly> charpoly(const Poly& a, const Poly& f, CharpolyVia via, std::size_t mu) {
    Poly fm = make_monic(f);
    const Field& K = fm.field();
    std::size_t n = fm.deg();
    if (n == 0) throw BadParameters("charpoly: modulus must have positive degree");

    if (via == CharpolyVia::Berkowitz) {
        Mat M = mult_matrix(poly_rem(a, fm), fm);
        FieldRing R{K};
        std::vector<FieldElement> c = berkowitz(R, M.a, n);
        return Fallible<Poly>(Poly(K, std::move(c)));
    }

    if (fm.coeff(0).v == 0)
        return Fallible<Poly>(NonGeneric{"charpoly: basis path needs f(0) != 0"});
    if (mu == 0) {
        mu = 1;
        while (mu * mu < n) ++mu;
    }
    if (mu > n) mu = n;
    std::size_t dceil = (n + mu - 1) / mu;
    TruncatedPowerTable table;
    try {
        table = truncated_table_direct(fm, poly_rem(a, fm), mu, 2 * dceil);
    } catch (const NotInvertibleModF&) {
        return Fallible<Poly>(NonGeneric{"charpoly: gcd(a, f) is not constant"});
    }
    auto mb = mm_basis(fm, a, mu, table);
    if (!mb.ok()) return Fallible<Poly>(mb.refusal());
    Poly det = pm_det(mb.value().mat);
    if (det.is_zero() || det.deg() != n)
        return Fallible<Poly>(NonGeneric{"charpoly: basis determinant has wrong degree"});
    return Fallible<Poly>(make_monic(det));
}

Poly inverse_compose(const Poly& h, const Poly& a, const Poly& f) {
    Poly fm = make_monic(f);
    const Field& K = fm.field();
    std::size_t n = fm.deg();
    if (n == 0) throw BadParameters("inverse_compose: modulus must have positive degree");
    Poly ar = poly_rem(a, fm);
    Poly hr = poly_rem(h, fm);

    Mat Ma = mult_matrix(ar, fm);
    Mat Mh = mult_matrix(hr, fm);

    FieldRing FR{K};
    std::vector<FieldElement> chi_c = berkowitz(FR, Ma.a, n);
    Poly chi(K, chi_c);
    Poly dchi = derivative(chi);
    Poly g = poly_gcd(chi, dchi);
    if (g.is_zero() || g.deg() != 0)
        throw MinimalPolynomialDefect("inverse_compose: characteristic polynomial is not separable");

    DualRing DR{K};
    std::vector<Dual> A(n * n);
    for (std::size_t i = 0; i < n * n; ++i) A[i] = Dual{Ma.a[i], Mh.a[i]};
    std::vector<Dual> chi_z = berkowitz(DR, A, n);
    std::vector<FieldElement> dc(n + 1, K.zero());
    for (std::size_t i = 0; i <= n; ++i) dc[i] = chi_z[i].eps;
    Poly D(K, std::move(dc));  // z-derivative of charpoly(a + z h) at z = 0

    Poly inv_dchi = poly_inv_mod(poly_rem(dchi, chi), chi);
    return poly_rem(poly_mul(poly_neg(D), inv_dchi), chi);
}

Poly compose_via_charpoly(const Poly& g, const Poly& a, const Poly& f) {
    Poly fm = make_monic(f);
    const Field& K = fm.field();
    std::size_t n = fm.deg();
    if (n == 0) return Poly::zero(K);

    Mat Ma = mult_matrix(poly_rem(a, fm), fm);
    FieldRing FR{K};
    Poly chi(K, berkowitz(FR, Ma.a, n));

    Poly alpha = inverse_compose(Poly::x(K), a, fm);      // alpha(a) = x mod f
    Poly gamma = inverse_compose(poly_rem(g, chi), alpha, chi);  // gamma(alpha) = g mod chi
    return poly_rem(gamma, fm);
}

}  // namespace relcomp
