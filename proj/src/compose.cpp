#include "relcomp/compose.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "relcomp/linalg.hpp"

namespace relcomp {
namespace {

Poly make_monic(const Poly& f) {
    if (f.is_zero()) throw BadParameters("zero modulus");
    FieldElement l = f.lead();
    if (l.v == 1) return f;
    return poly_scale(f, f.field().inv(l));
}

// Cached Newton inverse of the reversed modulus: one series inversion paid
// once, then every reduction of a product of two residues costs two short
// multiplications instead of a fresh division.
struct Modulus {
    Poly fm;
    std::size_t n = 0;
    Poly rinv;  // series_inv(reverse(fm, n), n)
};

Modulus make_modulus(const Poly& f) {
    Modulus M;
    M.fm = make_monic(f);
    M.n = M.fm.deg();
    if (M.n >= 1) M.rinv = series_inv(reverse(M.fm, M.n), M.n);
    return M;
}

Poly mod_reduce(const Modulus& M, const Poly& u) {
    if (M.n == 0) return Poly::zero(M.fm.field());
    if (u.len() <= M.n) return u;
    std::size_t du = u.deg();
    if (du >= 2 * M.n) return poly_rem(u, M.fm);  // outside the cached range
    std::size_t qlen = du - M.n + 1;
    Poly q = reverse(trunc(poly_mul_trunc(reverse(u, du), M.rinv, qlen), qlen), qlen - 1);
    return poly_sub(trunc(u, M.n), poly_mul_trunc(q, M.fm, M.n));
}

Poly mod_mul(const Modulus& M, const Poly& a, const Poly& b) {
    return mod_reduce(M, poly_mul(a, b));
}

// Horner in y with the cached modulus.
Poly eval_y_mod(const BiPoly& G, const Poly& ar, const Modulus& M) {
    const Field& K = M.fm.field();
    Poly acc = Poly::zero(K);
    std::size_t d = G.y_support();
    for (std::size_t j = d; j-- > 0;) {
        acc = poly_add(mod_reduce(M, poly_mul(acc, ar)), mod_reduce(M, G.y_coeff(j)));
    }
    return acc;
}

// Pack a bivariate into one univariate with y-stride sy (x-major). Products
// of packed values with total y-width <= sy are collision free.
Poly pack_bi(const BiPoly& b, std::size_t sy) {
    std::size_t xs = b.x_support();
    std::vector<FieldElement> c(xs * sy, b.F.zero());
    for (std::size_t i = 0; i < xs; ++i)
        for (std::size_t j = 0; j < std::min(b.yb, sy); ++j) c[i * sy + j] = b.cat(i, j);
    return Poly(b.F, std::move(c));
}

BiPoly unpack_bi(const Poly& p, const Field& K, std::size_t sy, std::size_t ykeep) {
    std::size_t xs = p.len() == 0 ? 1 : (p.len() + sy - 1) / sy;
    BiPoly r(K, xs, std::max<std::size_t>(ykeep, 1));
    for (std::size_t idx = 0; idx < p.len(); ++idx) {
        std::size_t i = idx / sy, j = idx % sy;
        if (j < ykeep) r.at(i, j) = p.coeff(idx);
    }
    return r;
}

}  // namespace

Poly horner_compose(const Poly& g, const Poly& a, const Poly& f) {
    Modulus M = make_modulus(f);
    const Field& K = M.fm.field();
    if (M.n == 0) return Poly::zero(K);
    Poly ar = poly_rem(a, M.fm);
    Poly acc = Poly::zero(K);
    for (std::size_t i = g.len(); i-- > 0;) {
        acc = mod_reduce(M, poly_mul(acc, ar));
        acc = poly_add(acc, Poly::constant(K, g.coeff(i)));
    }
    return acc;
}

Poly brent_kung_compose(const Poly& g, const Poly& a, const Poly& f) {
    Modulus M = make_modulus(f);
    const Field& K = M.fm.field();
    std::size_t n = M.n;
    if (n == 0) return Poly::zero(K);
    Poly ar = poly_rem(a, M.fm);
    if (g.is_zero()) return Poly::zero(K);

    auto core = [&](const Poly& seg) -> Poly {
        if (seg.is_zero()) return Poly::zero(K);
        std::size_t L = seg.len();
        std::size_t m = 1;
        while (m * m < L) ++m;
        std::size_t R = (L + m - 1) / m;
        std::vector<Poly> pw(m, Poly::one(K));
        for (std::size_t j = 1; j < m; ++j) pw[j] = mod_mul(M, pw[j - 1], ar);
        Poly giant = mod_mul(M, pw[m - 1], ar);  // ar^m
        Mat C(K, R, m), A(K, m, n);
        for (std::size_t r = 0; r < R; ++r)
            for (std::size_t t = 0; t < m; ++t) C.at(r, t) = seg.coeff(r * m + t);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t c = 0; c < std::min(n, pw[j].len()); ++c) A.at(j, c) = pw[j].coeff(c);
        Mat P = mat_mul(C, A);
        Poly acc = Poly::zero(K);
        for (std::size_t r = R; r-- > 0;) {
            std::vector<FieldElement> row(n, K.zero());
            for (std::size_t c = 0; c < n; ++c) row[c] = P.at(r, c);
            acc = poly_add(mod_reduce(M, poly_mul(acc, giant)), Poly(K, std::move(row)));
        }
        return acc;
    };

    if (g.len() <= n) return core(g);
    Poly an = powmod(ar, static_cast<u64>(n), M.fm);
    std::size_t nch = (g.len() + n - 1) / n;
    Poly acc = Poly::zero(K);
    for (std::size_t c = nch; c-- > 0;) {
        Poly seg = slice(g, c * n, n - 1);
        acc = poly_add(mod_reduce(M, poly_mul(acc, an)), core(seg));
    }
    return acc;
}

Poly nz_bivariate_compose(const BiPoly& G, const Poly& a, const Poly& f) {
    Modulus M = make_modulus(f);
    const Field& K = M.fm.field();
    std::size_t n = M.n;
    if (n == 0) return Poly::zero(K);
    Poly ar = poly_rem(a, M.fm);
    std::size_t d = G.y_support();
    if (d == 0) return Poly::zero(K);
    if (d == 1) return poly_rem(G.y_coeff(0), M.fm);

    // keep x-chunks no wider than the modulus
    BiPoly Gr = G;
    if (G.x_support() > n) {
        Gr = BiPoly(K, n, d);
        for (std::size_t j = 0; j < d; ++j) Gr.set_y_coeff(j, poly_rem(G.y_coeff(j), M.fm));
    }

    std::size_t mbar = 1;
    while (mbar * mbar < d) ++mbar;
    std::size_t R = (d + mbar - 1) / mbar;
    std::size_t mx = std::max<std::size_t>(Gr.x_support(), 1);
    std::size_t nch = (n + mx - 1) / mx;

    std::vector<Poly> pw(mbar, Poly::one(K));
    for (std::size_t j = 1; j < mbar; ++j) pw[j] = mod_mul(M, pw[j - 1], ar);

    PolyMatrix C(K, R, mbar), Am(K, mbar, nch);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < mbar; ++j) {
            std::size_t idx = i * mbar + j;
            if (idx < d) C.at(i, j) = Gr.y_coeff(idx);
        }
    for (std::size_t j = 0; j < mbar; ++j)
        for (std::size_t c = 0; c < nch; ++c) Am.at(j, c) = slice(pw[j], c * mx, mx - 1);
    PolyMatrix P = pm_mul(C, Am);

    Poly giant = powmod(ar, static_cast<u64>(mbar), M.fm);
    Poly acc = Poly::zero(K);
    for (std::size_t i = R; i-- > 0;) {
        Poly row = Poly::zero(K);
        for (std::size_t c = 0; c < nch; ++c) row = poly_add(row, poly_shift(P.at(i, c), c * mx));
        row = mod_reduce(M, row);
        acc = poly_add(mod_reduce(M, poly_mul(acc, giant)), row);
    }
    return acc;
}

Poly bivariate_compose(const BiPoly& G, const Poly& a, const Poly& f, const PowerTables& tables) {
    Modulus M = make_modulus(f);
    const Field& K = M.fm.field();
    std::size_t n = M.n;
    if (n == 0) return Poly::zero(K);
    std::size_t mu = tables.mu;
    if (mu == 0) throw BadParameters("bivariate_compose: empty power tables");
    if (make_monic(tables.f) != M.fm) throw StaleTables("bivariate_compose: tables built for another modulus");
    Poly ar = poly_rem(a, M.fm);
    if (poly_rem(tables.a, M.fm) != ar) throw StaleTables("bivariate_compose: tables built for another point");

    std::size_t d = G.y_support();
    if (d == 0) return Poly::zero(K);
    if (d > mu * mu * mu) throw BlockTooSmall("bivariate_compose: y-degree exceeds mu^3");
    if (mu == 1 || d <= mu) return eval_y_mod(G, ar, M);

    MultiPoly3 split = inverse_kronecker(G, mu);
    std::size_t delta = std::max<std::size_t>(tables.delta, 1);
    std::size_t cw = (delta + mu - 1) / mu;
    std::size_t nchunks = (delta + cw - 1) / cw;
    std::size_t sy = 2 * mu - 1;

    // fold the middle digit: one (mu x mu) polynomial matrix product over
    // x-chunks of the A ladder, entries Kronecker packed in y
    PolyMatrix M1(K, mu, mu), M2(K, mu, nchunks);
    for (std::size_t i2 = 0; i2 < mu; ++i2)
        for (std::size_t i1 = 0; i1 < mu; ++i1) M1.at(i2, i1) = pack_bi(split.piece(i1, i2), sy);
    for (std::size_t i1 = 0; i1 < mu; ++i1)
        for (std::size_t k = 0; k < nchunks; ++k)
            M2.at(i1, k) = pack_bi(x_slice(tables.A[i1], k * cw, cw - 1), sy);
    PolyMatrix P = pm_mul(M1, M2);

    // fold the outer digit with the B ladder, then evaluate y once
    Poly acc = Poly::zero(K);
    BiPoly S;
    bool have = false;
    for (std::size_t i2 = 0; i2 < mu; ++i2) {
        BiPoly T;
        bool haveT = false;
        for (std::size_t k = 0; k < nchunks; ++k) {
            BiPoly piece = x_shift(unpack_bi(P.at(i2, k), K, sy, sy), k * cw);
            T = haveT ? bi_add(T, piece) : piece;
            haveT = true;
        }
        BiPoly term = bi_mul(T, tables.B[i2]);
        S = have ? bi_add(S, term) : term;
        have = true;
    }
    return eval_y_mod(S, ar, M);
}

Poly high_part_rem(const Poly& P, const Poly& Q, const Poly& f, std::size_t t) {
    BiPoly R = high_part_rem(BiPoly::from_poly_in_x(P), BiPoly::from_poly_in_x(Q), f, t, 1);
    return R.y_coeff(0);
}

BiPoly high_part_rem(const BiPoly& P, const BiPoly& Q, const Poly& f, std::size_t t,
                     std::size_t k) {
    Poly fm = make_monic(f);
    const Field& K = fm.field();
    std::size_t n = fm.deg();
    if (n == 0) throw BadParameters("high_part_rem: modulus must have positive degree");
    if (k == 0 || t == 0) throw BadParameters("high_part_rem: empty slice or y-order");
    if (P.x_support() > n) throw BadParameters("high_part_rem: left factor must be reduced");
    std::size_t dq = Q.x_support();
    BiPoly out(K, t, k);
    if (dq == 0 || P.is_zero()) return out;
    if (t + dq > n + 1) throw BadParameters("high_part_rem: slice wider than the safe window");

    // high part of the quotient from the reversed series
    BiPoly h(K, 1, k);
    if (dq >= 2) {
        BiPoly Pr = x_reverse(P, n - 1);
        BiPoly Qr = x_reverse(Q, dq - 1);
        Poly finv = series_inv(reverse(fm, n), dq - 1);
        BiPoly hbar = x_truncate(tp_mul_field(tp_mul_trunc_x(Pr, Qr, k, dq - 1), finv), dq - 1);
        h = x_reverse(hbar, dq - 2);
    }

    // the wanted slice only depends on a window of P and f
    std::size_t lo = n - t - dq + 1;
    BiPoly Pwin = x_slice(P, lo, t + dq - 2);
    Poly fwin = slice(fm, lo, t + dq - 2);
    BiPoly R = bi_sub(tp_mul(Pwin, Q, k), tp_mul_field(h, fwin));
    return x_slice(R, dq - 1, t - 1);
}

std::vector<BiPoly> sim_trunc_products(const BiPoly& h, const std::vector<BiPoly>& etas,
                                       const Poly& f, std::size_t m, std::size_t mu) {
    if (etas.empty()) return {};
    Poly fm = make_monic(f);
    const Field& K = fm.field();
    std::size_t n = fm.deg();
    if (n == 0 || m == 0 || mu == 0) throw BadParameters("sim_trunc_products: empty parameters");
    std::size_t delta = h.xb;
    if (delta == 0 || delta > n) throw BadParameters("sim_trunc_products: window bound out of range");
    for (const BiPoly& e : etas)
        if (e.x_support() > delta) throw BadParameters("sim_trunc_products: factor wider than the window");

    std::size_t muhat = std::max<std::size_t>(h.yb, 1);
    std::size_t mubar = (muhat + mu - 1) / mu;
    std::size_t k2 = 2 * mu - 1;
    std::size_t J = etas.size();

    // reversed mu-blocks of h
    std::vector<BiPoly> hblk(mubar), ubar(mubar);
    for (std::size_t i = 0; i < mubar; ++i) {
        BiPoly blk(K, delta, mu);
        for (std::size_t jj = 0; jj < mu; ++jj) {
            std::size_t gj = i * mu + jj;
            if (gj >= h.yb) break;
            for (std::size_t xi = 0; xi < delta; ++xi) blk.at(xi, jj) = h.cat(xi, gj);
        }
        hblk[i] = blk;
        ubar[i] = x_reverse(blk, delta - 1);
    }

    // reversed eta times the inverse of the reversed modulus
    std::vector<BiPoly> ghat(J);
    std::size_t Cv = delta >= 2 ? (delta - 1 + m - 1) / m : 0;
    if (Cv > 0) {
        Poly finv = series_inv(reverse(fm, n), delta - 1);
        for (std::size_t j = 0; j < J; ++j)
            ghat[j] = x_truncate(tp_mul_field(x_reverse(etas[j], delta - 1), finv), delta - 1);
    }

    // low coefficients of the quotients, by anti-diagonal chunk products
    std::vector<BiPoly> W(mubar * J, BiPoly(K, m, k2));
    if (Cv > 0) {
        std::size_t Cu = (delta + m - 1) / m;
        std::size_t glo = (delta >= m + 2) ? delta - 1 - m : 0;
        std::size_t smin = (glo <= 2 * m - 2) ? 0 : (glo - (2 * m - 2) + m - 1) / m;
        std::size_t smax = std::min((delta - 2) / m, Cu + Cv - 2);
        for (std::size_t s = smin; s <= smax; ++s) {
            std::size_t clo = s >= Cv - 1 ? s - (Cv - 1) : 0;
            std::size_t chi = std::min(Cu - 1, s);
            if (clo > chi) continue;
            std::size_t nc = chi - clo + 1;
            PolyMatrix U(K, mubar, nc), V(K, nc, J);
            for (std::size_t i = 0; i < mubar; ++i)
                for (std::size_t c = clo; c <= chi; ++c)
                    U.at(i, c - clo) = pack_bi(x_slice(ubar[i], c * m, m - 1), k2);
            for (std::size_t c = clo; c <= chi; ++c)
                for (std::size_t j = 0; j < J; ++j)
                    V.at(c - clo, j) = pack_bi(x_slice(ghat[j], (s - c) * m, m - 1), k2);
            PolyMatrix Pm = pm_mul(U, V);
            for (std::size_t i = 0; i < mubar; ++i)
                for (std::size_t j = 0; j < J; ++j) {
                    const Poly& p = Pm.at(i, j);
                    for (std::size_t idx = 0; idx < p.len(); ++idx) {
                        std::size_t e = idx / k2, y = idx % k2;
                        std::size_t g = s * m + e;
                        if (g + 1 >= delta || g < glo) continue;  // need g <= delta-2
                        std::size_t tt = delta - 2 - g;
                        if (tt < m) {
                            BiPoly& acc = W[i * J + j];
                            acc.at(tt, y) = K.add(acc.at(tt, y), p.coeff(idx));
                        }
                    }
                }
        }
    }

    // assemble [x^(n-delta) h_i eta_j mod f]_0^(m-1) and overlap the blocks
    Poly lowf = trunc(fm, m);
    std::size_t of = n - delta;
    std::vector<BiPoly> out(J, BiPoly(K, m, (mubar - 1) * mu + k2));
    for (std::size_t j = 0; j < J; ++j) {
        BiPoly loweta = x_truncate(etas[j], m);
        for (std::size_t i = 0; i < mubar; ++i) {
            BiPoly term1(K, m, mu);
            if (of < m) {
                for (std::size_t xi = 0; of + xi < m && xi < delta; ++xi)
                    for (std::size_t y = 0; y < mu; ++y) term1.at(of + xi, y) = hblk[i].cat(xi, y);
            }
            BiPoly t1 = tp_mul_trunc_x(term1, loweta, k2, m);
            BiPoly t2 = x_truncate(tp_mul_field(W[i * J + j], lowf), m);
            BiPoly R = bi_sub(t1, t2);
            for (std::size_t xi = 0; xi < m; ++xi)
                for (std::size_t y = 0; y < k2; ++y) {
                    FieldElement v = R.cat(xi, y);
                    if (v.v != 0) {
                        FieldElement& o = out[j].at(xi, i * mu + y);
                        o = K.add(o, v);
                    }
                }
        }
    }
    return out;
}

std::vector<Poly> truncated_powers(const Poly& f, const Poly& base, const Poly& b,
                                   std::size_t mlen, std::size_t d, const PowerTables& tables) {
    Modulus M = make_modulus(f);
    const Field& K = M.fm.field();
    std::size_t n = M.n;
    if (mlen == 0) throw BadParameters("truncated_powers: empty truncation length");
    if (d == 0) return {};
    if (n == 0) return std::vector<Poly>(d, Poly::zero(K));
    std::size_t mu = tables.mu;
    if (mu == 0) throw BadParameters("truncated_powers: empty power tables");
    if (make_monic(tables.f) != M.fm)
        throw StaleTables("truncated_powers: tables built for another modulus");
    Poly ar = poly_rem(tables.a, M.fm);
    if (poly_rem(base, M.fm) != ar)
        throw StaleTables("truncated_powers: tables built for another point");
    if (d > mu * mu * mu) throw BoundTooSmall("truncated_powers: d exceeds mu^3");
    Poly br = poly_rem(b, M.fm);

    std::vector<Poly> out(d, Poly::zero(K));
    std::size_t K0 = 3 * mu - 2;

    // seed rows by plain modular multiplication
    std::size_t seed = std::min(d, K0);
    std::vector<Poly> c(std::max(seed, std::min(K0, d)), Poly::zero(K));
    {
        Poly cur = br;
        for (std::size_t k = 0; k < seed; ++k) {
            c[k] = cur;
            out[k] = slice(cur, 0, mlen - 1);
            if (k + 1 < seed) cur = mod_mul(M, cur, ar);
        }
    }
    if (d <= K0 || mu < 2 || n < 2) {
        if (d > seed) {  // only when the table cascade is unavailable
            Poly cur = c[seed - 1];
            for (std::size_t k = seed; k < d; ++k) {
                cur = mod_mul(M, cur, ar);
                out[k] = slice(cur, 0, mlen - 1);
            }
        }
        return out;
    }

    std::size_t delta = std::max<std::size_t>(tables.delta, 1);
    std::size_t K1 = mu * mu + mu - 1;

    BiPoly D0(K, n, K0);
    for (std::size_t k = 0; k < K0; ++k) D0.set_y_coeff(k, c[k]);

    std::vector<BiPoly> alphas(mu - 1), betas(mu - 1);
    for (std::size_t j = 1; j < mu; ++j) {
        alphas[j - 1] = y_reverse(tables.A[j], mu - 1);
        betas[j - 1] = y_reverse(tables.B[j], mu - 1);
    }

    bool lowfast = (mlen + delta <= n);

    auto map_index = [&](std::size_t kp, std::size_t stride, std::size_t ring) {
        std::size_t j = std::min<std::size_t>(std::max<std::size_t>(kp / stride, 1), mu - 1);
        std::size_t kk = kp - j * stride + mu - 1;
        if (kk >= ring) throw Error("truncated_powers: digit map out of range");
        return std::pair<std::size_t, std::size_t>(j, kk);
    };

    // ---- first cascade: indices < mu^2 + mu - 1 ---------------------------
    BiPoly D1low(K, mlen, K1), D1high(K, delta, K1);
    for (std::size_t k = 0; k < K0; ++k) {
        D1low.set_y_coeff(k, slice(c[k], 0, mlen - 1));
        D1high.set_y_coeff(k, slice(c[k], n - delta, delta - 1));
    }

    BiPoly D0high = x_slice(D0, n - delta, delta - 1);
    BiPoly D0low = x_truncate(D0, mlen);

    std::vector<BiPoly> sims1;
    if (lowfast) sims1 = sim_trunc_products(D0high, alphas, M.fm, mlen, mu);

    std::vector<BiPoly> fulls1(mu - 1);  // only filled on the fallback path
    for (std::size_t j = 1; j < mu; ++j) {
        std::size_t dq = std::max<std::size_t>(alphas[j - 1].x_support(), 1);
        bool highfast = (delta + dq <= n + 1);
        BiPoly highj, lowj;
        if (lowfast && highfast) {
            highj = high_part_rem(D0, alphas[j - 1], M.fm, delta, K0);
            BiPoly t1 = tp_mul_trunc_x(D0low, alphas[j - 1], K0, mlen);
            lowj = x_truncate(bi_add(t1, y_truncate(sims1[j - 1], K0)), mlen);
        } else {
            fulls1[j - 1] = tp_rem_field(tp_mul(D0, alphas[j - 1], K0), M.fm);
            highj = x_slice(fulls1[j - 1], n - delta, delta - 1);
            lowj = x_slice(fulls1[j - 1], 0, mlen - 1);
        }
        for (std::size_t kp = K0; kp < K1; ++kp) {
            auto [jj, kk] = map_index(kp, mu, K0);
            if (jj != j) continue;
            D1low.set_y_coeff(kp, lowj.y_coeff(kk));
            D1high.set_y_coeff(kp, highj.y_coeff(kk));
        }
    }

    for (std::size_t kp = K0; kp < std::min(K1, d); ++kp) out[kp] = D1low.y_coeff(kp);
    if (d <= K1) return out;

    // ---- second cascade: indices < mu^3 -----------------------------------
    std::vector<BiPoly> sims2;
    BiPoly D1full;
    if (lowfast) {
        sims2 = sim_trunc_products(D1high, betas, M.fm, mlen, mu);
    } else {
        D1full = BiPoly(K, n, K1);
        for (std::size_t k = 0; k < K0; ++k) D1full.set_y_coeff(k, c[k]);
        for (std::size_t kp = K0; kp < K1; ++kp) {
            auto [jj, kk] = map_index(kp, mu, K0);
            if (fulls1[jj - 1].xb == 0)
                fulls1[jj - 1] = tp_rem_field(tp_mul(D0, alphas[jj - 1], K0), M.fm);
            D1full.set_y_coeff(kp, fulls1[jj - 1].y_coeff(kk));
        }
    }

    for (std::size_t j = 1; j < mu; ++j) {
        BiPoly lowj;
        if (lowfast) {
            BiPoly t1 = tp_mul_trunc_x(D1low, betas[j - 1], K1, mlen);
            lowj = x_truncate(bi_add(t1, y_truncate(sims2[j - 1], K1)), mlen);
        } else {
            BiPoly full = tp_rem_field(tp_mul(D1full, betas[j - 1], K1), M.fm);
            lowj = x_slice(full, 0, mlen - 1);
        }
        for (std::size_t kp = K1; kp < d; ++kp) {
            auto [jj, kk] = map_index(kp, mu * mu, K1);
            if (jj != j) continue;
            out[kp] = lowj.y_coeff(kk);
        }
    }
    return out;
}

Fallible<Poly> univariate_compose(const Poly& g, const Poly& a, const Poly& f,
                                  PhaseTimings* timings) {
    using Clock = std::chrono::steady_clock;
    auto t0 = Clock::now();
    auto stamp = [&](const char* name) {
        if (timings) {
            auto t1 = Clock::now();
            timings->add(name, std::chrono::duration<double, std::milli>(t1 - t0).count());
            t0 = t1;
        }
    };

    const Field& K = f.field();
    if (f.is_zero()) throw BadParameters("univariate_compose: zero modulus");
    Poly fm = make_monic(f);
    std::size_t n = fm.deg();
    if (n == 0) return Fallible<Poly>(Poly::zero(K));
    Poly ar = poly_rem(a, fm);
    if (g.len() <= 1 || ar.len() <= 1 || n == 1) {
        Poly h = horner_compose(g, ar, fm);
        stamp("horner-shortcut");
        return Fallible<Poly>(std::move(h));
    }

    // factor out a power of x so that the main path sees f(0) != 0
    std::size_t alpha = 0;
    while (alpha < fm.len() && fm.coeff(alpha).v == 0) ++alpha;
    if (alpha == n) {
        Poly h = brent_kung_compose(g, ar, fm);
        stamp("power-series-part");
        return Fallible<Poly>(std::move(h));
    }
    if (alpha > 0) {
        Poly xa = Poly::xpow(K, alpha);
        Poly fstar = poly_divrem(fm, xa).q;
        Poly hhat = brent_kung_compose(g, ar, xa);
        stamp("power-series-part");
        auto sub = univariate_compose(g, ar, fstar, timings);
        if (!sub.ok()) return sub;
        Poly diff = poly_rem(poly_sub(sub.value(), hhat), fstar);
        Poly xinv = poly_inv_mod(poly_rem(xa, fstar), fstar);
        Poly h = poly_add(hhat, poly_mul(xa, poly_rem(poly_mul(diff, xinv), fstar)));
        stamp("crt-combine");
        return Fallible<Poly>(std::move(h));
    }

    std::size_t m = 1;
    while (m * m * m * m < n) ++m;
    std::size_t d = (n + m - 1) / m;
    if (timings) {
        timings->m = m;
        timings->d = d;
        timings->mu = m;
    }

    Poly atil;
    try {
        atil = poly_inv_mod(ar, fm);
    } catch (const NotInvertibleModF&) {
        return Fallible<Poly>(NonGeneric{"gcd(a, f) is not constant"});
    }
    stamp("inverse");

    PowerTables tb_a = powers_AB(fm, ar, m);
    stamp("tables-direct");
    if (!tb_a.basis.generic)
        return Fallible<Poly>(NonGeneric{"relation basis of a is unbalanced"});
    PowerTables tb_i = powers_AB(fm, atil, m);
    stamp("tables-inverse");
    if (!tb_i.basis.generic)
        return Fallible<Poly>(NonGeneric{"relation basis of the inverse of a is unbalanced"});

    Modulus M = make_modulus(fm);
    std::size_t mlen = 2 * m - 1;
    Poly b1 = Poly::xpow(K, m - 1);
    Poly ad = powmod(atil, static_cast<u64>(d), fm);
    Poly b2 = mod_reduce(M, poly_shift(ad, m - 1));
    std::vector<Poly> rows1 = truncated_powers(fm, atil, b1, mlen, d, tb_i);
    std::vector<Poly> rows2 = truncated_powers(fm, atil, b2, mlen, d, tb_i);
    std::vector<Poly> rows(2 * d, Poly::zero(K));
    for (std::size_t k = 0; k < 2 * d; ++k) {
        std::size_t e = k + 1;
        if (e < d)
            rows[k] = rows1[e];
        else if (e < 2 * d)
            rows[k] = rows2[e - d];
        else
            rows[k] = slice(mod_mul(M, b2, ad), 0, mlen - 1);
    }
    stamp("truncated-powers");

    TruncatedPowerTable table = recover_shifted_truncations(rows, fm, m);
    table.base = atil;
    stamp("recover");

    auto mb = mm_basis(fm, ar, m, table);
    if (!mb.ok()) return Fallible<Poly>(mb.refusal());
    RelationBasis mm = mb.value();
    if (timings) timings->delta = mm.delta;
    if (!mm.generic)
        return Fallible<Poly>(NonGeneric{"x-relation basis is unbalanced"});
    stamp("mm-basis");

    BiPoly G0 = BiPoly::from_poly_in_y(g, 1);
    BiPoly r = reduce_by_mm(G0, mm);
    stamp("reduce");

    Poly h = bivariate_compose(r, ar, fm, tb_a);
    stamp("bivariate");
    return Fallible<Poly>(std::move(h));
}

Fallible<std::vector<FieldElement>> multipoint_eval_bivariate(const BiPoly& G,
                                                              const std::vector<FieldElement>& xs,
                                                              const std::vector<FieldElement>& ys) {
    const Field& K = G.F;
    std::size_t N = xs.size();
    if (N == 0 || ys.size() != N)
        throw BadParameters("multipoint_eval_bivariate: point lists empty or mismatched");
    std::unordered_set<u64> seen;
    for (FieldElement x : xs)
        if (!seen.insert(x.v).second)
            throw DuplicateAbscissa("multipoint_eval_bivariate: repeated x-coordinate");

    std::size_t d = G.y_support();
    std::size_t mu = 1;
    while (mu * mu * mu < d) ++mu;
    if (d == 0 || mu < 2 || mu > N || N < 2) {
        std::vector<FieldElement> vals(N, K.zero());
        for (std::size_t i = 0; i < N; ++i) vals[i] = eval_xy(G, xs[i], ys[i]);
        return Fallible<std::vector<FieldElement>>(std::move(vals));
    }

    // subproduct of the abscissae and the interpolant through the points
    std::vector<Poly> leaves;
    leaves.reserve(N);
    for (FieldElement x : xs) leaves.push_back(Poly(K, {K.neg(x), K.one()}));
    while (leaves.size() > 1) {
        std::vector<Poly> next;
        for (std::size_t i = 0; i + 1 < leaves.size(); i += 2)
            next.push_back(poly_mul(leaves[i], leaves[i + 1]));
        if (leaves.size() % 2) next.push_back(leaves.back());
        leaves = std::move(next);
    }
    Poly f = leaves[0];
    Poly aint = interpolate(K, xs, ys);

    PowerTables tb = powers_AB(f, aint, mu);
    if (!tb.basis.generic)
        return Fallible<std::vector<FieldElement>>(
            NonGeneric{"relation basis at the interpolated points is unbalanced"});
    Poly h = bivariate_compose(G, aint, f, tb);
    return Fallible<std::vector<FieldElement>>(multipoint_eval(h, xs));
}

}  // namespace relcomp
