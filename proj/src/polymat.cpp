#include "relcomp/polymat.hpp"

#include <algorithm>
#include <numeric>

#include "relcomp/errors.hpp"
#include "relcomp/ntt.hpp"

namespace relcomp {

namespace {
// Element budget for live transform data in pm_mul (keeps peak memory at a
// few hundred MB even for large operands).
constexpr std::size_t kTransformBudget = std::size_t{1} << 24;
constexpr std::size_t kBaseOrder = 32;  // iterative order-basis threshold
}  // namespace

PolyMatrix PolyMatrix::identity(Field f, std::size_t n) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(f);
    return m;
}

std::size_t PolyMatrix::max_len() const {
    std::size_t l = 0;
    for (const auto& p : e) l = std::max(l, p.len());
    return l;
}

PolyMatrix pm_transpose(const PolyMatrix& a) {
    PolyMatrix r(a.F, a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw DimMismatch("pm_add shapes differ");
    PolyMatrix r(a.F, a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = poly_add(a.e[i], b.e[i]);
    return r;
}

PolyMatrix pm_sub(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw DimMismatch("pm_sub shapes differ");
    PolyMatrix r(a.F, a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = poly_sub(a.e[i], b.e[i]);
    return r;
}

PolyMatrix pm_truncate(const PolyMatrix& a, std::size_t order) {
    PolyMatrix r(a.F, a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = trunc(a.e[i], order);
    return r;
}

PolyMatrix pm_shift_div_trunc(const PolyMatrix& a, std::size_t k, std::size_t order) {
    PolyMatrix r(a.F, a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        const Poly& p = a.e[i];
        if (p.len() <= k) continue;
        r.e[i] = trunc(slice(p, k, p.len() - 1 - k), order);
    }
    return r;
}

PolyMatrix pm_mul_const(const PolyMatrix& a, const Mat& c) {
    if (a.cols != c.rows) throw DimMismatch("pm_mul_const shapes differ");
    PolyMatrix r(a.F, a.rows, c.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < c.cols; ++j) {
            Poly acc = Poly::zero(a.F);
            for (std::size_t k = 0; k < a.cols; ++k)
                acc.add_scaled(c.at(k, j), a.at(i, k));
            r.at(i, j) = std::move(acc);
        }
    return r;
}

bool pm_eq(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return false;
    return true;
}

namespace {

PolyMatrix pm_mul_schoolbook(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.F, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            Poly acc = Poly::zero(a.F);
            for (std::size_t k = 0; k < a.cols; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc = poly_add(acc, poly_mul(a.at(i, k), b.at(k, j)));
            }
            r.at(i, j) = std::move(acc);
        }
    return r;
}

std::vector<FieldElement> forward_entry(const Poly& p, const NttPlan& plan) {
    std::vector<FieldElement> v(plan.n, p.field().zero());
    std::copy(p.coeffs().begin(), p.coeffs().end(), v.begin());
    ntt(v, plan, false);
    return v;
}

// Batched transform product: all entries transformed at one size, output rows
// processed in blocks that respect the element budget.
PolyMatrix pm_mul_batched(const PolyMatrix& a, const PolyMatrix& b, std::size_t plen) {
    const Field& F = a.F;
    std::size_t need = next_pow2(plen);
    const NttPlan& plan = get_ntt_plan(F, need);
    std::size_t r = a.rows, k = a.cols, c = b.cols;

    std::vector<std::vector<FieldElement>> bt(k * c);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t idx = 0; idx < k * c; ++idx) bt[idx] = forward_entry(b.e[idx], plan);

    PolyMatrix out(F, r, c);
    std::size_t block = std::max<std::size_t>(1, kTransformBudget / (std::max<std::size_t>(1, k) * need));
    std::vector<std::vector<FieldElement>> at(std::min(block, r) * k);
    for (std::size_t i0 = 0; i0 < r; i0 += block) {
        std::size_t ib = std::min(block, r - i0);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t idx = 0; idx < ib * k; ++idx)
            at[idx] = forward_entry(a.e[(i0 + idx / k) * k + idx % k], plan);
#pragma omp parallel for collapse(2) schedule(dynamic)
        for (std::size_t i = 0; i < ib; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                std::vector<FieldElement> acc(need, F.zero());
                for (std::size_t kk = 0; kk < k; ++kk) {
                    const auto& av = at[i * k + kk];
                    const auto& bv = bt[kk * c + j];
                    if (a.at(i0 + i, kk).is_zero() || b.at(kk, j).is_zero()) continue;
                    for (std::size_t t = 0; t < need; ++t)
                        acc[t] = F.add(acc[t], F.mul(av[t], bv[t]));
                }
                ntt(acc, plan, true);
                acc.resize(plen);
                out.at(i0 + i, j) = Poly(F, std::move(acc));
            }
    }
    return out;
}

// Unbalanced product: entries of b are much longer than entries of a. Chunk b
// in x-windows sized to a's degree so transforms stay small, skipping windows
// where a column of b has no support.
PolyMatrix pm_mul_chunked(const PolyMatrix& a, const PolyMatrix& b, std::size_t la, std::size_t lb) {
    const Field& F = a.F;
    std::size_t r = a.rows, k = a.cols, c = b.cols;
    std::size_t need = next_pow2(std::max<std::size_t>(2 * la, 2));
    std::size_t w = need - la + 1;  // chunk width: chunk product fits in need
    const NttPlan& plan = get_ntt_plan(F, need);

    std::vector<std::vector<FieldElement>> at(r * k);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t idx = 0; idx < r * k; ++idx) at[idx] = forward_entry(a.e[idx], plan);

    std::size_t plen = la + lb - 1;
    std::vector<std::vector<FieldElement>> acc(r * c, std::vector<FieldElement>(plen, F.zero()));
    std::vector<std::vector<FieldElement>> bt(k);
    std::size_t nch = (lb + w - 1) / w;
    for (std::size_t j = 0; j < c; ++j) {
        for (std::size_t ch = 0; ch < nch; ++ch) {
            std::size_t lo = ch * w, hi = std::min(lo + w, lb);
            bool active = false;
            for (std::size_t kk = 0; kk < k && !active; ++kk)
                for (std::size_t t = lo; t < std::min(hi, b.at(kk, j).len()); ++t)
                    if (b.at(kk, j).coeff(t).v) { active = true; break; }
            if (!active) continue;
#pragma omp parallel for schedule(dynamic)
            for (std::size_t kk = 0; kk < k; ++kk) {
                std::vector<FieldElement> v(need, F.zero());
                const Poly& p = b.at(kk, j);
                for (std::size_t t = lo; t < std::min(hi, p.len()); ++t) v[t - lo] = p.coeff(t);
                ntt(v, plan, false);
                bt[kk] = std::move(v);
            }
#pragma omp parallel for schedule(dynamic)
            for (std::size_t i = 0; i < r; ++i) {
                std::vector<FieldElement> s(need, F.zero());
                for (std::size_t kk = 0; kk < k; ++kk) {
                    if (a.at(i, kk).is_zero()) continue;
                    const auto& av = at[i * k + kk];
                    const auto& bv = bt[kk];
                    for (std::size_t t = 0; t < need; ++t) s[t] = F.add(s[t], F.mul(av[t], bv[t]));
                }
                ntt(s, plan, true);
                auto& dst = acc[i * c + j];
                std::size_t lim = std::min(need, plen - lo);
                for (std::size_t t = 0; t < lim; ++t) dst[lo + t] = F.add(dst[lo + t], s[t]);
            }
        }
    }
    PolyMatrix out(F, r, c);
    for (std::size_t idx = 0; idx < r * c; ++idx) out.e[idx] = Poly(F, std::move(acc[idx]));
    return out;
}

}  // namespace

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) {
    a.F.check_same(b.F);
    if (a.cols != b.rows) throw DimMismatch("pm_mul shapes differ");
    std::size_t la = a.max_len(), lb = b.max_len();
    if (la == 0 || lb == 0) return PolyMatrix(a.F, a.rows, b.cols);
    std::size_t plen = la + lb - 1;
    double ops = double(a.rows) * double(a.cols) * double(b.cols) * double(la) * double(lb);
    if (ops < 1e7 || !ntt_supported(a.F, next_pow2(std::min(plen, 2 * std::min(la, lb)))))
        return pm_mul_schoolbook(a, b);
    if (lb > 4 * la && a.rows * a.cols * next_pow2(2 * la) <= kTransformBudget)
        return pm_mul_chunked(a, b, la, lb);
    if (la > 4 * lb && b.rows * b.cols * next_pow2(2 * lb) <= kTransformBudget)
        return pm_transpose(pm_mul_chunked(pm_transpose(b), pm_transpose(a), lb, la));
    if (!ntt_supported(a.F, next_pow2(plen))) return pm_mul_schoolbook(a, b);
    std::size_t kc = a.cols * b.cols * next_pow2(plen);
    if (kc > kTransformBudget) {
        // cannot keep the right operand resident: fall back to per-entry
        // products (degree-aware, so still transform-based inside poly_mul)
        return pm_mul_schoolbook(a, b);
    }
    return pm_mul_batched(a, b, plen);
}

ColumnForms form_predicates(const PolyMatrix& a, const std::vector<long long>& shift) {
    std::vector<long long> s = shift;
    if (s.empty()) s.assign(a.rows, 0);
    if (s.size() != a.rows) throw DimMismatch("form_predicates: shift length != rows");
    ColumnForms f;
    f.cdeg.assign(a.cols, 0);
    f.zero_col.assign(a.cols, false);
    f.pivot_row.assign(a.cols, static_cast<std::size_t>(-1));
    f.leading = Mat(a.F, a.rows, a.cols);
    bool any_zero = false;
    for (std::size_t j = 0; j < a.cols; ++j) {
        bool nz = false;
        long long d = 0;
        for (std::size_t i = 0; i < a.rows; ++i) {
            const Poly& p = a.at(i, j);
            if (p.is_zero()) continue;
            long long sd = static_cast<long long>(p.deg()) + s[i];
            if (!nz || sd > d) d = sd;
            nz = true;
        }
        if (!nz) {
            f.zero_col[j] = true;
            any_zero = true;
            continue;
        }
        f.cdeg[j] = d;
        for (std::size_t i = 0; i < a.rows; ++i) {
            const Poly& p = a.at(i, j);
            if (p.is_zero()) continue;
            long long idx = d - s[i];
            if (idx >= 0 && idx < static_cast<long long>(p.len()))
                f.leading.at(i, j) = p.coeff(static_cast<std::size_t>(idx));
            if (static_cast<long long>(p.deg()) + s[i] == d) f.pivot_row[j] = i;
        }
    }
    f.column_reduced = !any_zero && a.rows >= a.cols && mat_rank(f.leading) == a.cols;
    f.weak_popov = false;
    f.popov = false;
    if (!any_zero && a.rows == a.cols) {
        bool wp = true;
        for (std::size_t j = 0; j < a.cols; ++j)
            if (f.pivot_row[j] != j) wp = false;
        f.weak_popov = wp;
        if (wp) {
            bool pv = true;
            for (std::size_t i = 0; i < a.rows && pv; ++i) {
                const Poly& d = a.at(i, i);
                if (d.is_zero() || d.lead().v != 1) { pv = false; break; }
                for (std::size_t j = 0; j < a.cols; ++j) {
                    if (j == i) continue;
                    const Poly& p = a.at(i, j);
                    if (!p.is_zero() && p.deg() >= d.deg()) { pv = false; break; }
                }
            }
            f.popov = pv;
        }
    }
    return f;
}

namespace {

struct EngineResult {
    PolyMatrix P;
    std::vector<std::size_t> mindeg;
};

// One-coefficient-at-a-time order basis. Invariant: P stays in shifted
// ordered weak Popov form (pivot of column j on row j), so mindeg[j] is the
// pivot degree of column j.
EngineResult mbasis(const PolyMatrix& Fm, std::size_t sigma, const std::vector<long long>& shift) {
    const Field& F = Fm.F;
    std::size_t r = Fm.rows, c = Fm.cols;
    EngineResult res{PolyMatrix::identity(F, r), std::vector<std::size_t>(r, 0)};
    PolyMatrix& P = res.P;
    PolyMatrix R = pm_truncate(Fm, sigma);  // running residual P^T F mod x^sigma
    std::vector<long long> rdeg = shift;
    std::vector<std::size_t> order(r);

    for (std::size_t ord = 0; ord < sigma; ++ord) {
        std::vector<FieldElement> delta(r * c, F.zero());
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t t = 0; t < c; ++t) delta[j * c + t] = R.at(j, t).coeff(ord);

        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return rdeg[x] < rdeg[y]; });

        std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, component)
        for (std::size_t j : order) {
            for (auto [t, ct] : pivots) {
                FieldElement lam = delta[j * c + ct];
                if (lam.v == 0) continue;
                lam = F.mul(lam, F.inv(delta[t * c + ct]));
                FieldElement nl = F.neg(lam);
                for (std::size_t tt = 0; tt < c; ++tt)
                    delta[j * c + tt] = F.sub(delta[j * c + tt], F.mul(lam, delta[t * c + tt]));
                for (std::size_t i = 0; i < r; ++i) P.at(i, j).add_scaled(nl, P.at(i, t));
                for (std::size_t tt = 0; tt < c; ++tt) R.at(j, tt).add_scaled(nl, R.at(t, tt));
            }
            for (std::size_t ct = 0; ct < c; ++ct)
                if (delta[j * c + ct].v != 0) {
                    pivots.emplace_back(j, ct);
                    break;
                }
        }
        for (auto [j, ct] : pivots) {
            (void)ct;
            for (std::size_t i = 0; i < r; ++i) P.at(i, j).shift_up_trunc(sigma + 1);
            for (std::size_t tt = 0; tt < c; ++tt) R.at(j, tt).shift_up_trunc(sigma);
            ++rdeg[j];
            ++res.mindeg[j];
        }
    }
    return res;
}

EngineResult pmbasis(const PolyMatrix& Fm, std::size_t sigma, const std::vector<long long>& shift) {
    if (sigma <= kBaseOrder) return mbasis(Fm, sigma, shift);
    std::size_t s1 = sigma / 2, s2 = sigma - s1;
    EngineResult e1 = pmbasis(pm_truncate(Fm, s1), s1, shift);
    PolyMatrix G = pm_shift_div_trunc(pm_mul(pm_transpose(e1.P), pm_truncate(Fm, sigma)), s1, s2);
    std::vector<long long> shift2(shift);
    for (std::size_t i = 0; i < shift2.size(); ++i)
        shift2[i] += static_cast<long long>(e1.mindeg[i]);
    EngineResult e2 = pmbasis(G, s2, shift2);
    EngineResult out{pm_mul(e1.P, e2.P), e1.mindeg};
    for (std::size_t i = 0; i < out.mindeg.size(); ++i) out.mindeg[i] += e2.mindeg[i];
    return out;
}

}  // namespace

ApproximantBasis approximant_basis(const PolyMatrix& Fm, std::size_t sigma,
                                   const std::vector<long long>& shift) {
    const Field& F = Fm.F;
    std::size_t r = Fm.rows;
    if (Fm.cols == 0 || r == 0) throw DimMismatch("approximant_basis: empty input");
    std::vector<long long> s = shift;
    if (s.empty()) s.assign(r, 0);
    if (s.size() != r) throw DimMismatch("approximant_basis: shift length != rows");
    if (sigma == 0)
        return ApproximantBasis{PolyMatrix::identity(F, r), std::vector<std::size_t>(r, 0)};

    PolyMatrix Ft = pm_truncate(Fm, sigma);
    EngineResult e1 = pmbasis(Ft, sigma, s);

    // Second pass with the negated pivot degrees: the canonical basis has
    // degree 0 columns under that shift and its leading matrix recombines the
    // second basis into shifted Popov form.
    std::vector<long long> t(r);
    for (std::size_t i = 0; i < r; ++i) t[i] = -static_cast<long long>(e1.mindeg[i]);
    EngineResult e2 = pmbasis(Ft, sigma, t);
    ColumnForms f2 = form_predicates(e2.P, t);
    for (std::size_t j = 0; j < r; ++j)
        if (f2.zero_col[j] || f2.cdeg[j] != 0)
            throw Error("approximant_basis: unexpected column degrees in normalization pass");
    Mat L = f2.leading;
    Mat Linv = mat_inverse(L);
    ApproximantBasis out{pm_mul_const(e2.P, Linv), e1.mindeg};

    ColumnForms fp = form_predicates(out.basis, s);
    if (!fp.popov) throw Error("approximant_basis: normalization did not reach Popov form");
    for (std::size_t j = 0; j < r; ++j) {
        const Poly& pj = out.basis.at(j, j);
        if (pj.is_zero() || pj.deg() != e1.mindeg[j])
            throw Error("approximant_basis: pivot degree mismatch after normalization");
    }
    return out;
}

MatrixGenerator matrix_generator(const std::vector<Mat>& H) {
    if (H.empty()) throw BadParameters("matrix_generator: empty sequence");
    const Field& F = H[0].F;
    std::size_t m = H[0].rows;
    for (const auto& h : H) {
        F.check_same(h.F);
        if (h.rows != m || h.cols != m)
            throw DimMismatch("matrix_generator: sequence terms must be square and same size");
    }
    std::size_t sigma = H.size();

    bool all_zero = true;
    for (const auto& h : H)
        for (auto v : h.a)
            if (v.v) { all_zero = false; }
    if (all_zero) return MatrixGenerator{PolyMatrix::identity(F, m), true, true};

    // Stacked problem: columns (r, q) with q = S r mod y^sigma; relations are
    // the columns whose pivot stays in the top block.
    PolyMatrix Fm(F, 2 * m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < m; ++t) {
            std::vector<FieldElement> cf(sigma, F.zero());
            for (std::size_t k = 0; k < sigma; ++k) cf[k] = H[k].at(t, i);
            Fm.at(i, t) = Poly(F, std::move(cf));
        }
    for (std::size_t i = 0; i < m; ++i) Fm.at(m + i, i) = Poly::constant(F, F.neg(F.one()));

    ApproximantBasis ab = approximant_basis(Fm, sigma);

    MatrixGenerator out;
    out.gen = PolyMatrix(F, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.gen.at(i, j) = ab.basis.at(i, j);
    out.degenerate = false;

    // Membership check: S * gen must have all column coefficients of order
    // cdeg(col) .. sigma-1 equal to zero.
    PolyMatrix S(F, m, m);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<FieldElement> cf(sigma, F.zero());
            for (std::size_t k = 0; k < sigma; ++k) cf[k] = H[k].at(t, i);
            S.at(t, i) = Poly(F, std::move(cf));
        }
    PolyMatrix prod = pm_mul(S, out.gen);
    ColumnForms fg = form_predicates(out.gen);
    out.verified = true;
    for (std::size_t j = 0; j < m && out.verified; ++j) {
        if (fg.zero_col[j]) { out.verified = false; break; }
        std::size_t lo = static_cast<std::size_t>(fg.cdeg[j]);
        for (std::size_t t = 0; t < m && out.verified; ++t) {
            const Poly& p = prod.at(t, j);
            for (std::size_t k = lo; k < std::min(sigma, p.len()); ++k)
                if (p.coeff(k).v) { out.verified = false; break; }
        }
    }
    return out;
}

namespace {

// Raw coefficient view used by the division loop.
struct RawVec {
    std::vector<std::vector<FieldElement>> a;  // per row
    std::vector<std::size_t> len;              // trimmed lengths

    void retrim(std::size_t i) {
        while (len[i] > 0 && a[i][len[i] - 1].v == 0) --len[i];
    }
};

}  // namespace

MatDivRem mat_divrem(const std::vector<Poly>& v, const PolyMatrix& A) {
    const Field& F = A.F;
    if (A.rows != A.cols) throw DimMismatch("mat_divrem: divisor must be square");
    std::size_t m = A.rows;
    if (v.size() != m) throw DimMismatch("mat_divrem: vector length != rows");
    for (const auto& p : v) F.check_same(p.field());
    ColumnForms f = form_predicates(A);
    if (!f.column_reduced) throw SingularBasis("mat_divrem: divisor not column reduced");

    // Reach weak Popov form (distinct pivot rows, diagonal after permuting),
    // tracking the transformation so quotients refer to the original divisor.
    PolyMatrix W = A;
    PolyMatrix U = PolyMatrix::identity(F, m);
    while (true) {
        ColumnForms fw = form_predicates(W);
        std::vector<long long> owner(m, -1);
        std::ptrdiff_t j1 = -1, j2 = -1;
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t pr = fw.pivot_row[j];
            if (owner[pr] < 0) { owner[pr] = static_cast<long long>(j); continue; }
            std::size_t o = static_cast<std::size_t>(owner[pr]);
            if (fw.cdeg[j] >= fw.cdeg[o]) { j1 = static_cast<std::ptrdiff_t>(j); j2 = static_cast<std::ptrdiff_t>(o); }
            else { j1 = static_cast<std::ptrdiff_t>(o); j2 = static_cast<std::ptrdiff_t>(j); owner[pr] = static_cast<long long>(j); }
            break;
        }
        if (j1 < 0) break;
        std::size_t pr = fw.pivot_row[static_cast<std::size_t>(j1)];
        FieldElement lam = F.div(W.at(pr, static_cast<std::size_t>(j1)).lead(),
                                 W.at(pr, static_cast<std::size_t>(j2)).lead());
        FieldElement nl = F.neg(lam);
        std::size_t sh = static_cast<std::size_t>(fw.cdeg[static_cast<std::size_t>(j1)] -
                                                  fw.cdeg[static_cast<std::size_t>(j2)]);
        for (std::size_t i = 0; i < m; ++i) {
            W.at(i, static_cast<std::size_t>(j1)).add_scaled(nl, W.at(i, static_cast<std::size_t>(j2)), sh);
            U.at(i, static_cast<std::size_t>(j1)).add_scaled(nl, U.at(i, static_cast<std::size_t>(j2)), sh);
        }
    }
    ColumnForms fw = form_predicates(W);
    std::vector<std::size_t> perm(m);  // perm[i] = column whose pivot row is i
    for (std::size_t j = 0; j < m; ++j) perm[fw.pivot_row[j]] = j;

    std::vector<std::size_t> pdeg(m);
    std::vector<FieldElement> pinv(m, F.zero());
    for (std::size_t i = 0; i < m; ++i) {
        const Poly& pe = W.at(i, perm[i]);
        pdeg[i] = pe.deg();
        pinv[i] = F.inv(pe.lead());
    }

    // Raw buffers for the descent.
    std::size_t cap = 1;
    for (const auto& p : v) cap = std::max(cap, p.len());
    for (std::size_t i = 0; i < m; ++i) cap = std::max(cap, W.max_len());
    cap += W.max_len();
    RawVec r;
    r.a.assign(m, std::vector<FieldElement>(cap, F.zero()));
    r.len.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        std::copy(v[i].coeffs().begin(), v[i].coeffs().end(), r.a[i].begin());
        r.len[i] = v[i].len();
    }
    std::vector<Poly> q(m, Poly::zero(F));  // quotient against W (permuted)

    std::size_t top = 0;
    for (std::size_t i = 0; i < m; ++i) top = std::max(top, r.len[i]);
    if (top > 0) {
        for (std::size_t lvl = top; lvl-- > 0;) {
            for (std::size_t i = m; i-- > 0;) {
                if (r.len[i] != lvl + 1 || lvl < pdeg[i]) continue;
                FieldElement lam = F.mul(r.a[i][lvl], pinv[i]);
                if (lam.v == 0) { r.retrim(i); continue; }
                std::size_t e = lvl - pdeg[i];
                FieldElement nl = F.neg(lam);
                for (std::size_t ii = 0; ii < m; ++ii) {
                    const Poly& col = W.at(ii, perm[i]);
                    if (col.is_zero()) continue;
                    const auto& cc = col.coeffs();
                    auto& dst = r.a[ii];
                    for (std::size_t tt = 0; tt < cc.size(); ++tt)
                        dst[tt + e] = F.add(dst[tt + e], F.mul(nl, cc[tt]));
                    if (r.len[ii] < cc.size() + e) r.len[ii] = cc.size() + e;
                    r.retrim(ii);
                }
                q[i].set_coeff(e, F.add(q[i].coeff(e), lam));
            }
        }
    }

    MatDivRem out;
    out.r.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<FieldElement> cf(r.a[i].begin(), r.a[i].begin() + static_cast<std::ptrdiff_t>(r.len[i]));
        out.r.emplace_back(F, std::move(cf));
        if (!out.r.back().is_zero() && out.r.back().deg() >= pdeg[i])
            throw Error("mat_divrem: remainder degree bound violated");
    }
    // v = W q + r with W = A U; quotient against A is U (perm-composed) q.
    std::vector<Poly> qa(m, Poly::zero(F));
    for (std::size_t i = 0; i < m; ++i) {
        Poly acc = Poly::zero(F);
        for (std::size_t k = 0; k < m; ++k) {
            const Poly& qq = q[k];  // quotient coefficient for column perm[k] of W
            if (qq.is_zero() || U.at(i, perm[k]).is_zero()) continue;
            acc = poly_add(acc, poly_mul(U.at(i, perm[k]), qq));
        }
        qa[i] = std::move(acc);
    }
    out.q = std::move(qa);
    return out;
}

std::vector<Poly> mat_rem(const std::vector<Poly>& v, const PolyMatrix& A) {
    return mat_divrem(v, A).r;
}

Poly pm_det(const PolyMatrix& a) {
    const Field& F = a.F;
    if (a.rows != a.cols) throw DimMismatch("pm_det: matrix must be square");
    std::size_t n = a.rows;
    if (n == 0) return Poly::one(F);
    if (n == 1) return a.at(0, 0);

    std::size_t dbound = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t cd = 0;
        bool nz = false;
        for (std::size_t i = 0; i < n; ++i)
            if (!a.at(i, j).is_zero()) { cd = std::max(cd, a.at(i, j).deg()); nz = true; }
        if (!nz) return Poly::zero(F);
        dbound += cd;
    }

    std::size_t npts = next_pow2(dbound + 1);
    if (ntt_supported(F, npts)) {
        const NttPlan& plan = get_ntt_plan(F, npts);
        std::vector<std::vector<FieldElement>> vals(n * n);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t idx = 0; idx < n * n; ++idx) vals[idx] = forward_entry(a.e[idx], plan);
        std::vector<FieldElement> dv(npts, F.zero());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t t = 0; t < npts; ++t) {
            Mat M(F, n, n);
            for (std::size_t idx = 0; idx < n * n; ++idx) M.a[idx] = vals[idx][t];
            dv[t] = mat_det(M);
        }
        ntt(dv, plan, true);
        return Poly(F, std::move(dv));
    }

    if (F.p() <= dbound) throw SmallFieldError("pm_det: field too small for evaluation points");
    std::vector<FieldElement> xs(dbound + 1), ys(dbound + 1);
    for (std::size_t t = 0; t <= dbound; ++t) {
        xs[t] = F.from_u64(t);
        Mat M(F, n, n);
        for (std::size_t idx = 0; idx < n * n; ++idx) M.a[idx] = a.e[idx].eval(xs[t]);
        ys[t] = mat_det(M);
    }
    return interpolate(F, xs, ys);
}

}  // namespace relcomp
