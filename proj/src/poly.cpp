#include "relcomp/poly.hpp"

#include <algorithm>
#include <sstream>

#include "relcomp/ntt.hpp"

namespace relcomp {

namespace {

constexpr std::size_t kSchoolbookThreshold = 32;

std::vector<FieldElement> mul_schoolbook(const Field& F, const std::vector<FieldElement>& a,
                                         const std::vector<FieldElement>& b) {
    std::vector<FieldElement> c(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    return c;
}

std::vector<FieldElement> mul_karatsuba(const Field& F, std::vector<FieldElement> a,
                                        std::vector<FieldElement> b) {
    if (std::min(a.size(), b.size()) < kSchoolbookThreshold) return mul_schoolbook(F, a, b);
    std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    auto split = [&](const std::vector<FieldElement>& v) {
        std::vector<FieldElement> lo(v.begin(), v.begin() + std::min(h, v.size()));
        std::vector<FieldElement> hi(v.begin() + std::min(h, v.size()), v.end());
        if (lo.empty()) lo.push_back(F.zero());
        if (hi.empty()) hi.push_back(F.zero());
        return std::make_pair(lo, hi);
    };
    auto [a0, a1] = split(a);
    auto [b0, b1] = split(b);
    auto z0 = mul_karatsuba(F, a0, b0);
    auto z2 = mul_karatsuba(F, a1, b1);
    auto addv = [&](std::vector<FieldElement> x, const std::vector<FieldElement>& y) {
        if (x.size() < y.size()) x.resize(y.size(), F.zero());
        for (std::size_t i = 0; i < y.size(); ++i) x[i] = F.add(x[i], y[i]);
        return x;
    };
    auto z1 = mul_karatsuba(F, addv(a0, a1), addv(b0, b1));
    // z1 -= z0 + z2
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);
    std::vector<FieldElement> c(a.size() + b.size() - 1, F.zero());
    auto acc = [&](const std::vector<FieldElement>& v, std::size_t off) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (off + i < c.size()) c[off + i] = F.add(c[off + i], v[i]);
    };
    acc(z0, 0);
    acc(z1, h);
    acc(z2, 2 * h);
    return c;
}

// Newton division memo: hot loops reduce by one fixed modulus thousands of
// times, and recomputing the series inverse of the reversed divisor on every
// call multiplies the transform count several-fold. One entry per thread is
// enough; a different divisor simply replaces it.
struct RevInvCache {
    u64 prime = 0;
    std::vector<FieldElement> divisor;
    std::optional<Poly> inv;
    std::size_t order = 0;
};

Poly rev_inverse_for(const Poly& b, std::size_t qlen) {
    thread_local RevInvCache cache;
    if (cache.prime != b.field().p() || cache.divisor != b.coeffs()) {
        cache.prime = b.field().p();
        cache.divisor = b.coeffs();
        cache.inv.reset();
        cache.order = 0;
    }
    if (!cache.inv || cache.order < qlen) {
        std::size_t order = next_pow2(qlen);
        cache.inv = series_inv(reverse(b, b.deg()), order);
        cache.order = order;
    }
    return trunc(*cache.inv, qlen);
}

}  // namespace

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].v == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i].v != 1) os << c_[i].v;
        if (i > 0) {
            if (c_[i].v != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_add(const Poly& a, const Poly& b) {
    a.field().check_same(b.field());
    const Field& F = a.field();
    std::vector<FieldElement> c(std::max(a.len(), b.len()), F.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    a.field().check_same(b.field());
    const Field& F = a.field();
    std::vector<FieldElement> c(std::max(a.len(), b.len()), F.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(c));
}

Poly poly_neg(const Poly& a) {
    const Field& F = a.field();
    std::vector<FieldElement> c(a.coeffs());
    for (auto& x : c) x = F.neg(x);
    return Poly(F, std::move(c));
}

Poly poly_scale(const Poly& a, FieldElement s) {
    const Field& F = a.field();
    std::vector<FieldElement> c(a.coeffs());
    for (auto& x : c) x = F.mul(x, s);
    return Poly(F, std::move(c));
}

Poly poly_shift(const Poly& a, std::size_t k) {
    if (a.is_zero()) return a;
    const Field& F = a.field();
    std::vector<FieldElement> c(a.len() + k, F.zero());
    for (std::size_t i = 0; i < a.len(); ++i) c[i + k] = a.coeff(i);
    return Poly(F, std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    a.field().check_same(b.field());
    const Field& F = a.field();
    if (a.is_zero() || b.is_zero()) return Poly::zero(F);
    if (std::min(a.len(), b.len()) < kSchoolbookThreshold)
        return Poly(F, mul_schoolbook(F, a.coeffs(), b.coeffs()));
    std::size_t need = next_pow2(a.len() + b.len() - 1);
    if (!ntt_supported(F, need)) return Poly(F, mul_karatsuba(F, a.coeffs(), b.coeffs()));
    const NttPlan& plan = get_ntt_plan(F, need);
    std::vector<FieldElement> fa(a.coeffs()), fb(b.coeffs());
    fa.resize(need, F.zero());
    fb.resize(need, F.zero());
    ntt(fa, plan, false);
    ntt(fb, plan, false);
    for (std::size_t i = 0; i < need; ++i) fa[i] = F.mul(fa[i], fb[i]);
    ntt(fa, plan, true);
    fa.resize(a.len() + b.len() - 1);
    return Poly(F, std::move(fa));
}

Poly poly_mul_trunc(const Poly& a, const Poly& b, std::size_t order) {
    if (order == 0 || a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    // Full product is fine: NTT sizes round up anyway; trim afterwards.
    Poly p = poly_mul(trunc(a, order), trunc(b, order));
    return trunc(p, order);
}

Poly trunc(const Poly& u, std::size_t order) {
    if (u.len() <= order) return u;
    std::vector<FieldElement> c(u.coeffs().begin(), u.coeffs().begin() + order);
    return Poly(u.field(), std::move(c));
}

Poly slice(const Poly& u, std::size_t lo, std::size_t k) {
    const Field& F = u.field();
    std::vector<FieldElement> c(k + 1, F.zero());
    for (std::size_t i = 0; i <= k; ++i) c[i] = u.coeff(lo + i);
    return Poly(F, std::move(c));
}

Poly reverse(const Poly& u, std::size_t at) {
    const Field& F = u.field();
    if (u.is_zero()) return u;
    if (u.deg() > at) throw DegreeOverflow("reverse: degree exceeds reversal index");
    std::vector<FieldElement> c(at + 1, F.zero());
    for (std::size_t i = 0; i < u.len(); ++i) c[at - i] = u.coeff(i);
    return Poly(F, std::move(c));
}

DivRem poly_divrem(const Poly& a, const Poly& b) {
    a.field().check_same(b.field());
    const Field& F = a.field();
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero() || a.len() < b.len()) return {Poly::zero(F), a};
    const std::size_t qlen = a.len() - b.len() + 1;
    if (b.len() < kSchoolbookThreshold || qlen < kSchoolbookThreshold) {
        // classical long division
        std::vector<FieldElement> r(a.coeffs());
        std::vector<FieldElement> q(qlen, F.zero());
        FieldElement ilead = F.inv(b.lead());
        for (std::size_t k = qlen; k-- > 0;) {
            FieldElement c = F.mul(r[k + b.len() - 1], ilead);
            q[k] = c;
            if (F.is_zero(c)) continue;
            for (std::size_t j = 0; j < b.len(); ++j)
                r[k + j] = F.sub(r[k + j], F.mul(c, b.coeff(j)));
        }
        r.resize(b.len() - 1);
        return {Poly(F, std::move(q)), Poly(F, std::move(r))};
    }
    // Newton: q = rev(a) * rev(b)^{-1} mod x^qlen, then reverse back.
    Poly ra = reverse(a, a.deg());
    Poly rq = poly_mul_trunc(ra, rev_inverse_for(b, qlen), qlen);
    // rq has length <= qlen; quotient = reverse at qlen-1
    std::vector<FieldElement> qc(qlen, F.zero());
    for (std::size_t i = 0; i < rq.len(); ++i) qc[qlen - 1 - i] = rq.coeff(i);
    Poly q(F, std::move(qc));
    Poly r = poly_sub(a, poly_mul(q, b));
    if (!r.is_zero() && r.len() >= b.len()) throw Error("internal: divrem remainder too large");
    return {std::move(q), std::move(r)};
}

Poly poly_rem(const Poly& a, const Poly& b) { return poly_divrem(a, b).r; }

Poly series_inv(const Poly& u, std::size_t order) {
    const Field& F = u.field();
    if (u.is_zero() || F.is_zero(u.coeff(0)))
        throw NeedsUnitConstantTerm("series inverse of a non-unit");
    if (order == 0) return Poly::zero(F);
    Poly w = Poly::constant(F, F.inv(u.coeff(0)));
    std::size_t have = 1;
    while (have < order) {
        have = std::min(2 * have, order);
        // w <- w*(2 - u*w) mod x^have
        Poly uw = poly_mul_trunc(trunc(u, have), w, have);
        Poly two_minus = poly_sub(Poly::constant(F, F.from_u64(2)), uw);
        w = poly_mul_trunc(w, two_minus, have);
    }
    return w;
}

Poly powmod(const Poly& g, u64 e, const Poly& f) {
    g.field().check_same(f.field());
    const Field& F = g.field();
    if (f.is_zero()) throw DivisionByZero("powmod modulus is zero");
    Poly base = poly_rem(g, f);
    Poly r = poly_rem(Poly::one(F), f);
    while (e) {
        if (e & 1) r = poly_rem(poly_mul(r, base), f);
        base = poly_rem(poly_mul(base, base), f);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b) {
    const Field& F = a.field();
    while (!b.is_zero()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return poly_scale(a, F.inv(a.lead()));
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
    const Field& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1 = Poly::zero(F);
    Poly t0 = Poly::zero(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        DivRem qr = poly_divrem(r0, r1);
        Poly r2 = qr.r;
        Poly s2 = poly_sub(s0, poly_mul(qr.q, s1));
        Poly t2 = poly_sub(t0, poly_mul(qr.q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        FieldElement il = F.inv(r0.lead());
        r0 = poly_scale(r0, il);
        s0 = poly_scale(s0, il);
        t0 = poly_scale(t0, il);
    }
    return {r0, s0, t0};
}

Poly poly_inv_mod(const Poly& a, const Poly& f) {
    if (f.is_zero()) throw DivisionByZero("inverse modulo zero");
    XgcdResult e = poly_xgcd(poly_rem(a, f), f);
    if (e.g.is_zero() || e.g.len() != 1) {
        std::vector<u64> raw;
        for (auto c : e.g.coeffs()) raw.push_back(c.v);
        throw NotInvertibleModF("element not invertible modulo f", std::move(raw));
    }
    return poly_rem(e.s, f);
}

Poly derivative(const Poly& a) {
    const Field& F = a.field();
    if (a.len() <= 1) return Poly::zero(F);
    std::vector<FieldElement> c(a.len() - 1, F.zero());
    for (std::size_t i = 1; i < a.len(); ++i) c[i - 1] = F.mul(a.coeff(i), F.from_u64(i));
    return Poly(F, std::move(c));
}

namespace {

// Subproduct tree: level 0 holds (x - x_i), each next level pairwise products.
std::vector<std::vector<Poly>> subproduct_tree(const Field& F,
                                               const std::vector<FieldElement>& xs) {
    std::vector<std::vector<Poly>> tree;
    std::vector<Poly> level;
    level.reserve(xs.size());
    for (auto x : xs) level.push_back(Poly(F, {F.neg(x), F.one()}));
    tree.push_back(level);
    while (tree.back().size() > 1) {
        const auto& prev = tree.back();
        std::vector<Poly> next;
        next.reserve((prev.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < prev.size(); i += 2) next.push_back(poly_mul(prev[i], prev[i + 1]));
        if (prev.size() & 1) next.push_back(prev.back());
        tree.push_back(std::move(next));
    }
    return tree;
}

void eval_down(const std::vector<std::vector<Poly>>& tree, std::size_t level, std::size_t idx,
               const Poly& g, std::vector<FieldElement>& out, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
        // leaf: remainder mod (x - x_i) is g(x_i), g already reduced to degree 0
        out[lo] = g.coeff(0);
        return;
    }
    // children of node idx at level: 2*idx, 2*idx+1 at level-1
    std::size_t mid_count = std::size_t(1) << (level - 1);
    std::size_t mid = std::min(lo + mid_count, hi);
    const Poly& lmod = tree[level - 1][2 * idx];
    eval_down(tree, level - 1, 2 * idx, poly_rem(g, lmod), out, lo, mid);
    if (mid < hi) {
        const Poly& rmod = tree[level - 1][2 * idx + 1];
        eval_down(tree, level - 1, 2 * idx + 1, poly_rem(g, rmod), out, mid, hi);
    }
}

}  // namespace

std::vector<FieldElement> multipoint_eval(const Poly& a, const std::vector<FieldElement>& xs) {
    const Field& F = a.field();
    std::vector<FieldElement> out(xs.size(), F.zero());
    if (xs.empty()) return out;
    if (xs.size() <= 16 || a.len() <= 16) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = a.eval(xs[i]);
        return out;
    }
    auto tree = subproduct_tree(F, xs);
    eval_down(tree, tree.size() - 1, 0, poly_rem(a, tree.back()[0]), out, 0, xs.size());
    return out;
}

namespace {

// Combine Lagrange pieces up the tree: value c_i at leaf i becomes
// sum_i c_i * prod_{j != i} (x - x_j).
Poly combine_up(const std::vector<std::vector<Poly>>& tree, std::size_t level, std::size_t idx,
                const std::vector<FieldElement>& cs, std::size_t lo, std::size_t hi) {
    const Field& F = tree[0][0].field();
    if (hi - lo == 1) return Poly::constant(F, cs[lo]);
    std::size_t mid_count = std::size_t(1) << (level - 1);
    std::size_t mid = std::min(lo + mid_count, hi);
    Poly left = combine_up(tree, level - 1, 2 * idx, cs, lo, mid);
    if (mid >= hi) return left;
    Poly right = combine_up(tree, level - 1, 2 * idx + 1, cs, mid, hi);
    return poly_add(poly_mul(left, tree[level - 1][2 * idx + 1]),
                    poly_mul(right, tree[level - 1][2 * idx]));
}

}  // namespace

Poly interpolate(const Field& F, const std::vector<FieldElement>& xs,
                 const std::vector<FieldElement>& ys) {
    if (xs.size() != ys.size()) throw DimMismatch("interpolate: xs/ys size");
    if (xs.empty()) return Poly::zero(F);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) throw DuplicateAbscissa("interpolate: repeated x value");
    if (xs.size() <= 16) {
        // plain Lagrange
        Poly acc = Poly::zero(F);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            Poly num = Poly::one(F);
            FieldElement den = F.one();
            for (std::size_t j = 0; j < xs.size(); ++j) {
                if (i == j) continue;
                num = poly_mul(num, Poly(F, {F.neg(xs[j]), F.one()}));
                den = F.mul(den, F.sub(xs[i], xs[j]));
            }
            acc = poly_add(acc, poly_scale(num, F.mul(ys[i], F.inv(den))));
        }
        return acc;
    }
    auto tree = subproduct_tree(F, xs);
    Poly m = tree.back()[0];
    Poly dm = derivative(m);
    std::vector<FieldElement> denom = multipoint_eval(dm, xs);
    std::vector<FieldElement> cs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) cs[i] = F.mul(ys[i], F.inv(denom[i]));
    return combine_up(tree, tree.size() - 1, 0, cs, 0, xs.size());
}

}  // namespace relcomp
