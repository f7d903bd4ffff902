#include "relcomp/relations.hpp"

#include <algorithm>

#include "relcomp/compose.hpp"

namespace relcomp {

namespace {

Poly make_monic(const Poly& f) {
    if (f.is_zero()) throw BadParameters("modulus is zero");
    return poly_scale(f, f.field().inv(f.lead()));
}

// Evaluate one N-kind column (entries in x, rows = y-powers) at y = a mod f.
Poly eval_column_at(const PolyMatrix& mat, std::size_t j, const Poly& ar, const Poly& fm) {
    Poly acc = Poly::zero(mat.F);
    for (std::size_t i = mat.rows; i-- > 0;)
        acc = poly_rem(poly_add(poly_mul(acc, ar), mat.at(i, j)), fm);
    return acc;
}

struct SolveResult {
    RelationBasis basis;
    std::vector<BiPoly> reduced;
};

// Structured solve behind nmu_basis and joint_reduce: order-sigma minimal
// approximants of the stacked column (a^0,...,a^(mu-1), -u_0,...,-u_(l-1), f)
// under the shift (0,...,0, n,...,n, 0). The first mu columns form the Popov
// basis of the relation module; the next l columns carry the reductions.
// Every output is certified below, so the caller may try a small order first
// and fall back to the unconditionally sufficient one.
SolveResult solve_relations_at_order(const Poly& f, const Poly& a, std::size_t mu,
                                     const std::vector<Poly>& us, std::size_t sigma) {
    const Field& F = f.field();
    F.check_same(a.field());
    if (f.is_zero() || f.deg() == 0) throw BadParameters("relations need deg f >= 1");
    std::size_t n = f.deg();
    if (mu == 0 || mu > n) throw BadParameters("relations need 1 <= mu <= deg f");
    Poly fm = make_monic(f);
    Poly ar = poly_rem(a, fm);

    std::size_t l = us.size();
    std::size_t rows = mu + l + 1;
    PolyMatrix Fm(F, rows, 1);
    Poly pw = Poly::one(F);
    for (std::size_t i = 0; i < mu; ++i) {
        Fm.at(i, 0) = pw;
        if (i + 1 < mu) pw = poly_rem(poly_mul(pw, ar), fm);
    }
    for (std::size_t t = 0; t < l; ++t) {
        F.check_same(us[t].field());
        Fm.at(mu + t, 0) = poly_neg(poly_rem(us[t], fm));
    }
    Fm.at(mu + l, 0) = fm;

    std::vector<long long> shift(rows, 0);
    for (std::size_t t = 0; t < l; ++t) shift[mu + t] = static_cast<long long>(n);

    ApproximantBasis ab = approximant_basis(Fm, sigma, shift);

    SolveResult out;
    RelationBasis& rb = out.basis;
    rb.kind = 'N';
    rb.mu = mu;
    rb.n = n;
    rb.mat = PolyMatrix(F, mu, mu);
    rb.cdeg.assign(mu, 0);
    for (std::size_t j = 0; j < mu; ++j) {
        for (std::size_t i = 0; i < mu; ++i) rb.mat.at(i, j) = ab.basis.at(i, j);
        rb.cdeg[j] = ab.mindeg[j];
        rb.delta = std::max(rb.delta, ab.mindeg[j]);
        // the u- and w-coordinates of a relation column must sit strictly
        // below the pivot; the shift makes nonzero u-parts impossible
        for (std::size_t t = 0; t < l; ++t)
            if (!ab.basis.at(mu + t, j).is_zero())
                throw Error("solve_relations: relation column leaks into the reduction block");
    }
    for (std::size_t t = 0; t < l; ++t) {
        std::size_t jc = mu + t;
        const Poly& diag = ab.basis.at(jc, jc);
        if (diag.is_zero() || diag.deg() != 0 || diag.lead().v != 1)
            throw Error("solve_relations: reduction column pivot is not the constant 1");
        for (std::size_t t2 = 0; t2 < l; ++t2)
            if (t2 != t && !ab.basis.at(mu + t2, jc).is_zero())
                throw Error("solve_relations: reduction columns mix");
        BiPoly u(F, std::max<std::size_t>(rb.delta, 1), mu);
        for (std::size_t i = 0; i < mu; ++i) {
            const Poly& p = ab.basis.at(i, jc);
            if (p.len() > u.xb)
                throw Error("solve_relations: reduction coordinate exceeds the degree window");
            for (std::size_t xi = 0; xi < p.len(); ++xi) u.at(xi, i) = p.coeff(xi);
        }
        out.reduced.push_back(std::move(u));
    }

    // Certification: Popov form, determinant associated to f, and the
    // relations really vanish at (x, a) modulo f.
    ColumnForms forms = form_predicates(rb.mat);
    if (!forms.popov) throw Error("solve_relations: basis is not in Popov form");
    std::size_t degsum = 0;
    for (std::size_t j = 0; j < mu; ++j) degsum += rb.cdeg[j];
    if (degsum != n) throw Error("solve_relations: column degrees do not sum to deg f");
    Poly det = pm_det(rb.mat);
    if (det.is_zero()) throw Error("solve_relations: basis is singular");
    if (make_monic(det) != fm) throw Error("solve_relations: determinant is not associated to f");
    for (std::size_t j = 0; j < mu; ++j)
        if (!eval_column_at(rb.mat, j, ar, fm).is_zero())
            throw Error("solve_relations: relation does not vanish at (x, a)");
    for (std::size_t t = 0; t < l; ++t) {
        // spot-check the reductions: U_t(x, a) = u_t mod f
        Poly got = eval_y(out.reduced[t], ar, fm);
        if (got != poly_rem(us[t], fm))
            throw Error("solve_relations: reduction does not match its target");
    }

    rb.generic = (rb.delta == (n + mu - 1) / mu);
    return out;
}

// Exactness of an order-sigma approximant column with coordinate degrees <= D
// needs sigma > n + D. Generic instances have D = ceil(n/mu), so the cheap
// order almost always certifies; anything it gets wrong throws in the
// certification above and is redone at the order that is sufficient for every
// input.
SolveResult solve_relations(const Poly& f, const Poly& a, std::size_t mu,
                            const std::vector<Poly>& us) {
    if (f.is_zero() || f.deg() == 0) throw BadParameters("relations need deg f >= 1");
    std::size_t n = f.deg();
    if (mu == 0 || mu > n) throw BadParameters("relations need 1 <= mu <= deg f");
    std::size_t dceil = (n + mu - 1) / mu;
    std::size_t safe = 2 * n + 1;
    std::size_t fast = n + dceil + 4;
    if (fast < safe) {
        try {
            return solve_relations_at_order(f, a, mu, us, fast);
        } catch (const Error&) {
            // certification rejected the optimistic order; fall through
        }
    }
    return solve_relations_at_order(f, a, mu, us, safe);
}

}  // namespace

RelationBasis nmu_basis(const Poly& f, const Poly& a, std::size_t mu) {
    return solve_relations(f, a, mu, {}).basis;
}

JointReduceResult joint_reduce(const Poly& f, const Poly& a, std::size_t mu,
                               const std::vector<Poly>& us) {
    if (us.empty()) throw BadParameters("joint_reduce: nothing to reduce");
    SolveResult s = solve_relations(f, a, mu, us);
    return JointReduceResult{std::move(s.basis), std::move(s.reduced)};
}

PowerTables powers_AB(const Poly& f, const Poly& a, std::size_t mu) {
    const Field& F = f.field();
    if (f.is_zero() || f.deg() == 0) throw BadParameters("powers_AB: deg f >= 1 required");
    if (mu == 0 || mu > f.deg()) throw BadParameters("powers_AB: need 1 <= mu <= deg f");
    Poly fm = make_monic(f);
    Poly ar = poly_rem(a, fm);

    PowerTables out;
    out.f = f;
    out.a = ar;
    out.mu = mu;
    BiPoly one(F, 1, std::max<std::size_t>(mu, 1));
    one.at(0, 0) = F.one();
    out.A.push_back(one);
    out.B.push_back(one);

    if (mu == 1) {
        out.basis = nmu_basis(f, a, 1);
        out.delta = out.basis.delta;
        return out;
    }

    Poly amu = powmod(ar, mu, fm);
    std::vector<Poly> usA;
    Poly cur = Poly::one(F);
    for (std::size_t j = 1; j < mu; ++j) {
        cur = poly_rem(poly_mul(cur, amu), fm);
        usA.push_back(cur);
    }
    Poly amu2 = powmod(amu, mu, fm);
    std::vector<Poly> usB;
    cur = Poly::one(F);
    for (std::size_t j = 1; j < mu; ++j) {
        cur = poly_rem(poly_mul(cur, amu2), fm);
        usB.push_back(cur);
    }

    JointReduceResult ja = joint_reduce(f, a, mu, usA);
    JointReduceResult jb = joint_reduce(f, a, mu, usB);
    if (!pm_eq(ja.basis.mat, jb.basis.mat))
        throw Error("powers_AB: the two batched solves disagree on the basis");
    out.basis = std::move(ja.basis);
    out.delta = out.basis.delta;
    for (auto& u : ja.reduced) out.A.push_back(std::move(u));
    for (auto& u : jb.reduced) out.B.push_back(std::move(u));
    return out;
}

TruncatedPowerTable recover_shifted_truncations(const std::vector<Poly>& rows, const Poly& f,
                                                std::size_t m) {
    const Field& F = f.field();
    if (m == 0) throw BadParameters("recover_shifted_truncations: m >= 1 required");
    if (f.is_zero() || f.deg() == 0)
        throw BadParameters("recover_shifted_truncations: deg f >= 1 required");
    Poly fm = make_monic(f);
    if (fm.coeff(0).v == 0)
        throw NeedsUnitConstantTerm("recover_shifted_truncations: f(0) must be a unit");
    FieldElement f0inv = F.inv(fm.coeff(0));

    TruncatedPowerTable table;
    table.m = m;
    table.f = fm;
    table.t.assign(m, std::vector<Poly>(rows.size(), Poly::zero(F)));

    for (std::size_t k = 0; k < rows.size(); ++k) {
        F.check_same(rows[k].field());
        // cur holds [x^i * w mod f]_0^(L-1); one descent step divides by x
        // after cancelling the constant term with a multiple of f.
        std::vector<FieldElement> cur(2 * m - 1, F.zero());
        for (std::size_t i = 0; i < std::min(rows[k].len(), 2 * m - 1); ++i)
            cur[i] = rows[k].coeff(i);
        std::size_t L = 2 * m - 1;
        for (std::size_t i = m; i-- > 0;) {
            std::vector<FieldElement> head(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(std::min(L, m)));
            table.t[i][k] = Poly(F, std::move(head));
            if (i == 0) break;
            FieldElement tcoef = F.mul(cur[0], f0inv);
            for (std::size_t s = 0; s + 1 < L; ++s)
                cur[s] = F.sub(cur[s + 1], F.mul(tcoef, fm.coeff(s + 1)));
            --L;
        }
    }
    return table;
}

TruncatedPowerTable truncated_table_direct(const Poly& f, const Poly& a, std::size_t m,
                                           std::size_t count) {
    const Field& F = f.field();
    if (m == 0 || count == 0) throw BadParameters("truncated_table_direct: empty table");
    Poly fm = make_monic(f);
    if (fm.deg() < 1) throw BadParameters("truncated_table_direct: deg f >= 1 required");
    Poly ainv = poly_inv_mod(poly_rem(a, fm), fm);

    TruncatedPowerTable table;
    table.m = m;
    table.f = fm;
    table.base = ainv;
    table.t.assign(m, std::vector<Poly>(count, Poly::zero(F)));
    Poly cur = ainv;
    for (std::size_t k = 0; k < count; ++k) {
        for (std::size_t i = 0; i < m; ++i)
            table.t[i][k] = slice(poly_rem(poly_shift(cur, i), fm), 0, m - 1);
        if (k + 1 < count) cur = poly_rem(poly_mul(cur, ainv), fm);
    }
    return table;
}

Fallible<RelationBasis> mm_basis(const Poly& f, const Poly& a, std::size_t m,
                                 const TruncatedPowerTable& table) {
    const Field& F = f.field();
    F.check_same(a.field());
    if (f.is_zero() || f.deg() == 0) throw BadParameters("mm_basis: deg f >= 1 required");
    Poly fm = make_monic(f);
    std::size_t n = fm.deg();
    if (fm.coeff(0).v == 0) throw NeedsUnitConstantTerm("mm_basis: f(0) must be a unit");
    if (m == 0 || m > n) throw BadParameters("mm_basis: need 1 <= m <= deg f");
    if (table.m != m || table.f != fm) throw StaleTables("mm_basis: table built for other input");
    std::size_t dceil = (n + m - 1) / m;
    std::size_t sigma = 2 * dceil;
    if (table.count() < sigma) throw BoundTooSmall("mm_basis: table too short for 2*ceil(n/m)");

    std::vector<Mat> H(sigma, Mat(F, m, m));
    for (std::size_t k = 0; k < sigma; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t r = 0; r < m; ++r) H[k].at(r, i) = table.t[i][k].coeff(r);

    MatrixGenerator mg = matrix_generator(H);
    if (mg.degenerate) return NonGeneric{"mm_basis: truncation table is identically zero"};
    if (!mg.verified) return NonGeneric{"mm_basis: generator failed the membership check"};

    RelationBasis rb;
    rb.kind = 'M';
    rb.mu = m;
    rb.n = n;
    rb.mat = std::move(mg.gen);
    ColumnForms forms = form_predicates(rb.mat);
    if (!forms.column_reduced)
        return NonGeneric{"mm_basis: generator is not column reduced"};
    std::size_t degsum = 0;
    rb.cdeg.assign(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        rb.cdeg[j] = static_cast<std::size_t>(forms.cdeg[j]);
        rb.delta = std::max(rb.delta, rb.cdeg[j]);
        degsum += rb.cdeg[j];
    }
    if (degsum != n)
        return NonGeneric{"mm_basis: column degrees do not sum to deg f"};
    if (rb.delta > dceil)
        return NonGeneric{"mm_basis: column degree exceeds ceil(n/m)"};

    // every column must vanish at (x, a) modulo f
    Poly ar = poly_rem(a, fm);
    for (std::size_t j = 0; j < m; ++j) {
        BiPoly col(F, m, rb.cdeg[j] + 1);
        for (std::size_t i = 0; i < m; ++i) {
            const Poly& p = rb.mat.at(i, j);
            for (std::size_t k = 0; k < p.len(); ++k) col.at(i, k) = p.coeff(k);
        }
        // the blocked evaluator keeps this certificate subquadratic; the plain
        // ladder only wins at toy sizes
        Poly val = (n <= 64) ? eval_y(col, ar, fm) : nz_bivariate_compose(col, ar, fm);
        if (!val.is_zero())
            return NonGeneric{"mm_basis: a generator column does not vanish at (x, a)"};
    }

    rb.generic = (rb.delta == dceil);
    return rb;
}

PolyMatrix mm_basis_oracle(const Poly& f, const Poly& a, std::size_t m, std::size_t ydeg_bound) {
    const Field& F = f.field();
    Poly fm = make_monic(f);
    std::size_t n = fm.deg();
    if (m == 0 || m > n) throw BadParameters("mm_basis_oracle: need 1 <= m <= deg f");
    Poly ar = poly_rem(a, fm);
    std::size_t D = ydeg_bound;
    std::size_t vars = m * (D + 1);

    // Constraint matrix: column (i + j*m) holds the coefficients of
    // x^i a^j mod f; kernel vectors are relations.
    Mat C(F, n, vars);
    Poly apow = Poly::one(F);
    for (std::size_t j = 0; j <= D; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            Poly v = poly_rem(poly_shift(apow, i), fm);
            for (std::size_t r = 0; r < v.len(); ++r) C.at(r, j * m + i) = v.coeff(r);
        }
        if (j < D) apow = poly_rem(poly_mul(apow, ar), fm);
    }
    Mat K = mat_kernel(C);  // vars x dim

    // Triangularize kernel vectors by their top position (y-major order) so
    // each surviving vector has a distinct leading (j, i) monomial.
    std::size_t dim = K.cols;
    std::vector<std::vector<FieldElement>> vecs(dim, std::vector<FieldElement>(vars, F.zero()));
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t r = 0; r < vars; ++r) vecs[c][r] = K.at(r, c);
    std::vector<long long> owner(vars, -1);
    for (std::size_t c = 0; c < dim; ++c) {
        auto& v = vecs[c];
        while (true) {
            std::ptrdiff_t top = -1;
            for (std::size_t r = vars; r-- > 0;)
                if (v[r].v) { top = static_cast<std::ptrdiff_t>(r); break; }
            if (top < 0) break;
            if (owner[static_cast<std::size_t>(top)] < 0) {
                FieldElement inv = F.inv(v[static_cast<std::size_t>(top)]);
                for (auto& x : v) x = F.mul(x, inv);
                owner[static_cast<std::size_t>(top)] = static_cast<long long>(c);
                break;
            }
            const auto& o = vecs[static_cast<std::size_t>(owner[static_cast<std::size_t>(top)])];
            FieldElement lam = v[static_cast<std::size_t>(top)];
            for (std::size_t r = 0; r < vars; ++r) v[r] = F.sub(v[r], F.mul(lam, o[r]));
        }
    }

    PolyMatrix out(F, m, m);
    for (std::size_t i = 0; i < m; ++i) {
        std::ptrdiff_t best = -1;
        for (std::size_t j = 0; j <= D && best < 0; ++j)
            if (owner[j * m + i] >= 0) best = owner[j * m + i];
        if (best < 0) throw Error("mm_basis_oracle: degree bound too small for a full basis");
        const auto& v = vecs[static_cast<std::size_t>(best)];
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<FieldElement> cf(D + 1, F.zero());
            for (std::size_t j = 0; j <= D; ++j) cf[j] = v[j * m + r];
            out.at(r, i) = Poly(F, std::move(cf));
        }
    }
    return out;
}

BiPoly reduce_by_mm(const BiPoly& g, const RelationBasis& basis) {
    if (basis.kind != 'M') throw BadParameters("reduce_by_mm: needs an M-kind basis");
    if (g.x_support() > basis.mu)
        throw BadParameters("reduce_by_mm: x-degree of g must be below the basis size");
    std::vector<Poly> v(basis.mu, Poly::zero(g.F));
    for (std::size_t i = 0; i < std::min(basis.mu, g.xb); ++i) v[i] = g.x_coeff(i);
    std::vector<Poly> r = mat_rem(v, basis.mat);
    std::size_t ylen = 1;
    for (const auto& p : r) ylen = std::max(ylen, p.len());
    BiPoly out(g.F, basis.mu, ylen);
    for (std::size_t i = 0; i < basis.mu; ++i)
        for (std::size_t k = 0; k < r[i].len(); ++k) out.at(i, k) = r[i].coeff(k);
    return out;
}

bool same_column_module(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.rows != B.rows || A.rows != A.cols || B.rows != B.cols) return false;
    auto contained = [](const PolyMatrix& X, const PolyMatrix& Y) {
        for (std::size_t j = 0; j < X.cols; ++j) {
            std::vector<Poly> col(X.rows, Poly::zero(X.F));
            for (std::size_t i = 0; i < X.rows; ++i) col[i] = X.at(i, j);
            for (const auto& p : mat_rem(col, Y))
                if (!p.is_zero()) return false;
        }
        return true;
    };
    return contained(A, B) && contained(B, A);
}

}  // namespace relcomp
