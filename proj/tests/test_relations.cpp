#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relcomp/bench.hpp"
#include "relcomp/reference.hpp"
#include "relcomp/relations.hpp"

using namespace relcomp;

namespace {

// substitute y = a into a column of a kind-N basis and reduce mod f
Poly eval_n_column(const PolyMatrix& mat, std::size_t j, const Poly& a, const Poly& f) {
    Poly acc = Poly::zero(f.field());
    for (std::size_t i = mat.rows; i-- > 0;)
        acc = poly_rem(poly_add(poly_mul(acc, a), mat.at(i, j)), f);
    return acc;
}

// substitute x = a (coordinate i carries x^i) into a column of a kind-M basis,
// reducing the result modulo the characteristic-free route: the entries are
// polynomials in y, evaluated at y and multiplied by a^i, all mod f with y = a
Poly eval_m_column(const PolyMatrix& mat, std::size_t j, const Poly& a, const Poly& f) {
    const Field& F = f.field();
    Poly acc = Poly::zero(F);
    Poly xi = Poly::one(F);
    for (std::size_t i = 0; i < mat.rows; ++i) {
        // entry is q(y); q(a) mod f times x^i
        Poly q = mat.at(i, j);
        Poly qa = Poly::zero(F);
        for (std::size_t t = q.len(); t-- > 0;)
            qa = poly_rem(poly_add(poly_mul(qa, a), Poly::constant(F, q.coeff(t))), f);
        acc = poly_rem(poly_add(acc, poly_mul(qa, xi)), f);
        xi = poly_rem(poly_mul(xi, Poly::x(F)), f);
    }
    return acc;
}

}  // namespace

TEST_CASE("frozen 2x2 relation bases over GF(7)") {
    Field F(7);
    Poly f = Poly::from_u64(F, {1, 0, 1});  // x^2 + 1
    Poly a = Poly::x(F);

    RelationBasis nb = nmu_basis(f, a, 2);
    CHECK(nb.kind == 'N');
    CHECK(nb.delta == 1);
    CHECK(nb.generic);
    CHECK(nb.cdeg == std::vector<std::size_t>{1, 1});
    CHECK(nb.mat.at(0, 0) == Poly::x(F));
    CHECK(nb.mat.at(1, 0) == Poly::from_u64(F, {6}));
    CHECK(nb.mat.at(0, 1) == Poly::one(F));
    CHECK(nb.mat.at(1, 1) == Poly::x(F));
    Poly det = pm_det(nb.mat);
    CHECK(poly_rem(det, f).is_zero());
    CHECK(det.deg() == 2);

    TruncatedPowerTable table = truncated_table_direct(f, a, 2, 4);
    auto mb = mm_basis(f, a, 2, table);
    REQUIRE(mb.ok());
    const RelationBasis& rb = mb.value();
    CHECK(rb.kind == 'M');
    CHECK(rb.delta == 1);
    CHECK(rb.generic);
    // columns (y, 6) = y - x and (1, y) = 1 + x y in the weak-Popov normalization
    CHECK(rb.mat.at(0, 0) == Poly::x(F));
    CHECK(rb.mat.at(1, 0) == Poly::from_u64(F, {6}));
    CHECK(rb.mat.at(0, 1) == Poly::one(F));
    CHECK(rb.mat.at(1, 1) == Poly::x(F));
    Poly dm = pm_det(rb.mat);
    // det ~ y^2 + 1, the characteristic polynomial of x mod x^2+1
    Poly dmm = poly_scale(dm, F.inv(dm.lead()));
    CHECK(dmm == Poly::from_u64(F, {1, 0, 1}));

    // reduce y^2 modulo the basis: residue is the constant 6
    BiPoly g = BiPoly::from_poly_in_y(Poly::xpow(F, 2), 1);
    BiPoly r = reduce_by_mm(g, rb);
    BiPoly want(F, 1, 1);
    want.at(0, 0) = F.from_u64(6);
    CHECK(r.value_eq(want));
}

TEST_CASE("nmu basis columns vanish and det matches f on random instances") {
    Field F(998244353);
    SplitMix64 rng(101);
    for (auto [n, mu] : {std::pair<int, int>{6, 2}, {12, 3}, {16, 4}, {24, 5}}) {
        Poly f = random_monic(rng, F, n);
        Poly a = random_poly(rng, F, n);
        RelationBasis rb = nmu_basis(f, a, mu);
        CHECK(rb.mat.cols == (std::size_t)mu);
        std::size_t dsum = 0;
        for (std::size_t j = 0; j < rb.mat.cols; ++j) {
            CHECK(eval_n_column(rb.mat, j, a, f).is_zero());
            dsum += rb.cdeg[j];
        }
        CHECK(dsum == (std::size_t)n);
        Poly det = pm_det(rb.mat);
        Poly detm = poly_scale(det, F.inv(det.lead()));
        CHECK(detm == poly_scale(f, F.inv(f.lead())));
        std::size_t dceil = (n + mu - 1) / mu;
        CHECK(rb.delta >= dceil);
        if (rb.generic) CHECK(rb.delta == dceil);
    }
}

TEST_CASE("joint reduce returns low-degree representatives") {
    Field F(998244353);
    SplitMix64 rng(7);
    std::size_t n = 18, mu = 3;
    Poly f = random_monic(rng, F, n);
    Poly a = random_poly(rng, F, n);
    std::vector<Poly> us;
    for (int i = 0; i < 3; ++i) us.push_back(random_poly(rng, F, n));
    JointReduceResult jr = joint_reduce(f, a, mu, us);
    REQUIRE(jr.reduced.size() == 3);
    for (std::size_t t = 0; t < 3; ++t) {
        const BiPoly& U = jr.reduced[t];
        CHECK(U.y_support() <= mu);
        CHECK(U.x_support() <= jr.basis.delta);
        CHECK(eval_y(U, a, f) == poly_rem(us[t], f));
    }
}

TEST_CASE("power tables represent the power ladder") {
    Field F7(7);
    Poly f7 = Poly::from_u64(F7, {1, 0, 1});
    PowerTables t7 = powers_AB(f7, Poly::x(F7), 2);
    CHECK(t7.delta == 1);
    CHECK(t7.A[0].value_eq(BiPoly::from_poly_in_x(Poly::one(F7))));
    // a^2 = x^2 = -1 = 6 and a^4 = 1 mod x^2+1
    CHECK(t7.A[1].value_eq(BiPoly::from_poly_in_x(Poly::from_u64(F7, {6}))));
    CHECK(t7.B[1].value_eq(BiPoly::from_poly_in_x(Poly::one(F7))));

    Field F(998244353);
    SplitMix64 rng(55);
    for (auto [n, mu] : {std::pair<int, int>{12, 2}, {18, 3}, {32, 4}}) {
        Poly f = random_monic(rng, F, n);
        Poly a = random_poly(rng, F, n);
        PowerTables tb = powers_AB(f, a, mu);
        for (std::size_t j = 0; j < (std::size_t)mu; ++j) {
            CHECK(tb.A[j].y_support() <= (std::size_t)mu);
            CHECK(eval_y(tb.A[j], a, f) == powmod(a, j * mu, f));
            CHECK(eval_y(tb.B[j], a, f) == powmod(a, j * mu * mu, f));
        }
    }
}

TEST_CASE("truncated table recovery from shifted rows") {
    Field F(998244353);
    SplitMix64 rng(202);
    for (auto [n, m] : {std::pair<int, int>{8, 2}, {14, 3}, {25, 5}}) {
        Poly f = random_monic(rng, F, n);
        if (f.coeff(0).v == 0) f.set_coeff(0, F.one());
        Poly a = random_poly(rng, F, n);
        if (poly_gcd(a, f).deg() != 0) continue;
        std::size_t count = 2 * ((n + m - 1) / m);
        TruncatedPowerTable direct = truncated_table_direct(f, a, m, count);
        // rows[k] = [x^(m-1) w_k mod f]_0^(2m-2) with w_k = base^(k+1)
        std::vector<Poly> rows(count);
        Poly base = direct.base;
        Poly w = base;
        Poly xm1 = Poly::xpow(F, m - 1);
        for (std::size_t k = 0; k < count; ++k) {
            rows[k] = slice(poly_rem(poly_mul(xm1, w), f), 0, 2 * m - 2);
            w = poly_rem(poly_mul(w, base), f);
        }
        TruncatedPowerTable rec = recover_shifted_truncations(rows, f, m);
        REQUIRE(rec.t.size() == direct.t.size());
        for (std::size_t i = 0; i < rec.t.size(); ++i) {
            REQUIRE(rec.t[i].size() >= direct.t[i].size());
            for (std::size_t k = 0; k < direct.t[i].size(); ++k)
                CHECK(rec.t[i][k] == direct.t[i][k]);
        }
    }
}

TEST_CASE("mm basis matches the dense-kernel oracle as a module") {
    Field F(998244353);
    SplitMix64 rng(303);
    for (auto [n, m] : {std::pair<int, int>{8, 2}, {12, 3}, {20, 4}, {24, 6}}) {
        Poly f = random_monic(rng, F, n);
        if (f.coeff(0).v == 0) f.set_coeff(0, F.one());
        Poly a = random_poly(rng, F, n);
        if (poly_gcd(a, f).deg() != 0) continue;
        std::size_t dceil = (n + m - 1) / m;
        TruncatedPowerTable table = truncated_table_direct(f, a, m, 2 * dceil);
        auto mb = mm_basis(f, a, m, table);
        if (!mb.ok()) continue;  // genuinely non-generic instance
        const RelationBasis& rb = mb.value();
        std::size_t dsum = 0;
        for (std::size_t j = 0; j < rb.mat.cols; ++j) {
            CHECK(eval_m_column(rb.mat, j, a, f).is_zero());
            dsum += rb.cdeg[j];
        }
        CHECK(dsum == (std::size_t)n);
        PolyMatrix oracle = mm_basis_oracle(f, a, m, rb.delta + 1);
        CHECK(same_column_module(rb.mat, oracle));
    }
}

TEST_CASE("mm basis refuses stale or insufficient tables") {
    Field F(998244353);
    SplitMix64 rng(404);
    Poly f = random_monic(rng, F, 12);
    if (f.coeff(0).v == 0) f.set_coeff(0, F.one());
    Poly a = random_poly(rng, F, 12);
    TruncatedPowerTable table = truncated_table_direct(f, a, 3, 8);
    CHECK_THROWS_AS((void)mm_basis(f, a, 4, table), StaleTables);
    TruncatedPowerTable small = truncated_table_direct(f, a, 3, 3);
    CHECK_THROWS_AS((void)mm_basis(f, a, 3, small), BoundTooSmall);
    Poly f0 = poly_mul(Poly::x(F), random_monic(rng, F, 11));
    TruncatedPowerTable t2 = truncated_table_direct(f0, poly_add(a, Poly::one(F)), 3, 8);
    CHECK_THROWS_AS((void)mm_basis(f0, poly_add(a, Poly::one(F)), 3, t2), NeedsUnitConstantTerm);
}

TEST_CASE("reduce_by_mm reduces degrees and preserves the residue") {
    Field F(998244353);
    SplitMix64 rng(505);
    std::size_t n = 20, m = 4;
    Poly f = random_monic(rng, F, n);
    if (f.coeff(0).v == 0) f.set_coeff(0, F.one());
    Poly a = random_poly(rng, F, n);
    REQUIRE(poly_gcd(a, f).deg() == 0);
    std::size_t dceil = (n + m - 1) / m;
    TruncatedPowerTable table = truncated_table_direct(f, a, m, 2 * dceil);
    auto mb = mm_basis(f, a, m, table);
    REQUIRE(mb.ok());
    const RelationBasis& rb = mb.value();
    for (int it = 0; it < 5; ++it) {
        BiPoly g = random_bipoly(rng, F, m, 3 * dceil);
        BiPoly r = reduce_by_mm(g, rb);
        CHECK(r.x_support() <= m);
        CHECK(r.y_support() <= rb.delta);
        CHECK(eval_y(r, a, f) == eval_y(g, a, f));
    }
}
