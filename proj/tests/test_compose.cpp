#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relcomp/bench.hpp"
#include "relcomp/compose.hpp"
#include "relcomp/reference.hpp"

using namespace relcomp;

TEST_CASE("horner and brent-kung match the power-ladder oracle") {
    Field F(998244353);
    SplitMix64 rng(1);
    for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(7), std::size_t(24),
                          std::size_t(100)}) {
        Poly f = random_monic(rng, F, n);
        Poly a = random_poly(rng, F, n);
        Poly g = random_poly(rng, F, n);
        Poly want = ref::compose(g, a, f);
        CHECK(horner_compose(g, a, f) == want);
        CHECK(brent_kung_compose(g, a, f) == want);
    }
    // deg g >= n exercises the segmentation path
    Poly f = random_monic(rng, F, 9);
    Poly a = random_poly(rng, F, 9);
    Poly g = random_poly(rng, F, 95);
    CHECK(brent_kung_compose(g, a, f) == ref::compose(g, a, f));
    CHECK(horner_compose(Poly::zero(F), a, f).is_zero());
}

TEST_CASE("nz bivariate composition matches the per-layer oracle") {
    Field F(998244353);
    SplitMix64 rng(2);
    for (auto [n, xb, yb] : {std::tuple<int, int, int>{5, 5, 3},
                             {12, 12, 12},
                             {20, 20, 55},
                             {16, 40, 9}}) {
        Poly f = random_monic(rng, F, n);
        Poly a = random_poly(rng, F, n);
        BiPoly G = random_bipoly(rng, F, xb, yb);
        CHECK(nz_bivariate_compose(G, a, f) == ref::eval_y(G, a, f));
    }
}

TEST_CASE("table-driven bivariate composition") {
    Field F(998244353);
    SplitMix64 rng(3);
    for (auto [n, mu] : {std::pair<int, int>{12, 2}, {27, 3}, {32, 4}}) {
        Poly f = random_monic(rng, F, n);
        Poly a = random_poly(rng, F, n);
        PowerTables tb = powers_AB(f, a, mu);
        if (!tb.basis.generic) continue;
        for (std::size_t d : {std::size_t(1), std::size_t(mu), std::size_t(mu * mu),
                              std::size_t(mu * mu * mu)}) {
            BiPoly G = random_bipoly(rng, F, tb.delta, d);
            CHECK(bivariate_compose(G, a, f, tb) == ref::eval_y(G, a, f));
        }
        BiPoly big = random_bipoly(rng, F, 2, mu * mu * mu + 1);
        CHECK_THROWS_AS(bivariate_compose(big, a, f, tb), BlockTooSmall);
        Poly f2 = random_monic(rng, F, n);
        BiPoly G = random_bipoly(rng, F, 2, mu);
        CHECK_THROWS_AS(bivariate_compose(G, a, f2, tb), StaleTables);
        Poly a2 = poly_add(a, Poly::one(F));
        CHECK_THROWS_AS(bivariate_compose(G, a2, f, tb), StaleTables);
    }
}

TEST_CASE("high part of a modular product, field coefficients") {
    Field F(998244353);
    SplitMix64 rng(4);
    for (int it = 0; it < 50; ++it) {
        std::size_t n = 4 + (rng.next() % 60);
        Poly f = random_monic(rng, F, n);
        Poly P = random_poly(rng, F, n);
        std::size_t dq1 = 1 + rng.next() % n;  // x_len(Q)
        Poly Q = random_poly(rng, F, dq1);
        std::size_t tmax = n + 1 - dq1;
        if (tmax == 0) continue;
        std::size_t t = 1 + rng.next() % tmax;
        Poly full = poly_rem(poly_mul(P, Q), f);
        Poly want = slice(full, n - t, t - 1);
        CHECK(high_part_rem(P, Q, f, t) == want);
    }
}

TEST_CASE("high part of a modular product over truncated series") {
    Field F(998244353);
    SplitMix64 rng(5);
    for (int it = 0; it < 30; ++it) {
        std::size_t n = 5 + (rng.next() % 40);
        std::size_t k = 1 + rng.next() % 6;
        Poly f = random_monic(rng, F, n);
        BiPoly P = random_bipoly(rng, F, n, k);
        std::size_t dq1 = 1 + rng.next() % n;
        BiPoly Q = random_bipoly(rng, F, dq1, k);
        std::size_t tmax = n + 1 - dq1;
        if (tmax == 0) continue;
        std::size_t t = 1 + rng.next() % tmax;
        BiPoly got = high_part_rem(P, Q, f, t, k);
        // layerwise oracle: collect y^j of P*Q, reduce, slice
        BiPoly full = tp_rem_field(tp_mul(P, Q, k), f);
        BiPoly want = x_slice(full, n - t, t - 1);
        CHECK(got.value_eq(want));
    }
}

TEST_CASE("simultaneous truncated products") {
    Field F(998244353);
    SplitMix64 rng(6);
    for (auto [n, m, mu, delta] : {std::tuple<int, int, int, int>{16, 3, 2, 4},
                                   {24, 4, 3, 6},
                                   {30, 5, 2, 8},
                                   {40, 6, 4, 10}}) {
        Poly f = random_monic(rng, F, n);
        if (f.coeff(0).v == 0) f.set_coeff(0, F.one());
        // h carries the window n-delta..n-1; x-bound delta by convention
        BiPoly h = random_bipoly(rng, F, delta, 2 * mu);
        std::vector<BiPoly> etas;
        etas.push_back(random_bipoly(rng, F, delta, 1));
        etas.push_back(random_bipoly(rng, F, delta / 2 + 1, 1));
        etas.push_back(random_bipoly(rng, F, delta, mu));  // wide in y: blocks overlap
        auto got = sim_trunc_products(h, etas, f, m, mu);
        REQUIRE(got.size() == etas.size());
        for (std::size_t j = 0; j < etas.size(); ++j) {
            // oracle: exact bivariate product, then per layer shift/reduce/slice
            BiPoly prod = bi_mul(h, etas[j]);
            std::size_t ylayers = std::max<std::size_t>(prod.y_support(), 1);
            BiPoly want(F, m, ylayers);
            for (std::size_t l = 0; l < prod.y_support(); ++l) {
                Poly hl = poly_shift(prod.y_coeff(l), n - delta);
                want.set_y_coeff(l, trunc(poly_rem(hl, f), m));
            }
            CHECK(got[j].value_eq(want));
        }
    }
}

TEST_CASE("truncated powers: frozen example and direct agreement") {
    Field F7(7);
    Poly f7 = Poly::from_u64(F7, {1, 0, 1});
    Poly a7 = Poly::x(F7);
    PowerTables t7 = powers_AB(f7, poly_inv_mod(a7, f7), 2);
    auto rows = truncated_powers(f7, poly_inv_mod(a7, f7), Poly::one(F7), 1, 3, t7);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == Poly::one(F7));
    CHECK(rows[1].is_zero());
    CHECK(rows[2] == Poly::from_u64(F7, {6}));

    Field F(998244353);
    SplitMix64 rng(7);
    for (auto [n, mu] : {std::pair<int, int>{12, 2}, {40, 3}, {81, 3}, {100, 4}}) {
        Poly f = random_monic(rng, F, n);
        Poly base = random_poly(rng, F, n);
        PowerTables tb = powers_AB(f, base, mu);
        if (!tb.basis.generic) continue;
        std::size_t d = std::min<std::size_t>(mu * mu * mu, 2 * ((n + mu - 1) / mu));
        std::size_t mlen = std::min<std::size_t>(2 * mu - 1, n);
        Poly b = random_poly(rng, F, n);
        auto got = truncated_powers(f, base, b, mlen, d, tb);
        REQUIRE(got.size() == d);
        Poly cur = poly_rem(b, f);
        for (std::size_t k = 0; k < d; ++k) {
            CHECK(got[k] == slice(cur, 0, mlen - 1));
            cur = poly_rem(poly_mul(cur, base), f);
        }
    }
}

TEST_CASE("relation-pipeline composition matches horner") {
    Field F(998244353);
    SplitMix64 rng(8);
    int generic_seen = 0;
    for (std::size_t n : {std::size_t(2), std::size_t(5), std::size_t(16), std::size_t(33),
                          std::size_t(64), std::size_t(100)}) {
        for (int rep = 0; rep < 3; ++rep) {
            Instance ins = make_instance(F.p(), n, 900 + 7 * n + rep);
            PhaseTimings pt;
            auto res = univariate_compose(ins.g, ins.a, ins.f, &pt);
            if (!res.ok()) continue;  // refusal allowed, correctness is what we test
            ++generic_seen;
            CHECK(res.value() == horner_compose(ins.g, ins.a, ins.f));
            if (n >= 16) CHECK(!pt.phases.empty());
        }
    }
    CHECK(generic_seen >= 12);  // random instances are generic in the vast majority
}

TEST_CASE("composition with a power-of-x modulus factor (zero constant term)") {
    Field F(998244353);
    SplitMix64 rng(9);
    for (std::size_t alpha : {std::size_t(1), std::size_t(3), std::size_t(7)}) {
        std::size_t n1 = 20;
        Poly fstar = random_monic(rng, F, n1);
        if (fstar.coeff(0).v == 0) fstar.set_coeff(0, F.one());
        Poly f = poly_shift(fstar, alpha);  // x^alpha * fstar
        Poly a = random_poly(rng, F, n1 + alpha);
        Poly g = random_poly(rng, F, n1 + alpha);
        auto res = univariate_compose(g, a, f);
        if (!res.ok()) continue;
        CHECK(res.value() == horner_compose(g, a, f));
    }
    // pure power of x
    Poly f = Poly::xpow(F, 12);
    Poly a = random_poly(rng, F, 12);
    Poly g = random_poly(rng, F, 12);
    auto res = univariate_compose(g, a, f);
    REQUIRE(res.ok());
    CHECK(res.value() == horner_compose(g, a, f));
}

TEST_CASE("non-coprime point is refused, not mangled") {
    Field F(998244353);
    SplitMix64 rng(10);
    // plant a common factor x - c
    FieldElement c = rng.uniform(F);
    Poly lin = poly_sub(Poly::x(F), Poly::constant(F, c));
    Poly f = poly_mul(lin, random_monic(rng, F, 30));
    Poly a = poly_mul(lin, random_poly(rng, F, 29));
    Poly g = random_poly(rng, F, 31);
    auto res = univariate_compose(g, a, f);
    CHECK(!res.ok());
    CHECK(!res.refusal().reason.empty());
}

TEST_CASE("bivariate multipoint evaluation") {
    Field F(998244353);
    SplitMix64 rng(11);
    for (std::size_t N : {std::size_t(1), std::size_t(2), std::size_t(9), std::size_t(40),
                          std::size_t(90)}) {
        PointSet ps = make_point_set(F.p(), N, 300 + N);
        BiPoly G = random_bipoly(rng, F, 8, 8);
        auto res = multipoint_eval_bivariate(G, ps.xs, ps.ys);
        REQUIRE(res.ok());
        const auto& vals = res.value();
        REQUIRE(vals.size() == N);
        for (std::size_t i = 0; i < N; ++i) CHECK(vals[i] == eval_xy(G, ps.xs[i], ps.ys[i]));
    }
    // duplicate abscissae are rejected
    std::vector<FieldElement> xs{F.from_u64(3), F.from_u64(3)};
    std::vector<FieldElement> ys{F.from_u64(1), F.from_u64(2)};
    BiPoly G = random_bipoly(rng, F, 4, 4);
    CHECK_THROWS_AS((void)multipoint_eval_bivariate(G, xs, ys), DuplicateAbscissa);
}
