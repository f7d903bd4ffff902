#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relcomp/bench.hpp"
#include "relcomp/compose.hpp"
#include "relcomp/duality.hpp"
#include "relcomp/reference.hpp"

using namespace relcomp;

TEST_CASE("multiplication matrix and structured pieces over GF(7)") {
    Field F(7);
    Poly f = Poly::from_u64(F, {1, 0, 1});  // x^2 + 1
    Poly a = Poly::x(F);
    Mat M = mult_matrix(a, f);
    REQUIRE(M.rows == 2);
    CHECK(M.at(0, 0).v == 0);
    CHECK(M.at(0, 1).v == 6);
    CHECK(M.at(1, 0).v == 1);
    CHECK(M.at(1, 1).v == 0);

    StructuredMats sm = build_structured(f, 1);
    // S(i,j) = f_(i+j+1): [[0, 1], [1, 0]]
    CHECK(sm.S.at(0, 0).v == 0);
    CHECK(sm.S.at(0, 1).v == 1);
    CHECK(sm.S.at(1, 0).v == 1);
    CHECK(sm.S.at(1, 1).v == 0);
    CHECK(sm.qm_invertible);
    CHECK(sm.pn_invertible);
}

TEST_CASE("transposition identities on random instances") {
    Field F(998244353);
    SplitMix64 rng(61);
    for (int it = 0; it < 25; ++it) {
        std::size_t n = 2 + rng.next() % 31;
        Poly f = random_monic(rng, F, n);
        if (f.coeff(0).v == 0) f.set_coeff(0, F.one());
        Poly a = random_poly(rng, F, n);
        std::size_t m = 1 + rng.next() % n;
        std::size_t d = 1 + rng.next() % 8;
        TranspositionReport rep = check_transposition_identity(f, a, m, d);
        CHECK(rep.krylov_identity);
        CHECK(rep.symmetrizer_identity);
        CHECK(rep.qm_invertible);
        CHECK(rep.pn_invertible);
    }
    // zero constant term: the structured factors lose invertibility
    Poly f0 = poly_shift(random_monic(rng, F, 7), 1);
    Poly a = random_poly(rng, F, 8);
    TranspositionReport rep = check_transposition_identity(f0, a, 3, 2);
    CHECK(!rep.qm_invertible);
    CHECK(!rep.pn_invertible);
}

TEST_CASE("krylov pair shapes") {
    Field F(998244353);
    SplitMix64 rng(62);
    std::size_t n = 12, m = 3, d = 4;
    Poly f = random_monic(rng, F, n);
    Poly a = random_poly(rng, F, n);
    KrylovPair kp = build_krylov(f, a, m, d);
    CHECK(kp.K.rows == n);
    CHECK(kp.K.cols == m * d);
    CHECK(kp.L.rows == m * d);
    CHECK(kp.L.cols == n);
    // first block of K is [I_m 0]^T, first block of L is [I_m 0]
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            CHECK(kp.K.at(i, j).v == (i == j ? 1u : 0u));
            CHECK(kp.L.at(j, i).v == (i == j ? 1u : 0u));
        }
    // column m+j of K is a * x^j mod f in the monomial basis
    Mat M = mult_matrix(poly_rem(a, f), f);
    for (std::size_t j = 0; j < m; ++j) {
        Poly axj = poly_rem(poly_mul(a, Poly::xpow(F, j)), f);
        for (std::size_t i = 0; i < n; ++i) CHECK(kp.K.at(i, m + j) == axj.coeff(i));
        (void)M;
    }
}

TEST_CASE("characteristic polynomial: frozen value and path agreement") {
    Field F(7);
    Poly f = Poly::from_u64(F, {1, 0, 1});
    Poly a = Poly::x(F);
    auto cb = charpoly(a, f, CharpolyVia::Berkowitz);
    REQUIRE(cb.ok());
    CHECK(cb.value() == Poly::from_u64(F, {1, 0, 1}));  // y^2 + 1
    auto cbas = charpoly(a, f, CharpolyVia::Basis);
    REQUIRE(cbas.ok());
    CHECK(cbas.value() == cb.value());

    Field K(998244353);
    SplitMix64 rng(63);
    for (std::size_t n : {std::size_t(2), std::size_t(5), std::size_t(9), std::size_t(16),
                          std::size_t(25)}) {
        Poly fk = random_monic(rng, K, n);
        if (fk.coeff(0).v == 0) fk.set_coeff(0, K.one());
        Poly ak = random_poly(rng, K, n);
        auto c1 = charpoly(ak, fk, CharpolyVia::Berkowitz);
        REQUIRE(c1.ok());
        CHECK(c1.value().deg() == n);
        CHECK(c1.value().lead() == K.one());
        auto c2 = charpoly(ak, fk, CharpolyVia::Basis);
        if (c2.ok()) CHECK(c2.value() == c1.value());
        // Cayley-Hamilton: chi(a) = 0 mod f
        CHECK(horner_compose(c1.value(), ak, fk).is_zero());
    }
}

TEST_CASE("basis charpoly refuses the documented degenerate inputs") {
    Field F(998244353);
    SplitMix64 rng(64);
    Poly f0 = poly_shift(random_monic(rng, F, 9), 1);
    Poly a = random_poly(rng, F, 10);
    auto r1 = charpoly(a, f0, CharpolyVia::Basis);
    CHECK(!r1.ok());
    FieldElement c = rng.uniform(F);
    Poly lin = poly_sub(Poly::x(F), Poly::constant(F, c));
    Poly f = poly_mul(lin, random_monic(rng, F, 9));
    if (f.coeff(0).v == 0) f.set_coeff(0, F.one());
    Poly a2 = poly_rem(poly_mul(lin, random_poly(rng, F, 9)), f);
    auto r2 = charpoly(a2, f, CharpolyVia::Basis);
    if (poly_gcd(a2, f).deg() != 0) CHECK(!r2.ok());
    // Berkowitz never refuses
    auto r3 = charpoly(a2, f, CharpolyVia::Berkowitz);
    CHECK(r3.ok());
    CHECK(horner_compose(r3.value(), a2, f).is_zero());
}

TEST_CASE("inverse composition round trip") {
    Field F(998244353);
    SplitMix64 rng(65);
    int done = 0;
    for (int it = 0; it < 20 && done < 12; ++it) {
        std::size_t n = 2 + rng.next() % 14;
        Poly f = random_monic(rng, F, n);
        Poly a = random_poly(rng, F, n);
        Poly h = random_poly(rng, F, n);
        Poly g;
        try {
            g = inverse_compose(h, a, f);
        } catch (const MinimalPolynomialDefect&) {
            continue;  // legitimately defective instance
        }
        ++done;
        CHECK(horner_compose(g, a, f) == poly_rem(h, f));
    }
    CHECK(done >= 12);

    // constant a has (y - c)^n as characteristic polynomial: defective
    Poly f = random_monic(rng, F, 5);
    Poly a = Poly::constant(F, rng.uniform(F));
    CHECK_THROWS_AS(inverse_compose(random_poly(rng, F, 5), a, f), MinimalPolynomialDefect);
}

TEST_CASE("composition through the characteristic polynomial") {
    Field F(998244353);
    SplitMix64 rng(66);
    int done = 0;
    for (int it = 0; it < 20 && done < 10; ++it) {
        std::size_t n = 2 + rng.next() % 12;
        Poly f = random_monic(rng, F, n);
        Poly a = random_poly(rng, F, n);
        Poly g = random_poly(rng, F, n);
        Poly h;
        try {
            h = compose_via_charpoly(g, a, f);
        } catch (const MinimalPolynomialDefect&) {
            continue;
        }
        ++done;
        CHECK(h == horner_compose(g, a, f));
    }
    CHECK(done >= 10);
}
