#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relcomp/field.hpp"
#include "relcomp/ntt.hpp"
#include "relcomp/reference.hpp"

using namespace relcomp;

TEST_CASE("small field arithmetic against integer model") {
    Field F(7);
    CHECK(F.mul(F.from_u64(3), F.from_u64(5)) == F.one());
    CHECK(F.add(F.from_u64(6), F.from_u64(6)).v == 5);
    CHECK(F.sub(F.from_u64(2), F.from_u64(5)).v == 4);
    CHECK(F.neg(F.from_u64(3)).v == 4);
    CHECK(F.inv(F.from_u64(3)).v == 5);
    CHECK(F.pow(F.from_u64(3), 6) == F.one());
    CHECK_THROWS_AS(F.inv(F.zero()), NotAUnit);
    CHECK_THROWS_AS(F.div(F.one(), F.zero()), DivisionByZero);
}

TEST_CASE("random arithmetic matches wide-integer oracle") {
    for (u64 p : {u64(998244353), u64(7), u64(2147483647), kGoldilocksPrime}) {
        Field F(p);
        SplitMix64 rng(p ^ 0xabcdef);
        for (int i = 0; i < 2000; ++i) {
            u64 a = rng.uniform(F).v, b = rng.uniform(F).v;
            u128 pa = a, pb = b;
            CHECK(F.add({a}, {b}).v == (u64)((pa + pb) % p));
            CHECK(F.sub({a}, {b}).v == (u64)((pa + p - pb) % p));
            CHECK(F.mul({a}, {b}).v == (u64)(pa * pb % p));
            if (a) CHECK(F.mul({a}, F.inv({a})) == F.one());
        }
    }
}

TEST_CASE("addition wrap for primes above 2^63") {
    Field F(kGoldilocksPrime);
    u64 big = kGoldilocksPrime - 1;
    // (p-1)+(p-1) = 2p-2 = p-2 mod p; the raw u64 sum wraps 2^64
    CHECK(F.add({big}, {big}).v == kGoldilocksPrime - 2);
    u128 x = (u128(0x123456789abcdef0ull) << 64) | 0x0fedcba987654321ull;
    CHECK(Field::goldilocks_reduce(x) == (u64)(x % kGoldilocksPrime));
    SplitMix64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        u128 v = (u128(rng.next()) << 64) | rng.next();
        CHECK(Field::goldilocks_reduce(v) == (u64)(v % kGoldilocksPrime));
    }
}

TEST_CASE("primality and factoring helpers") {
    CHECK(is_probable_prime(998244353));
    CHECK(is_probable_prime(kGoldilocksPrime));
    CHECK(!is_probable_prime(998244355));
    CHECK_THROWS_AS(Field(6), Error);
    auto fs = factor_u64(998244352);  // 2^23 * 7 * 17
    u64 prod = 1;
    for (u64 q : fs) prod *= q;
    CHECK(prod == 998244352);
}

TEST_CASE("rejection sampling stays in range and is deterministic") {
    Field F(11);
    SplitMix64 a(5), b(5);
    for (int i = 0; i < 500; ++i) {
        FieldElement x = a.uniform(F);
        CHECK(x.v < 11);
        CHECK(x == b.uniform(F));
    }
}

TEST_CASE("ntt roundtrip and agreement with quadratic dft") {
    for (u64 p : {u64(998244353), kGoldilocksPrime}) {
        Field F(p);
        for (std::size_t n : {std::size_t(2), std::size_t(8), std::size_t(64)}) {
            REQUIRE(ntt_supported(F, n));
            const NttPlan& plan = get_ntt_plan(F, n);
            SplitMix64 rng(n * 31 + p);
            std::vector<FieldElement> v(n);
            for (auto& x : v) x = rng.uniform(F);
            std::vector<FieldElement> orig = v;

            u32 lg = 0;
            while ((std::size_t(1) << lg) < n) ++lg;
            FieldElement w = F.root_of_unity(lg);
            std::vector<FieldElement> ref_out = ref::dft(orig, w, F);

            ntt(v, plan, false);
            CHECK(v == ref_out);
            ntt(v, plan, true);
            CHECK(v == orig);
        }
    }
}

TEST_CASE("unsupported transform sizes are reported") {
    Field F(7);  // 7-1 = 2*3, two-adicity 1
    CHECK(ntt_supported(F, 2));
    CHECK(!ntt_supported(F, 8));
    CHECK_THROWS_AS(F.root_of_unity(5), UnsupportedTransformSize);
}

TEST_CASE("next_pow2") {
    CHECK(next_pow2(1) == 1);
    CHECK(next_pow2(2) == 2);
    CHECK(next_pow2(3) == 4);
    CHECK(next_pow2(1023) == 1024);
}
