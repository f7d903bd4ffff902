#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "relcomp/errors.hpp"

namespace relcomp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Raw residue in [0, p). Knows nothing about the modulus; all arithmetic
// goes through a Field handle, mirroring the runtime-prime requirement.
struct FieldElement {
    u64 v = 0;
    friend bool operator==(FieldElement a, FieldElement b) { return a.v == b.v; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.v != b.v; }
};

// Immutable description of GF(p). Construct through FieldSpec::make, which
// checks primality (Miller-Rabin, 20 rounds), factors p-1 and finds a
// generator of the multiplicative group. Safe to share across threads.
struct FieldSpec {
    u64 p = 0;
    u32 two_adicity = 0;   // largest k with 2^k | p-1
    u64 generator = 0;     // generator of (Z/p)^*
    u64 r64 = 0;           // 2^64 mod p, needed when a+b wraps a machine word
    bool goldilocks = false;

    static std::shared_ptr<const FieldSpec> make(u64 p);
};

// 2^64 - 2^32 + 1, the default benchmark prime (two-adicity 32).
inline constexpr u64 kGoldilocksPrime = 0xffffffff00000001ull;

// Cheap value handle over a shared FieldSpec.
class Field {
  public:
    Field() = default;  // empty handle; using it is a bug
    explicit Field(u64 p) : s_(FieldSpec::make(p)) {}
    explicit Field(std::shared_ptr<const FieldSpec> s) : s_(std::move(s)) {}

    bool attached() const { return static_cast<bool>(s_); }
    const FieldSpec& spec() const { return *s_; }
    u64 p() const { return s_->p; }
    u32 two_adicity() const { return s_->two_adicity; }

    bool same(const Field& o) const { return s_ == o.s_ || (s_ && o.s_ && s_->p == o.s_->p); }
    void check_same(const Field& o) const {
        if (!same(o)) throw FieldMismatch("elements from different prime fields");
    }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement from_u64(u64 x) const { return {x % s_->p}; }
    FieldElement from_i64(long long x) const {
        long long m = static_cast<long long>(s_->p);
        long long r = x % m;
        if (r < 0) r += m;
        return {static_cast<u64>(r)};
    }

    bool is_zero(FieldElement a) const { return a.v == 0; }

    FieldElement add(FieldElement a, FieldElement b) const {
        u64 s = a.v + b.v;
        if (s < a.v) s += s_->r64;  // wrapped: only possible for p > 2^63, then r64 = 2^64-p
        if (s >= s_->p) s -= s_->p;
        return {s};
    }
    FieldElement sub(FieldElement a, FieldElement b) const {
        u64 d = a.v - b.v;
        if (a.v < b.v) d += s_->p;
        return {d};
    }
    FieldElement neg(FieldElement a) const { return a.v == 0 ? a : FieldElement{s_->p - a.v}; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (s_->goldilocks) return {goldilocks_reduce(static_cast<u128>(a.v) * b.v)};
        return {static_cast<u64>(static_cast<u128>(a.v) * b.v % s_->p)};
    }

    FieldElement pow(FieldElement a, u64 e) const {
        FieldElement r = one(), b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    FieldElement inv(FieldElement a) const {
        if (a.v == 0) throw NotAUnit("inverse of zero");
        return pow(a, s_->p - 2);
    }

    FieldElement div(FieldElement a, FieldElement b) const {
        if (b.v == 0) throw DivisionByZero("field division by zero");
        return mul(a, inv(b));
    }

    // Primitive 2^log2n-th root of unity; UnsupportedTransformSize when the
    // multiplicative group has no subgroup of that size.
    FieldElement root_of_unity(u32 log2n) const;

    // x = hi*2^64 + lo reduced modulo the goldilocks prime.
    static u64 goldilocks_reduce(u128 x);

  private:
    std::shared_ptr<const FieldSpec> s_;
};

// Deterministic splitmix64 stream; the only PRNG in the project. Documented
// in the README so external tooling can reproduce every instance.
struct SplitMix64 {
    u64 state;
    explicit SplitMix64(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Unbiased draw from [0, p) by rejection: accept r < 2^64 - (2^64 mod p).
    FieldElement uniform(const Field& F) {
        u64 p = F.p();
        u64 m = (0ull - p) % p;  // 2^64 mod p
        u64 limit = 0ull - m;    // 2^64 - (2^64 mod p), with 0 meaning 2^64
        for (;;) {
            u64 r = next();
            if (limit == 0 || r < limit) return {r % p};
        }
    }
    FieldElement nonzero(const Field& F) {
        for (;;) {
            FieldElement x = uniform(F);
            if (x.v != 0) return x;
        }
    }
};

// Factors n into primes (trial division + Pollard rho). Exposed for tests.
std::vector<u64> factor_u64(u64 n);
bool is_probable_prime(u64 n);

}  // namespace relcomp
