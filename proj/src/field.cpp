#include "relcomp/field.hpp"

#include <algorithm>
#include <numeric>

namespace relcomp {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_round(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    SplitMix64 rng(n ^ 0xdeadbeefcafef00dull);
    for (;;) {
        u64 c = rng.next() % n;
        u64 x = rng.next() % n, y = x, d = 1;
        auto step = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            if (x == y) break;  // cycle without factor, retry with new c
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

}  // namespace

bool is_probable_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    int s = 0;
    u64 d = n - 1;
    while ((d & 1) == 0) d >>= 1, ++s;
    // 20 pseudo-random rounds on top of a fixed deterministic base set.
    SplitMix64 rng(n ^ 0x5851f42d4c957f2dull);
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 23ull, 1662803ull}) {
        if (a % n == 0) continue;
        if (!miller_rabin_round(n, a, d, s)) return false;
    }
    for (int i = 0; i < 20; ++i) {
        u64 a = 2 + rng.next() % (n - 3);
        if (!miller_rabin_round(n, a, d, s)) return false;
    }
    return true;
}

std::vector<u64> factor_u64(u64 n) {
    std::vector<u64> out;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        while (n % q == 0) {
            out.push_back(q);
            n /= q;
        }
    }
    std::vector<u64> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        u64 m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_probable_prime(m)) {
            out.push_back(m);
            continue;
        }
        u64 d = pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::shared_ptr<const FieldSpec> FieldSpec::make(u64 p) {
    if (p < 2) throw BadParameters("field modulus must be at least 2");
    if (!is_probable_prime(p)) throw BadParameters("field modulus is not prime");
    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->goldilocks = (p == kGoldilocksPrime);
    spec->r64 = (0ull - p) % p;
    u64 m = p - 1;
    u32 ta = 0;
    while ((m & 1) == 0) m >>= 1, ++ta;
    spec->two_adicity = ta;

    std::vector<u64> primes = factor_u64(p - 1);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    u64 g = 0;
    for (u64 cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (u64 q : primes) {
            if (powmod_u64(cand, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0 && p == 2) g = 1;
    if (g == 0) throw Error("internal: no generator found");
    spec->generator = g;
    return spec;
}

u64 Field::goldilocks_reduce(u128 x) {
    constexpr u64 p = kGoldilocksPrime;
    u64 lo = static_cast<u64>(x);
    u64 hi = static_cast<u64>(x >> 64);
    u64 h0 = hi & 0xffffffffull;
    u64 h1 = hi >> 32;
    // 2^64 = 2^32 - 1 and 2^96 = -1 modulo p.
    u64 mid = (h0 << 32) - h0;
    u64 s = lo + mid;
    if (s < lo) s += 0xffffffffull;
    if (s >= h1) {
        s -= h1;
    } else {
        s = s - h1 + p;
    }
    if (s >= p) s -= p;
    return s;
}

FieldElement Field::root_of_unity(u32 log2n) const {
    if (log2n > s_->two_adicity)
        throw UnsupportedTransformSize("field has no 2^" + std::to_string(log2n) +
                                       "-th roots of unity");
    u64 e = (s_->p - 1) >> log2n;
    return pow(FieldElement{s_->generator % s_->p}, e);
}

}  // namespace relcomp
