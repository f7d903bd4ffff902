#include "relcomp/ntt.hpp"

#include <map>
#include <utility>

namespace relcomp {

std::size_t next_pow2(std::size_t n) {
    std::size_t r = 1;
    while (r < n) r <<= 1;
    return r;
}

bool ntt_supported(const Field& F, std::size_t n) {
    if (n == 0 || (n & (n - 1)) != 0) return false;
    u32 lg = 0;
    while ((std::size_t(1) << lg) < n) ++lg;
    return lg <= F.two_adicity();
}

const NttPlan& get_ntt_plan(const Field& F, std::size_t n) {
    thread_local std::map<std::pair<u64, std::size_t>, NttPlan> cache;
    auto key = std::make_pair(F.p(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (n == 0 || (n & (n - 1)) != 0) throw UnsupportedTransformSize("transform size not a power of two");
    u32 lg = 0;
    while ((std::size_t(1) << lg) < n) ++lg;

    NttPlan plan;
    plan.F = F;
    plan.n = n;
    plan.log2n = lg;
    FieldElement w = F.root_of_unity(lg);  // throws UnsupportedTransformSize
    // roots[k]: primitive 2^(k+1)-th root driving the stage with half-width 2^k.
    plan.roots.resize(lg);
    plan.inv_roots.resize(lg);
    FieldElement cur = w;
    for (u32 k = lg; k-- > 0;) {
        plan.roots[k] = cur;  // stage with half-width 2^k takes a 2^(k+1)-th root
        plan.inv_roots[k] = F.inv(cur);
        cur = F.mul(cur, cur);
    }
    plan.inv_n = F.inv(F.from_u64(n));
    return cache.emplace(key, std::move(plan)).first->second;
}

void ntt(std::vector<FieldElement>& a, const NttPlan& plan, bool inverse) {
    const Field& F = plan.F;
    const std::size_t n = plan.n;
    if (a.size() != n) throw DimMismatch("ntt buffer size != plan size");
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (u32 s = 0; s < plan.log2n; ++s) {
        const std::size_t half = std::size_t(1) << s;
        const FieldElement wroot = inverse ? plan.inv_roots[s] : plan.roots[s];
        for (std::size_t start = 0; start < n; start += 2 * half) {
            FieldElement w = F.one();
            for (std::size_t k = 0; k < half; ++k) {
                FieldElement u = a[start + k];
                FieldElement t = F.mul(a[start + k + half], w);
                a[start + k] = F.add(u, t);
                a[start + k + half] = F.sub(u, t);
                w = F.mul(w, wroot);
            }
        }
    }
    if (inverse) {
        for (auto& x : a) x = F.mul(x, plan.inv_n);
    }
}

}  // namespace relcomp
