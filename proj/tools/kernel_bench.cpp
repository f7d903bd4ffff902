// Compares the parallel kernels (NTT polynomial product, blocked matrix
// product, evaluation-interpolation polynomial-matrix product) against the
// serial reference implementations used by the tests.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relcomp/bench.hpp"
#include "relcomp/linalg.hpp"
#include "relcomp/poly.hpp"
#include "relcomp/polymat.hpp"
#include "relcomp/reference.hpp"

namespace rc = relcomp;

using Clock = std::chrono::steady_clock;

static double time_ms(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* env = std::getenv("RELCOMP_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
    std::cout << "threads=" << omp_get_max_threads() << "\n";
#else
    std::cout << "threads=1 (OpenMP disabled)\n";
#endif
    rc::u64 seed = 42;
    std::size_t scale = 1;
    if (argc > 1) scale = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));

    rc::Field F(998244353ULL);
    rc::SplitMix64 rng(seed);

    std::cout << "kernel,size,fast_ms,ref_ms,match\n";

    // polynomial product
    for (std::size_t n : {std::size_t(1) << 10, std::size_t(1) << 12, (std::size_t(1) << 13) * scale}) {
        rc::Poly u = rc::random_poly(rng, F, n);
        rc::Poly v = rc::random_poly(rng, F, n);
        rc::Poly fast, slow;
        double tf = time_ms([&] { fast = rc::poly_mul(u, v); });
        double tr = time_ms([&] { slow = rc::ref::mul(u, v); });
        std::cout << "poly_mul," << n << "," << tf << "," << tr << ","
                  << (fast == slow ? "true" : "false") << "\n";
    }

    // dense matrix product
    for (std::size_t n : {std::size_t(64), std::size_t(128), std::size_t(256) * scale}) {
        rc::Mat A(F, n, n), B(F, n, n);
        for (auto& x : A.a) x = F.from_u64(rng.next());
        for (auto& x : B.a) x = F.from_u64(rng.next());
        rc::Mat fast(F, 0, 0), slow(F, 0, 0);
        double tf = time_ms([&] { fast = rc::mat_mul(A, B); });
        double tr = time_ms([&] { slow = rc::ref::mat_mul(A, B); });
        std::cout << "mat_mul," << n << "," << tf << "," << tr << ","
                  << (fast.a == slow.a ? "true" : "false") << "\n";
    }

    // polynomial-matrix product (evaluation-interpolation vs entrywise naive)
    for (std::size_t n : {std::size_t(8), std::size_t(16) * scale}) {
        std::size_t len = 32;
        rc::PolyMatrix A(F, n, n), B(F, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                A.at(i, j) = rc::random_poly(rng, F, len);
                B.at(i, j) = rc::random_poly(rng, F, len);
            }
        rc::PolyMatrix fast(F, 0, 0), slow(F, 0, 0);
        double tf = time_ms([&] { fast = rc::pm_mul(A, B); });
        double tr = time_ms([&] {
            slow = rc::PolyMatrix(F, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    rc::Poly acc = rc::Poly::zero(F);
                    for (std::size_t k = 0; k < n; ++k)
                        acc = rc::poly_add(acc, rc::ref::mul(A.at(i, k), B.at(k, j)));
                    slow.at(i, j) = acc;
                }
        });
        std::cout << "pm_mul," << n << "x" << n << "deg" << len - 1 << "," << tf << "," << tr
                  << "," << (rc::pm_eq(fast, slow) ? "true" : "false") << "\n";
    }
    return 0;
}
