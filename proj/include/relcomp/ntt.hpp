#pragma once

#include <cstddef>
#include <vector>

#include "relcomp/field.hpp"

namespace relcomp {

// Twiddle tables for a radix-2 transform of fixed size over a fixed field.
// Plans are cached per thread keyed by (p, size); get_ntt_plan is cheap to
// call repeatedly.
struct NttPlan {
    Field F;
    std::size_t n = 0;       // power of two
    u32 log2n = 0;
    std::vector<FieldElement> roots;      // roots[k] used at stage of half-size 2^k
    std::vector<FieldElement> inv_roots;
    FieldElement inv_n{1};
};

const NttPlan& get_ntt_plan(const Field& F, std::size_t n);

// In-place transform; a.size() must equal plan.n.
void ntt(std::vector<FieldElement>& a, const NttPlan& plan, bool inverse);

// True when the field supports transforms of size n (n power of two).
bool ntt_supported(const Field& F, std::size_t n);

std::size_t next_pow2(std::size_t n);

}  // namespace relcomp
