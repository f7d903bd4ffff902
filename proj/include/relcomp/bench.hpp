#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relcomp/bipoly.hpp"
#include "relcomp/poly.hpp"

namespace relcomp {

// The PRNG (SplitMix64) lives in field.hpp; the exact stream is part of the
// instance format, so the same (p, n, seed) triple reproduces the same
// instance anywhere.

// Uniform field element by rejection sampling: draw 64-bit words, reject
// those >= p * floor(2^64 / p), reduce the survivor mod p.
FieldElement sample_field(SplitMix64& rng, const Field& F);

Poly random_poly(SplitMix64& rng, const Field& F, std::size_t len);
Poly random_monic(SplitMix64& rng, const Field& F, std::size_t deg);
BiPoly random_bipoly(SplitMix64& rng, const Field& F, std::size_t xb, std::size_t yb);

// Seed-derived univariate composition instance: f random monic of degree n,
// a and g random of degree < n. Derivation order: f, then a, then g.
struct Instance {
    u64 p = 0, seed = 0;
    std::size_t n = 0;
    Poly f, a, g;
};
Instance make_instance(u64 p, std::size_t n, u64 seed);

// Seed-derived evaluation points: n distinct abscissae (rejecting repeats),
// then n ordinates.
struct PointSet {
    std::vector<FieldElement> xs, ys;
};
PointSet make_point_set(u64 p, std::size_t n, u64 seed);

// FNV-1a over the little-endian bytes of each coefficient, as 16 hex digits.
std::string digest_hex(const Poly& p);
std::string digest_hex(const std::vector<FieldElement>& v);

struct ReportRow {
    std::string algo;
    std::size_t n = 0, m = 0, d = 0, mu = 0, delta = 0;
    std::string phase = "total";
    double millis = 0.0;
    bool verified = false, generic = false;
};
std::string report_csv(const std::vector<ReportRow>& rows);
std::string report_json(const std::vector<ReportRow>& rows);

// Instance file: UTF-8 lines `key=value`. Scalar keys p, seed, n, m, d, mu
// (decimal); list keys f, a, g, xs, ys (comma-separated decimals, low to
// high); G may repeat, one line per y-layer (x-coefficients low to high).
// Anything else is rejected.
struct InstanceFile {
    u64 p = 0, seed = 0;
    std::size_t n = 0, m = 0, d = 0, mu = 0;
    bool has_p = false, has_seed = false, has_n = false, has_m = false, has_d = false,
         has_mu = false;
    std::vector<u64> f, a, g, xs, ys;
    std::vector<std::vector<u64>> G;
};
InstanceFile parse_instance_text(const std::string& text);

}  // namespace relcomp
