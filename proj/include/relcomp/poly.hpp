#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relcomp/field.hpp"

namespace relcomp {

// Dense univariate polynomial, coefficients low to high, always trimmed
// (no trailing zeros). The zero polynomial has no coefficients at all; its
// degree is "minus infinity" and is deliberately not representable as an
// integer. Use len() == deg+1 in index arithmetic.
class Poly {
  public:
    Poly() = default;  // detached zero; attach a field before use
    explicit Poly(Field f) : F_(f) {}
    Poly(Field f, std::vector<FieldElement> c) : F_(f), c_(std::move(c)) { trim(); }

    static Poly zero(Field f) { return Poly(f); }
    static Poly one(Field f) { return Poly(f, {f.one()}); }
    static Poly x(Field f) { return Poly(f, {f.zero(), f.one()}); }
    // x^k
    static Poly xpow(Field f, std::size_t k) {
        std::vector<FieldElement> c(k + 1, f.zero());
        c[k] = f.one();
        return Poly(f, std::move(c));
    }
    static Poly constant(Field f, FieldElement a) { return Poly(f, {a}); }
    static Poly from_u64(Field f, const std::vector<u64>& raw) {
        std::vector<FieldElement> c;
        c.reserve(raw.size());
        for (u64 x : raw) c.push_back(f.from_u64(x));
        return Poly(f, std::move(c));
    }

    const Field& field() const { return F_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t len() const { return c_.size(); }
    std::size_t deg() const {
        if (c_.empty()) throw Error("degree of the zero polynomial requested");
        return c_.size() - 1;
    }
    FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F_.zero(); }
    FieldElement lead() const { return c_.empty() ? F_.zero() : c_.back(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    void set_coeff(std::size_t i, FieldElement a) {
        if (i >= c_.size()) c_.resize(i + 1, F_.zero());
        c_[i] = a;
        trim();
    }

    FieldElement eval(FieldElement x) const {
        FieldElement r = F_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = F_.add(F_.mul(r, x), c_[i]);
        return r;
    }

    bool operator==(const Poly& o) const { return F_.same(o.F_) && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // In-place *this += lambda * other * x^shift (hot path of eliminations).
    void add_scaled(FieldElement lambda, const Poly& other, std::size_t shift = 0) {
        if (lambda.v == 0 || other.c_.empty()) return;
        if (c_.size() < other.c_.size() + shift) c_.resize(other.c_.size() + shift, F_.zero());
        for (std::size_t i = 0; i < other.c_.size(); ++i)
            c_[i + shift] = F_.add(c_[i + shift], F_.mul(lambda, other.c_[i]));
        trim();
    }

    // In-place *this = (*this * x) mod x^order.
    void shift_up_trunc(std::size_t order) {
        if (c_.empty()) return;
        c_.insert(c_.begin(), F_.zero());
        if (c_.size() > order) c_.resize(order);
        trim();
    }

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().v == 0) c_.pop_back();
    }
    Field F_;
    std::vector<FieldElement> c_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_scale(const Poly& a, FieldElement s);
Poly poly_shift(const Poly& a, std::size_t k);  // a * x^k

// Product; schoolbook below 32 coefficients, NTT when the field supports the
// size, Karatsuba otherwise.
Poly poly_mul(const Poly& a, const Poly& b);
// Product truncated to the first `order` coefficients.
Poly poly_mul_trunc(const Poly& a, const Poly& b, std::size_t order);

// Euclidean division a = q*b + r with deg r < deg b; DivisionByZero on b = 0.
struct DivRem {
    Poly q, r;
};
DivRem poly_divrem(const Poly& a, const Poly& b);
Poly poly_rem(const Poly& a, const Poly& b);

// First `order` coefficients of 1/u; NeedsUnitConstantTerm when u(0) = 0.
Poly series_inv(const Poly& u, std::size_t order);

// [u]_lo^k = u_lo + u_{lo+1} x + ... + u_{lo+k} x^k (k+1 coefficients).
Poly slice(const Poly& u, std::size_t lo, std::size_t k);
// x^at * u(1/x); DegreeOverflow when deg u > at.
Poly reverse(const Poly& u, std::size_t at);
// First `order` coefficients.
Poly trunc(const Poly& u, std::size_t order);

Poly powmod(const Poly& g, u64 e, const Poly& f);
// Inverse of a modulo f; NotInvertibleModF (carrying the gcd) when gcd != 1.
Poly poly_inv_mod(const Poly& a, const Poly& f);

Poly poly_gcd(Poly a, Poly b);  // monic gcd, zero if both zero
struct XgcdResult {
    Poly g, s, t;  // s*a + t*b = g, g monic (or zero)
};
XgcdResult poly_xgcd(const Poly& a, const Poly& b);

Poly derivative(const Poly& a);

// Values of a at all points (subproduct tree above 16 points).
std::vector<FieldElement> multipoint_eval(const Poly& a, const std::vector<FieldElement>& xs);
// Unique interpolant of degree < #points; DuplicateAbscissa on repeated xs.
Poly interpolate(const Field& F, const std::vector<FieldElement>& xs,
                 const std::vector<FieldElement>& ys);

inline Poly operator+(const Poly& a, const Poly& b) { return poly_add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return poly_sub(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

}  // namespace relcomp
