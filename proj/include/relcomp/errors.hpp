#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace relcomp {

// Base class for all failures that indicate a broken precondition or an
// internal bug. Expected refusals (non-generic inputs) are NOT exceptions,
// see NonGeneric below.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct DegreeOverflow : Error { using Error::Error; };
struct UnsupportedTransformSize : Error { using Error::Error; };
struct DuplicateAbscissa : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct ZeroColumn : Error { using Error::Error; };
struct SingularBasis : Error { using Error::Error; };
struct SmallFieldError : Error { using Error::Error; };
struct BadParameters : Error { using Error::Error; };
struct BlockTooSmall : Error { using Error::Error; };
struct StaleTables : Error { using Error::Error; };
struct NeedsUnitConstantTerm : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct BoundTooSmall : Error { using Error::Error; };
struct MinimalPolynomialDefect : Error { using Error::Error; };

// Raised when an inverse modulo f does not exist; carries the witness gcd
// as a raw coefficient vector (low to high) so callers can report it.
struct NotInvertibleModF : Error {
    std::vector<std::uint64_t> gcd_coeffs;
    NotInvertibleModF(const std::string& msg, std::vector<std::uint64_t> gcd)
        : Error(msg), gcd_coeffs(std::move(gcd)) {}
};

// Typed refusal: the input fell outside the generic set a fast path needs.
// This is an expected outcome, not an error; callers pick a fallback.
struct NonGeneric {
    std::string reason;
};

// Poor man's expected<T, NonGeneric>; std::expected is C++23.
template <class T>
class Fallible {
  public:
    Fallible(T value) : v_(std::move(value)) {}
    Fallible(NonGeneric refusal) : v_(std::move(refusal)) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    const T& value() const {
        if (!ok()) throw Error("Fallible: no value (" + refusal().reason + ")");
        return std::get<T>(v_);
    }
    T& value() {
        if (!ok()) throw Error("Fallible: no value (" + refusal().reason + ")");
        return std::get<T>(v_);
    }
    const NonGeneric& refusal() const { return std::get<NonGeneric>(v_); }

  private:
    std::variant<T, NonGeneric> v_;
};

}  // namespace relcomp
