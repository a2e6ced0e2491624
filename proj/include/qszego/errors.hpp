#pragma once

#include <stdexcept>
#include <string>

namespace qszego {

// Root of the library's error hierarchy. Every throwing precondition or
// numerical failure in this library raises a subclass of Error, so callers
// can catch qszego::Error to intercept anything originating here.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Validation errors: the request itself is malformed (wrong sizes, out-of-range
// parameters, arguments outside an operation's documented domain).
struct ValidationError : Error {
    using Error::Error;
};

// Numerical errors: the request is well-formed but evaluation cannot produce a
// trustworthy result (singular arguments, divergent tails, non-finite values).
struct NumericalError : Error {
    using Error::Error;
};

struct ZeroDivision : NumericalError {
    using NumericalError::NumericalError;
};

struct LengthMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct SizeMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct NotOnBoundary : ValidationError {
    using ValidationError::ValidationError;
};

struct NotSymplectic : ValidationError {
    using ValidationError::ValidationError;
};

struct NotUnit : ValidationError {
    using ValidationError::ValidationError;
};

struct NonpositiveScale : ValidationError {
    using ValidationError::ValidationError;
};

struct DomainMargin : ValidationError {
    using ValidationError::ValidationError;
};

struct Singular : NumericalError {
    using NumericalError::NumericalError;
};

struct RangeError : ValidationError {
    using ValidationError::ValidationError;
};

struct PoleError : ValidationError {
    using ValidationError::ValidationError;
};

struct TailTooFat : NumericalError {
    using NumericalError::NumericalError;
};

struct NonFinite : NumericalError {
    using NumericalError::NumericalError;
};

// Raised when adding two pi-scaled exact values whose pi exponents differ;
// such sums leave the exact-representable set.
struct ExponentMismatch : ValidationError {
    using ValidationError::ValidationError;
};

} // namespace qszego
