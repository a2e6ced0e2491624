#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qszego/errors.hpp"

namespace qszego {

using BigInt = boost::multiprecision::cpp_int;
// Arbitrary-precision rational kept in canonical form (reduced, positive
// denominator) by the backend.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(long long n) {
    if (n < 0) throw RangeError("factorial of negative integer");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Binomial coefficient with the out-of-range-zero convention: C(t, s) = 0
// unless 0 <= s <= t. Several of the finite sums in this library rely on
// silent truncation through this convention.
inline BigInt binomial(long long t, long long s) {
    if (s < 0 || s > t || t < 0) return BigInt(0);
    if (s > t - s) s = t - s;
    BigInt num = 1;
    for (long long i = 0; i < s; ++i) {
        num *= (t - i);
        num /= (i + 1); // exact at every step: product of i+1 consecutive integers
    }
    return num;
}

inline BigInt pow2(long long e) {
    if (e < 0) throw RangeError("pow2 exponent must be nonnegative");
    return BigInt(1) << e;
}

inline BigRational rational_pow(const BigRational& x, long long e) {
    if (e == 0) return BigRational(1);
    if (x == 0 && e < 0) throw ZeroDivision("zero raised to a negative power");
    BigRational base = e > 0 ? x : BigRational(1) / x;
    long long n = e > 0 ? e : -e;
    BigRational r = 1, b = base;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline double to_double(const BigRational& x) { return x.template convert_to<double>(); }

inline std::string to_string(const BigRational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Exact value of the form coeff * pi^(pi_half_exponent/2). Half-integer pi
// exponents arise from Gamma at half-integers, so this type is closed under
// the products and ratios appearing in the normalization-constant chain.
struct PiScaled {
    BigRational coeff{0};
    // Value is coeff * pi^(pi_half_exponent / 2).
    int pi_half_exponent{0};

    PiScaled() = default;
    PiScaled(BigRational c, int half_exp) : coeff(std::move(c)), pi_half_exponent(half_exp) {
        if (coeff == 0) pi_half_exponent = 0; // canonical zero
    }
    explicit PiScaled(BigRational c) : PiScaled(std::move(c), 0) {}

    friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
        return PiScaled(a.coeff * b.coeff, a.pi_half_exponent + b.pi_half_exponent);
    }

    friend PiScaled operator*(const PiScaled& a, const BigRational& r) {
        return PiScaled(a.coeff * r, a.pi_half_exponent);
    }

    friend PiScaled operator*(const BigRational& r, const PiScaled& a) { return a * r; }

    friend PiScaled operator/(const PiScaled& a, const PiScaled& b) {
        if (b.coeff == 0) throw ZeroDivision("division by zero pi-scaled value");
        return PiScaled(a.coeff / b.coeff, a.pi_half_exponent - b.pi_half_exponent);
    }

    friend PiScaled operator/(const PiScaled& a, const BigRational& r) {
        if (r == 0) throw ZeroDivision("division by zero rational");
        return PiScaled(a.coeff / r, a.pi_half_exponent);
    }

    // Sums stay exact only when both terms carry the same pi power.
    friend PiScaled operator+(const PiScaled& a, const PiScaled& b) {
        if (a.coeff == 0) return b;
        if (b.coeff == 0) return a;
        if (a.pi_half_exponent != b.pi_half_exponent) {
            throw ExponentMismatch("cannot add pi-scaled values with different pi exponents");
        }
        return PiScaled(a.coeff + b.coeff, a.pi_half_exponent);
    }

    friend PiScaled operator-(const PiScaled& a) { return PiScaled(-a.coeff, a.pi_half_exponent); }

    friend PiScaled operator-(const PiScaled& a, const PiScaled& b) { return a + (-b); }

    friend bool operator==(const PiScaled& a, const PiScaled& b) {
        return a.coeff == b.coeff && a.pi_half_exponent == b.pi_half_exponent;
    }
    friend bool operator!=(const PiScaled& a, const PiScaled& b) { return !(a == b); }

    double to_float() const {
        return qszego::to_double(coeff) *
               std::pow(3.14159265358979323846264338327950288, 0.5 * pi_half_exponent);
    }

    std::string str() const {
        std::ostringstream os;
        os << coeff << " * pi^(" << pi_half_exponent << "/2)";
        return os.str();
    }
};

} // namespace qszego
