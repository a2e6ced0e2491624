#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "qszego/constants.hpp"
#include "qszego/errors.hpp"
#include "qszego/rational.hpp"

namespace qszego {

// Exact half-integer: the stored integer is twice the represented value, so
// every Gamma/Beta argument arising in the constant chain is representable.
struct HalfInt {
    int twice_value{0};

    HalfInt() = default;
    explicit HalfInt(int twice) : twice_value(twice) {}

    static HalfInt whole(int k) { return HalfInt(2 * k); }
    static HalfInt half_plus(int k) { return HalfInt(2 * k + 1); }

    bool is_integer() const { return twice_value % 2 == 0; }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_value + b.twice_value); }

    BigRational to_rational() const { return BigRational(twice_value, 2); }
};

// Gamma at integers and half-integers, exact:
//   Gamma(t) = (t-1)!                     for integer t >= 1,
//   Gamma(1/2 + t) = (2t)!/(4^t t!) sqrt(pi)           for integer t >= 0,
//   Gamma(1/2 - t) = (-4)^t t!/(2t)! sqrt(pi)          for integer t >= 1.
// Poles at nonpositive integers.
inline PiScaled gamma_half(HalfInt a) {
    if (a.is_integer()) {
        const int t = a.twice_value / 2;
        if (t <= 0) throw PoleError("Gamma pole at nonpositive integer");
        return PiScaled(BigRational(factorial(t - 1)), 0);
    }
    const int t = (a.twice_value - 1) / 2; // a = 1/2 + t, t any integer
    if (t >= 0) {
        return PiScaled(BigRational(factorial(2 * t), pow2(2 * t) * factorial(t)), 1);
    }
    const int u = -t;
    BigRational coeff(pow2(2 * u) * factorial(u), factorial(2 * u));
    if (u % 2 != 0) coeff = -coeff;
    return PiScaled(coeff, 1);
}

// B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b), exact over half-integers.
inline PiScaled beta_half(HalfInt a, HalfInt b) {
    return gamma_half(a) * gamma_half(b) / gamma_half(a + b);
}

// Pochhammer rising factorial (a)_s = a(a+1)...(a+s-1), (a)_0 = 1.
inline BigRational pochhammer(const BigRational& a, int s) {
    if (s < 0) throw RangeError("pochhammer requires s >= 0");
    BigRational r = 1;
    for (int i = 0; i < s; ++i) r *= (a + i);
    return r;
}

// Terminating Gauss hypergeometric sum
//   2F1(-d, b; c; x) = sum_{s=0}^{d} (-d)_s (b)_s / ((c)_s s!) x^s,
// exact rationals throughout. PoleError if (c)_s vanishes while the
// corresponding numerator term does not (c a nonpositive integer reached
// within the d+1 terms).
inline BigRational hyp2f1_term(int d, const BigRational& b, const BigRational& c,
                               const BigRational& x) {
    if (d < 0) throw RangeError("hyp2f1_term requires d >= 0");
    BigRational sum = 0;
    BigRational num = 1; // (-d)_s (b)_s x^s / s!
    BigRational den_c = 1; // (c)_s
    for (int s = 0; s <= d; ++s) {
        if (den_c == 0) {
            if (num == 0) break; // series terminated before hitting the pole
            throw PoleError("hypergeometric lower parameter hits a nonpositive integer");
        }
        sum += num / den_c;
        num *= (BigRational(-d) + s) * (b + s) * x / BigRational(s + 1);
        den_c *= (c + s);
    }
    return sum;
}

// Generalized binomial coefficient C(z, s) = z(z-1)...(z-s+1)/s! for rational
// z and integer s, zero for s < 0.
inline BigRational gen_binomial(const BigRational& z, int s) {
    if (s < 0) return BigRational(0);
    BigRational r = 1;
    for (int i = 0; i < s; ++i) r *= (z - i) / BigRational(i + 1);
    return r;
}

// Jacobi polynomial by its finite hypergeometric-type sum
//   P_d^{(a,b)}(x) = sum_{s=0}^{d} C(d+a, s) C(d+b, d-s) ((x-1)/2)^{d-s} ((x+1)/2)^{s}
// with generalized binomials; exact rationals.
inline BigRational jacobi_p(int d, const BigRational& a, const BigRational& b,
                            const BigRational& x) {
    if (d < 0) throw RangeError("jacobi_p requires d >= 0");
    const BigRational xm = (x - 1) / 2;
    const BigRational xp = (x + 1) / 2;
    BigRational sum = 0;
    for (int s = 0; s <= d; ++s) {
        const BigRational t =
            gen_binomial(BigRational(d) + a, s) * gen_binomial(BigRational(d) + b, d - s);
        if (t == 0) continue;
        sum += t * rational_pow(xm, d - s) * rational_pow(xp, s);
    }
    return sum;
}

// Exact closed form, at w = 1, of the radial moment integral
//   I_{n,d}(w) = int_0^inf r^2 (w^2+r^2)^{-(4n+6)} ((w^2-r^2)/(w^2+r^2))^d dr
//              = (-1)^d pi / (2^{8n+10} w^{8n+9}) * (8n+8)!/(4n+4)!
//                * sum_{s=0}^{d} C(d,s)/2^{d-s+1} (-1)^s (2(d-s+1))! / ((d-s+1)! (4n+5+d-s)!).
inline PiScaled I_closed_exact(int n, int d) {
    if (n < 1) throw RangeError("I_closed requires n >= 1");
    if (d < 0) throw RangeError("I_closed requires d >= 0");
    BigRational s_sum = 0;
    for (int s = 0; s <= d; ++s) {
        const int u = d - s;
        BigRational term(BigInt(binomial(d, s)) * factorial(2 * (u + 1)),
                         pow2(u + 1) * factorial(u + 1) * factorial(4 * n + 5 + u));
        if (s % 2 != 0) term = -term;
        s_sum += term;
    }
    BigRational coeff = BigRational(factorial(8 * n + 8), pow2(8 * n + 10) * factorial(4 * n + 4));
    if (d % 2 != 0) coeff = -coeff;
    return PiScaled(coeff * s_sum, 2);
}

// Float value of I_{n,d}(w) for arbitrary w > 0, via the exact w = 1 value and
// the scaling I_{n,d}(w) = w^{-(8n+9)} I_{n,d}(1).
inline double I_closed(int n, int d, double w) {
    if (!(w > 0)) throw RangeError("I_closed requires w > 0");
    return I_closed_exact(n, d).to_float() / std::pow(w, 8 * n + 9);
}

// Exact integer coefficients c_0..c_k with cos(k theta) = sum_t c_t cos^t(theta),
// assembled from the double sum
//   cos(k theta) = sum_{l=0}^{k} C(k,2l) sum_{m=0}^{l} (-1)^m C(l,m) cos^{k-2m}(theta),
// where the out-of-range-zero binomial convention truncates the l-sum at
// 2l <= k.
inline std::vector<BigInt> cos_k_expansion(int k) {
    if (k < 0) throw RangeError("cos_k_expansion requires k >= 0");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(k) + 1, BigInt(0));
    for (int l = 0; 2 * l <= k; ++l) {
        const BigInt c_k_2l = binomial(k, 2 * l);
        if (c_k_2l == 0) continue;
        for (int m = 0; m <= l; ++m) {
            BigInt t = c_k_2l * binomial(l, m);
            if (m % 2 != 0) t = -t;
            coeffs[static_cast<std::size_t>(k - 2 * m)] += t;
        }
    }
    return coeffs;
}

// Both sides of the Fejer-type identity at angle theta:
//   lhs = |sum_{k=0}^{2n} (2n+1-k) e^{ik theta}|^2,
//   rhs = sum_{k=0}^{2n} alpha(n,k) cos(k theta).
// The stored alpha convention makes lhs = 2 rhs - alpha_0 pointwise (alpha_k
// carries half the squared-modulus weight for k >= 1); both values are
// returned so that the reconciliation stays visible at call sites.
inline std::pair<double, double> fejer_square(int n, double theta) {
    if (n < 1) throw RangeError("fejer_square requires n >= 1");
    std::complex<double> sum(0.0, 0.0);
    for (int k = 0; k <= 2 * n; ++k) {
        sum += static_cast<double>(2 * n + 1 - k) *
               std::exp(std::complex<double>(0.0, k * theta));
    }
    const double lhs = std::norm(sum);
    double rhs = 0.0;
    for (int k = 0; k <= 2 * n; ++k) {
        rhs += to_double(alpha(n, k)) * std::cos(k * theta);
    }
    return {lhs, rhs};
}

// Volume factor pi^{2n-1/2} / Gamma(2n + 1/2) of the unit ball B^{4n-1},
// exactly as it enters the boundary-norm chain.
inline PiScaled sphere_ball_factor(int n) {
    if (n < 1) throw RangeError("sphere_ball_factor requires n >= 1");
    return PiScaled(BigRational(1), 4 * n - 1) / gamma_half(HalfInt(4 * n + 1));
}

// Radial factor Gamma(2n - 1/2) Gamma(2n + 5) / (2 Gamma(4n + 9/2)).
inline PiScaled radial_integral(int n) {
    if (n < 1) throw RangeError("radial_integral requires n >= 1");
    return gamma_half(HalfInt(4 * n - 1)) * gamma_half(HalfInt::whole(2 * n + 5)) /
           (BigRational(2) * gamma_half(HalfInt(8 * n + 9)));
}

// Closed-form boundary norm integral
//   2^{8n+8} pi^{2n-1} (2n+4)! (4n+4)! / ((4n-1) (8n+8)!),
// equal to sphere_ball_factor(n) * radial_integral(n).
inline PiScaled boundary_norm_integral(int n) {
    if (n < 1) throw RangeError("boundary_norm_integral requires n >= 1");
    BigRational coeff(pow2(8 * n + 8) * factorial(2 * n + 4) * factorial(4 * n + 4),
                      BigInt(4 * n - 1) * factorial(8 * n + 8));
    return PiScaled(coeff, 2 * (2 * n - 1));
}

} // namespace qszego
