#pragma once

#include "qszego/errors.hpp"
#include "qszego/rational.hpp"

namespace qszego {

// Cosine coefficients of the Fejer-type squared-modulus expansion
// |sum_{k=0}^{2n} (2n+1-k) e^{ik theta}|^2, in the convention required by the
// normalization-constant sum K_sum below: the k >= 1 coefficients are stored
// at HALF the weight they carry in the squared modulus, i.e. the squared
// modulus equals alpha_0 + 2 sum_{k>=1} alpha_k cos(k theta). See
// fejer_square for the numerically verified reconciliation of the two
// conventions.
inline BigRational alpha(int n, int k) {
    if (n < 1) throw RangeError("alpha requires n >= 1");
    if (k < 0 || k > 2 * n) throw RangeError("alpha requires 0 <= k <= 2n");
    return BigRational(BigInt(2 * n + 1 - k) * BigInt(2 * n + 2 - k) * BigInt(4 * n + 3 + k), 6);
}

// The same coefficient by its defining sum alpha_k = sum_{j=1}^{2n+1-k} j(j+k);
// retained as an internal cross-check of the closed form.
inline BigRational alpha_defining_sum(int n, int k) {
    if (n < 1) throw RangeError("alpha requires n >= 1");
    if (k < 0 || k > 2 * n) throw RangeError("alpha requires 0 <= k <= 2n");
    BigInt acc = 0;
    for (long long j = 1; j <= 2 * n + 1 - k; ++j) acc += BigInt(j) * BigInt(j + k);
    return BigRational(acc);
}

// The combinatorial sum K(n) entering the closed-form normalization constant:
//
//   K(n) = sum_{k=0}^{2n} alpha_k sum_{l=0}^{k} C(k,2l) sum_{m=0}^{l} (-1)^{k+m} C(l,m)
//          sum_{s=0}^{k-2m} C(k-2m,s) / 2^{k-2m-s+1}
//          * (-1)^s (2(k-2m-s+1))! / ((k-2m-s+1)! (4n+5+k-2m-s)!)
//
// with the convention C(t,s) = 0 outside 0 <= s <= t (which silently
// truncates the l-sum at 2l <= k). All arithmetic exact.
inline BigRational K_sum(int n) {
    if (n < 1) throw RangeError("K_sum requires n >= 1");
    BigRational total = 0;
    for (int k = 0; k <= 2 * n; ++k) {
        const BigRational ak = alpha(n, k);
        BigRational inner_lm = 0;
        for (int l = 0; l <= k; ++l) {
            const BigInt c_k_2l = binomial(k, 2 * l);
            if (c_k_2l == 0) continue;
            for (int m = 0; m <= l; ++m) {
                const int d = k - 2 * m;
                // d >= 0 is guaranteed: m <= l and 2l <= k.
                BigRational s_sum = 0;
                for (int s = 0; s <= d; ++s) {
                    const int u = d - s; // appears as the residual degree
                    BigRational term(BigInt(binomial(d, s)) * factorial(2 * (u + 1)),
                                     pow2(u + 1) * factorial(u + 1) * factorial(4 * n + 5 + u));
                    if (s % 2 != 0) term = -term;
                    s_sum += term;
                }
                BigRational contrib = BigRational(c_k_2l * binomial(l, m)) * s_sum;
                if ((k + m) % 2 != 0) contrib = -contrib;
                inner_lm += contrib;
            }
        }
        total += ak * inner_lm;
    }
    return total;
}

// Closed-form kernel normalization constant
//   c_n = (4n-1) / (2^{2n+5} pi^{2n+1} ((2n)!)^2 K(n) (n+2)(2n+3)),
// exact as rational * pi^{-(2n+1)}. Defined for n >= 1 only: the factor
// (4n-1) changes sign at n = 0 and the formula's derivation starts at n = 1.
inline PiScaled c_exact(int n) {
    if (n < 1) throw RangeError("constant formula requires n >= 1");
    const BigRational k = K_sum(n);
    if (k == 0) throw ZeroDivision("vanishing combinatorial sum in constant formula");
    BigRational coeff(BigInt(4 * n - 1), pow2(2 * n + 5));
    const BigInt f2n = factorial(2 * n);
    coeff /= BigRational(f2n * f2n);
    coeff /= k;
    coeff /= BigRational(BigInt(n + 2) * BigInt(2 * n + 3));
    return PiScaled(coeff, -2 * (2 * n + 1));
}

// Value of the diagonal kernel integral at the base point:
//   F(e) = (2n+2)! / 2^{2n+4}.
inline BigRational F_e_closed(int n) {
    if (n < 0) throw RangeError("F_e_closed requires n >= 0");
    return BigRational(factorial(2 * n + 2), pow2(2 * n + 4));
}

} // namespace qszego
