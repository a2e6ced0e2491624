#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "qszego/errors.hpp"

namespace qszego {

// Scalar backend policy. The same algorithms run over binary floats (for
// quadrature) and exact big rationals (for algebraic identities); the traits
// capture the few places where the two regimes differ.
template <class T>
struct scalar_traits {
    static constexpr bool exact = !std::is_floating_point_v<T>;

    // Division guard: |a| <= div_eps() counts as zero. Exact scalars use a
    // literal zero test; floats guard against overflow of 1/|a|^2.
    static T div_eps() {
        if constexpr (std::is_floating_point_v<T>) {
            return T(1e-300);
        } else {
            return T(0);
        }
    }
};

template <class T>
T scalar_abs(const T& x) {
    using std::abs;
    return abs(x);
}

template <class T>
bool scalar_finite(const T& x) {
    if constexpr (std::is_floating_point_v<T>) {
        return std::isfinite(x);
    } else {
        (void)x;
        return true;
    }
}

// Quaternion x1 + x2 i + x3 j + x4 k over scalar type T.
template <class T>
struct Quaternion {
    T x1{}, x2{}, x3{}, x4{};

    Quaternion() = default;
    Quaternion(T a, T b, T c, T d)
        : x1(std::move(a)), x2(std::move(b)), x3(std::move(c)), x4(std::move(d)) {}
    // Real scalars embed as x1 + 0i + 0j + 0k.
    explicit Quaternion(T a) : x1(std::move(a)), x2(T(0)), x3(T(0)), x4(T(0)) {}

    static Quaternion zero() { return Quaternion(T(0), T(0), T(0), T(0)); }
    static Quaternion one() { return Quaternion(T(1), T(0), T(0), T(0)); }
    static Quaternion unit_i() { return Quaternion(T(0), T(1), T(0), T(0)); }
    static Quaternion unit_j() { return Quaternion(T(0), T(0), T(1), T(0)); }
    static Quaternion unit_k() { return Quaternion(T(0), T(0), T(0), T(1)); }

    // Basis unit by index: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
    static Quaternion unit(int c) {
        Quaternion u = zero();
        switch (c) {
            case 0: u.x1 = T(1); break;
            case 1: u.x2 = T(1); break;
            case 2: u.x3 = T(1); break;
            case 3: u.x4 = T(1); break;
            default: throw RangeError("quaternion unit index must be 0..3");
        }
        return u;
    }

    const T& coord(int c) const {
        switch (c) {
            case 0: return x1;
            case 1: return x2;
            case 2: return x3;
            case 3: return x4;
            default: throw RangeError("quaternion coordinate index must be 0..3");
        }
    }

    T& coord(int c) { return const_cast<T&>(static_cast<const Quaternion&>(*this).coord(c)); }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3 && a.x4 == b.x4;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

template <class T>
Quaternion<T> operator+(const Quaternion<T>& a, const Quaternion<T>& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x4 + b.x4};
}

template <class T>
Quaternion<T> operator-(const Quaternion<T>& a, const Quaternion<T>& b) {
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x4 - b.x4};
}

template <class T>
Quaternion<T> operator-(const Quaternion<T>& a) {
    return {-a.x1, -a.x2, -a.x3, -a.x4};
}

template <class T>
Quaternion<T> operator*(const T& s, const Quaternion<T>& a) {
    return {s * a.x1, s * a.x2, s * a.x3, s * a.x4};
}

template <class T>
Quaternion<T> operator*(const Quaternion<T>& a, const T& s) {
    return {a.x1 * s, a.x2 * s, a.x3 * s, a.x4 * s};
}

// Full Hamilton product; noncommutative.
template <class T>
Quaternion<T> qmul(const Quaternion<T>& a, const Quaternion<T>& b) {
    return {a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3 - a.x4 * b.x4,
            a.x1 * b.x2 + a.x2 * b.x1 + a.x3 * b.x4 - a.x4 * b.x3,
            a.x1 * b.x3 - a.x2 * b.x4 + a.x3 * b.x1 + a.x4 * b.x2,
            a.x1 * b.x4 + a.x2 * b.x3 - a.x3 * b.x2 + a.x4 * b.x1};
}

template <class T>
Quaternion<T> operator*(const Quaternion<T>& a, const Quaternion<T>& b) {
    return qmul(a, b);
}

template <class T>
Quaternion<T> qconj(const Quaternion<T>& a) {
    return {a.x1, -a.x2, -a.x3, -a.x4};
}

template <class T>
T qnormsq(const Quaternion<T>& a) {
    return a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3 + a.x4 * a.x4;
}

// |a| as a float; only available over floating-point scalars (exact scalars
// stay inside the rational field, use qnormsq there).
template <class T, class = std::enable_if_t<std::is_floating_point_v<T>>>
T qabs(const Quaternion<T>& a) {
    return std::sqrt(qnormsq(a));
}

template <class T>
T re(const Quaternion<T>& a) {
    return a.x1;
}

template <class T>
Quaternion<T> im(const Quaternion<T>& a) {
    return {T(0), a.x2, a.x3, a.x4};
}

template <class T>
bool qfinite(const Quaternion<T>& a) {
    return scalar_finite(a.x1) && scalar_finite(a.x2) && scalar_finite(a.x3) &&
           scalar_finite(a.x4);
}

// Multiplicative inverse conj(a)/|a|^2. Throws ZeroDivision when |a| <= eps.
template <class T>
Quaternion<T> qinv(const Quaternion<T>& a, const T& eps = scalar_traits<T>::div_eps()) {
    const T n2 = qnormsq(a);
    if (n2 <= eps * eps) {
        throw ZeroDivision("quaternion inverse of (near-)zero argument");
    }
    const Quaternion<T> c = qconj(a);
    return {c.x1 / n2, c.x2 / n2, c.x3 / n2, c.x4 / n2};
}

// Integer power by binary exponentiation; negative k inverts first.
template <class T>
Quaternion<T> qpow(const Quaternion<T>& a, long long k,
                   const T& eps = scalar_traits<T>::div_eps()) {
    Quaternion<T> base = a;
    unsigned long long e;
    if (k < 0) {
        base = qinv(a, eps);
        e = static_cast<unsigned long long>(-(k + 1)) + 1ull;
    } else {
        e = static_cast<unsigned long long>(k);
    }
    Quaternion<T> result = Quaternion<T>::one();
    while (e > 0) {
        if (e & 1ull) result = qmul(result, base);
        base = qmul(base, base);
        e >>= 1ull;
    }
    return result;
}

// Vector over H, a right quaternionic module: scalars act on the right.
template <class T>
using HVector = std::vector<Quaternion<T>>;

// <p,q> = sum_l conj(p_l) q_l; conjugate-linear in the first slot.
template <class T>
Quaternion<T> inner(const HVector<T>& p, const HVector<T>& q) {
    if (p.size() != q.size()) {
        throw LengthMismatch("inner product requires vectors of equal length");
    }
    Quaternion<T> acc = Quaternion<T>::zero();
    for (std::size_t l = 0; l < p.size(); ++l) {
        acc = acc + qmul(qconj(p[l]), q[l]);
    }
    return acc;
}

// Squared norm Re<v,v> = sum |v_l|^2 (the inner product of v with itself is
// real by construction).
template <class T>
T hnormsq(const HVector<T>& v) {
    T acc = T(0);
    for (const auto& q : v) acc = acc + qnormsq(q);
    return acc;
}

template <class T>
HVector<T> operator+(const HVector<T>& a, const HVector<T>& b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("vector sum requires equal lengths");
    }
    HVector<T> out(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) out[l] = a[l] + b[l];
    return out;
}

template <class T>
HVector<T> operator-(const HVector<T>& a) {
    HVector<T> out(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) out[l] = -a[l];
    return out;
}

// Entrywise right scalar action v -> v sigma.
template <class T>
HVector<T> scale_right(const HVector<T>& v, const Quaternion<T>& sigma) {
    HVector<T> out(v.size());
    for (std::size_t l = 0; l < v.size(); ++l) out[l] = qmul(v[l], sigma);
    return out;
}

// Square quaternionic matrix acting on HVector from the left.
template <class T>
struct QuatMatrix {
    std::vector<std::vector<Quaternion<T>>> rows;

    QuatMatrix() = default;
    explicit QuatMatrix(std::size_t m)
        : rows(m, std::vector<Quaternion<T>>(m, Quaternion<T>::zero())) {}

    std::size_t m() const { return rows.size(); }

    static QuatMatrix identity(std::size_t m) {
        QuatMatrix a(m);
        for (std::size_t j = 0; j < m; ++j) a.rows[j][j] = Quaternion<T>::one();
        return a;
    }

    bool square() const {
        for (const auto& r : rows) {
            if (r.size() != rows.size()) return false;
        }
        return true;
    }
};

// Left action (A q)_j = sum_k A_{jk} q_k.
template <class T>
HVector<T> mat_apply(const QuatMatrix<T>& a, const HVector<T>& q) {
    if (!a.square() || a.m() != q.size()) {
        throw SizeMismatch("matrix application requires an m x m matrix and length-m vector");
    }
    HVector<T> out(q.size(), Quaternion<T>::zero());
    for (std::size_t j = 0; j < a.m(); ++j) {
        for (std::size_t k = 0; k < a.m(); ++k) {
            out[j] = out[j] + qmul(a.rows[j][k], q[k]);
        }
    }
    return out;
}

// Conjugate transpose (A*)_{jk} = conj(A_{kj}).
template <class T>
QuatMatrix<T> adjoint(const QuatMatrix<T>& a) {
    if (!a.square()) throw SizeMismatch("adjoint requires a square matrix");
    QuatMatrix<T> out(a.m());
    for (std::size_t j = 0; j < a.m(); ++j) {
        for (std::size_t k = 0; k < a.m(); ++k) {
            out.rows[j][k] = qconj(a.rows[k][j]);
        }
    }
    return out;
}

template <class T>
QuatMatrix<T> mat_mul(const QuatMatrix<T>& a, const QuatMatrix<T>& b) {
    if (!a.square() || !b.square() || a.m() != b.m()) {
        throw SizeMismatch("matrix product requires equal square shapes");
    }
    QuatMatrix<T> out(a.m());
    for (std::size_t j = 0; j < a.m(); ++j) {
        for (std::size_t k = 0; k < a.m(); ++k) {
            Quaternion<T> acc = Quaternion<T>::zero();
            for (std::size_t l = 0; l < a.m(); ++l) {
                acc = acc + qmul(a.rows[j][l], b.rows[l][k]);
            }
            out.rows[j][k] = acc;
        }
    }
    return out;
}

// A* = A entrywise within tol (componentwise absolute deviation).
template <class T>
bool is_hyperhermitian(const QuatMatrix<T>& a, const T& tol) {
    if (!a.square()) throw SizeMismatch("hyperhermitian test requires a square matrix");
    for (std::size_t j = 0; j < a.m(); ++j) {
        for (std::size_t k = 0; k < a.m(); ++k) {
            const Quaternion<T> d = a.rows[j][k] - qconj(a.rows[k][j]);
            if (scalar_abs(d.x1) > tol || scalar_abs(d.x2) > tol ||
                scalar_abs(d.x3) > tol || scalar_abs(d.x4) > tol) {
                return false;
            }
        }
    }
    return true;
}

// Symplectic-group membership: A* A = I entrywise within tol.
template <class T>
bool is_sp(const QuatMatrix<T>& a, const T& tol) {
    if (!a.square()) throw SizeMismatch("symplectic test requires a square matrix");
    const QuatMatrix<T> p = mat_mul(adjoint(a), a);
    for (std::size_t j = 0; j < a.m(); ++j) {
        for (std::size_t k = 0; k < a.m(); ++k) {
            Quaternion<T> d = p.rows[j][k];
            if (j == k) d.x1 = d.x1 - T(1);
            if (scalar_abs(d.x1) > tol || scalar_abs(d.x2) > tol ||
                scalar_abs(d.x3) > tol || scalar_abs(d.x4) > tol) {
                return false;
            }
        }
    }
    return true;
}

// The 4x4 real matrix of right multiplication by sigma on coordinate columns:
// (q sigma)^R = real_matrix_of(sigma) * q^R, and real_matrix_of(conj(sigma))
// is its transpose.
template <class T>
std::array<std::array<T, 4>, 4> real_matrix_of(const Quaternion<T>& s) {
    return {{{s.x1, -s.x2, -s.x3, -s.x4},
             {s.x2, s.x1, s.x4, -s.x3},
             {s.x3, -s.x4, s.x1, s.x2},
             {s.x4, s.x3, -s.x2, s.x1}}};
}

} // namespace qszego
