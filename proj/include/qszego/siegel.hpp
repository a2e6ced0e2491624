#pragma once

#include <cstddef>

#include "qszego/errors.hpp"
#include "qszego/quaternion.hpp"

namespace qszego {

template <class T>
struct boundary_tol_default {
    static T value() {
        if constexpr (scalar_traits<T>::exact) {
            return T(0);
        } else {
            return T(1e-12);
        }
    }
};

// Point (q1, q') of the Siegel upper half space model: interior points have
// Re q1 > |q'|^2, boundary points Re q1 = |q'|^2. The horizontal quaternionic
// dimension m = qprime.size() is a free context parameter (m = 0 is allowed:
// the degenerate domain with no horizontal coordinates).
template <class T>
struct SiegelPoint {
    Quaternion<T> q1 = Quaternion<T>::zero();
    HVector<T> qprime;

    SiegelPoint() = default;
    SiegelPoint(Quaternion<T> first, HVector<T> prime)
        : q1(std::move(first)), qprime(std::move(prime)) {}

    std::size_t m() const { return qprime.size(); }
};

// Boundary group element (w, z'): w a pure-imaginary quaternion (Re w = 0 is
// forced on construction), z' in H^m.
template <class T>
struct HeisenbergElement {
    Quaternion<T> w = Quaternion<T>::zero(); // Re w == 0 always
    HVector<T> zprime;

    HeisenbergElement() = default;
    HeisenbergElement(Quaternion<T> imag_part, HVector<T> prime)
        : w(std::move(imag_part)), zprime(std::move(prime)) {
        w.x1 = T(0);
    }

    std::size_t m() const { return zprime.size(); }

    static HeisenbergElement identity(std::size_t m) {
        return HeisenbergElement(Quaternion<T>::zero(), HVector<T>(m, Quaternion<T>::zero()));
    }
};

// Defining function Re q1 - |q'|^2: positive on the interior, zero on the
// boundary.
template <class T>
T defining_r(const SiegelPoint<T>& q) {
    return re(q.q1) - hnormsq(q.qprime);
}

template <class T>
bool is_interior(const SiegelPoint<T>& q) {
    return defining_r(q) > T(0);
}

template <class T>
bool is_boundary(const SiegelPoint<T>& q, const T& tol = boundary_tol_default<T>::value()) {
    return scalar_abs(defining_r(q)) <= tol;
}

// Boundary chart: project a boundary point to its group coordinates.
template <class T>
HeisenbergElement<T> project(const SiegelPoint<T>& q,
                             const T& tol = boundary_tol_default<T>::value()) {
    if (!is_boundary(q, tol)) {
        throw NotOnBoundary("project requires a boundary point (|Re q1 - |q'|^2| <= tol)");
    }
    return HeisenbergElement<T>(im(q.q1), q.qprime);
}

// Inverse chart: lift group coordinates to the boundary point with
// Re q1 = |z'|^2.
template <class T>
SiegelPoint<T> lift(const HeisenbergElement<T>& h) {
    Quaternion<T> q1 = h.w;
    q1.x1 = hnormsq(h.zprime);
    return SiegelPoint<T>(q1, h.zprime);
}

// Group law (w,p')(v,q') = (w + v + 2 Im<p',q'>, p' + q').
template <class T>
HeisenbergElement<T> h_mul(const HeisenbergElement<T>& p, const HeisenbergElement<T>& q) {
    if (p.m() != q.m()) throw SizeMismatch("group product requires equal horizontal dimensions");
    const Quaternion<T> cross = inner(p.zprime, q.zprime);
    Quaternion<T> w = p.w + q.w + T(2) * im(cross);
    return HeisenbergElement<T>(std::move(w), p.zprime + q.zprime);
}

template <class T>
HeisenbergElement<T> h_inv(const HeisenbergElement<T>& p) {
    return HeisenbergElement<T>(-p.w, -p.zprime);
}

// Affine boundary translation tau_p(q) = (q1 + p1 + 2<p',q'>, q' + p') for a
// boundary point p; maps U to U and preserves defining_r.
template <class T>
SiegelPoint<T> translate(const SiegelPoint<T>& p, const SiegelPoint<T>& q,
                         const T& tol = boundary_tol_default<T>::value()) {
    if (p.m() != q.m()) throw SizeMismatch("translate requires equal horizontal dimensions");
    if (!is_boundary(p, tol)) throw NotOnBoundary("translate requires p on the boundary");
    const Quaternion<T> cross = inner(p.qprime, q.qprime);
    return SiegelPoint<T>(q.q1 + p.q1 + T(2) * cross, q.qprime + p.qprime);
}

// Rotation by a symplectic matrix: (q1, a q').
template <class T>
SiegelPoint<T> rotate_a(const QuatMatrix<T>& a, const SiegelPoint<T>& q,
                        const T& tol = boundary_tol_default<T>::value()) {
    T sp_tol = tol;
    if constexpr (!scalar_traits<T>::exact) {
        if (sp_tol <= T(0)) sp_tol = T(1e-12);
    }
    if (a.m() != q.m()) throw SizeMismatch("rotate_a requires an m x m matrix");
    if (!is_sp(a, sp_tol)) throw NotSymplectic("rotate_a requires a symplectic matrix");
    return SiegelPoint<T>(q.q1, mat_apply(a, q.qprime));
}

// Rotation by a unit quaternion: (conj(sigma) q1 sigma, q' sigma).
template <class T>
SiegelPoint<T> rotate_sigma(const Quaternion<T>& sigma, const SiegelPoint<T>& q,
                            const T& tol = boundary_tol_default<T>::value()) {
    T unit_tol = tol;
    if constexpr (!scalar_traits<T>::exact) {
        if (unit_tol <= T(0)) unit_tol = T(1e-12);
    }
    if (scalar_abs(qnormsq(sigma) - T(1)) > unit_tol) {
        throw NotUnit("rotate_sigma requires |sigma| = 1");
    }
    return SiegelPoint<T>(qmul(qmul(qconj(sigma), q.q1), sigma), scale_right(q.qprime, sigma));
}

// Parabolic dilation (r^2 q1, r q'), r > 0.
template <class T>
SiegelPoint<T> dilate(const T& r, const SiegelPoint<T>& q) {
    if (!(r > T(0))) throw NonpositiveScale("dilate requires r > 0");
    HVector<T> zp(q.qprime.size());
    for (std::size_t l = 0; l < zp.size(); ++l) zp[l] = r * q.qprime[l];
    return SiegelPoint<T>((r * r) * q.q1, std::move(zp));
}

// Vertical translation q + eps e: adds eps >= 0 to Re q1 only.
template <class T>
SiegelPoint<T> vertical_translate(const SiegelPoint<T>& q, const T& eps) {
    SiegelPoint<T> out = q;
    out.q1.x1 = out.q1.x1 + eps;
    return out;
}

} // namespace qszego
