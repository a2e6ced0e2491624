#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "qszego/constants.hpp"
#include "qszego/errors.hpp"
#include "qszego/fueter.hpp"
#include "qszego/quaternion.hpp"
#include "qszego/rational.hpp"
#include "qszego/siegel.hpp"

namespace qszego {

// Which exact-constant scheme multiplies the unnormalized kernel.
enum class Normalization { exact, empirical, unnormalized };

// Two available composite-argument conventions. `standard` is
//   sigma = q1 + conj(p1) - 2 sum_k conj(p'_k) q'_k,
// the form with Re sigma > 0 on interior pairs; it is the one every
// downstream computation uses. `difference` replaces +conj(p1) by -conj(p1)
// and is retained only as a cross-check path for boundary arguments; it is
// never used by the verification suites.
enum class ArgConvention { standard, difference };

// Evaluation context for kernels of order parameter n (derivative order 2n).
// The horizontal dimension is tied to the kernel order: m = n. The closed-form
// constant is defined for n >= 1 only; the empirical constant is attached
// after measuring it by quadrature.
struct KernelContext {
    int n = 1;
    int m = 1;
    std::optional<PiScaled> c_norm_exact; // present iff n >= 1
    double c_norm_float = 0.0;
    std::optional<double> c_emp;
    // Singularity guard scale: kernel evaluation treats |sigma| below
    // eps_sing_rel * (|q1| + |p1|) as singular.
    double eps_sing_rel = 1e-9;

    explicit KernelContext(int order, std::optional<double> empirical = std::nullopt)
        : n(order), m(order), c_emp(empirical) {
        if (order < 0) throw RangeError("kernel order must be n >= 0");
        if (order >= 1) {
            c_norm_exact = c_exact(order);
            c_norm_float = c_norm_exact->to_float();
        }
    }
};

// Composite kernel argument sigma; for q,p both interior, Re sigma > 0.
template <class T>
struct KernelArgument {
    Quaternion<T> sigma;
};

template <class T>
KernelArgument<T> kernel_arg(const SiegelPoint<T>& q, const SiegelPoint<T>& p,
                             ArgConvention convention = ArgConvention::standard) {
    if (q.m() != p.m()) throw SizeMismatch("kernel argument requires equal horizontal dimensions");
    const Quaternion<T> cross = inner(p.qprime, q.qprime);
    Quaternion<T> sigma;
    if (convention == ArgConvention::standard) {
        sigma = q.q1 + qconj(p.q1) - T(2) * cross;
    } else {
        sigma = q.q1 - qconj(p.q1) - T(2) * cross;
    }
    return KernelArgument<T>{sigma};
}

// Unnormalized kernel profile
//   s_unnorm(sigma) = (2n)! sum_{k=0}^{2n} (2n+1-k) conj(sigma)^{-1-k} sigma^{-2-2n+k},
// the closed form of the 2n-th x1-derivative of conj(sigma)/|sigma|^4.
// Powers of sigma and conj(sigma) commute, so the terms are generated
// iteratively from T_0 = conj(sigma)^{-1} sigma^{-2-2n} by multiplying with
// conj(sigma)^{-1} sigma per step.
template <class T>
Quaternion<T> s_unnorm(const Quaternion<T>& sigma, int n,
                       const T& eps_sing = scalar_traits<T>::div_eps()) {
    if (n < 0) throw RangeError("kernel order must be n >= 0");
    if (qnormsq(sigma) <= eps_sing * eps_sing) {
        throw Singular("kernel argument within the singular neighborhood of 0");
    }
    const Quaternion<T> inv = qinv(sigma);
    const Quaternion<T> cinv = qconj(inv);
    const Quaternion<T> step = qmul(cinv, sigma);
    Quaternion<T> term = qmul(cinv, qpow(inv, 2 * n + 2));
    Quaternion<T> total = Quaternion<T>::zero();
    for (int k = 0; k <= 2 * n; ++k) {
        total = total + T(2 * n + 1 - k) * term;
        term = qmul(term, step);
    }
    T factor = T(1); // (2n)!
    for (int i = 2; i <= 2 * n; ++i) factor = factor * T(i);
    return factor * total;
}

// Two-point kernel S(q,p) = constant * s_unnorm(kernel_arg(q,p)).
inline Quaternion<double> kernel_S(const SiegelPoint<double>& q, const SiegelPoint<double>& p,
                                   const KernelContext& ctx,
                                   Normalization normalization = Normalization::unnormalized,
                                   ArgConvention convention = ArgConvention::standard) {
    if (static_cast<int>(q.m()) != ctx.m || static_cast<int>(p.m()) != ctx.m) {
        throw SizeMismatch("kernel context requires points with m = n horizontal coordinates");
    }
    const Quaternion<double> sigma = kernel_arg(q, p, convention).sigma;
    const double scale = qabs(q.q1) + qabs(p.q1);
    const double eps = ctx.eps_sing_rel * scale;
    const Quaternion<double> raw = s_unnorm(sigma, ctx.n, eps);
    switch (normalization) {
        case Normalization::unnormalized:
            return raw;
        case Normalization::exact:
            if (!ctx.c_norm_exact) {
                throw RangeError("constant formula requires n >= 1");
            }
            return ctx.c_norm_float * raw;
        case Normalization::empirical:
            if (!ctx.c_emp) {
                throw RangeError("empirical normalization requested but not attached to context");
            }
            return *ctx.c_emp * raw;
    }
    throw RangeError("unknown normalization");
}

// Components (f1, f2, f3, f4) of s_unnorm restricted to the complex slice
// sigma = x1 + i x2. By the algebra of the slice, f3 = f4 = 0 identically;
// they are returned as computed so tests can assert the vanishing.
inline std::array<double, 4> slice_components(double x1, double x2, int n,
                                              double eps_sing = 1e-300) {
    const Quaternion<double> sigma(x1, x2, 0.0, 0.0);
    const Quaternion<double> s = s_unnorm(sigma, n, eps_sing);
    return {s.x1, s.x2, s.x3, s.x4};
}

// Residuals of the two angular ODEs satisfied by g_j(theta) = f_j(cos theta,
// sin theta) on (-pi/2, pi/2):
//   r_g1 = g1'(theta) - (2n+1) g2(theta),
//   r_g2 = sin(theta) g2'(theta) + 2 g2(theta) cos(theta) + (2n+3) g1(theta) sin(theta),
// with derivatives by central differences of the scheme's order.
inline std::pair<double, double> ode_residuals(double theta, int n,
                                               const FDScheme& scheme = FDScheme(4, 1e-3)) {
    const double h = scheme.step_for(1.0);
    const double margin = (scheme.order == 4 ? 2.0 : 1.0) * h;
    const double half_pi = 1.57079632679489661923;
    if (std::abs(theta) + margin >= half_pi) {
        throw DomainMargin("theta too close to +/- pi/2 for the difference stencil");
    }
    const auto g = [n](double t) {
        return slice_components(std::cos(t), std::sin(t), n);
    };
    const auto g0 = g(theta);
    std::array<double, 4> d{};
    if (scheme.order == 2) {
        const auto gp = g(theta + h);
        const auto gm = g(theta - h);
        for (int c = 0; c < 4; ++c) d[c] = (gp[c] - gm[c]) / (2.0 * h);
    } else {
        const auto gp2 = g(theta + 2.0 * h);
        const auto gp1 = g(theta + h);
        const auto gm1 = g(theta - h);
        const auto gm2 = g(theta - 2.0 * h);
        for (int c = 0; c < 4; ++c) {
            d[c] = (-gp2[c] + 8.0 * gp1[c] - 8.0 * gm1[c] + gm2[c]) / (12.0 * h);
        }
    }
    const double r1 = d[0] - (2.0 * n + 1.0) * g0[1];
    const double r2 =
        std::sin(theta) * d[1] + 2.0 * g0[1] * std::cos(theta) + (2.0 * n + 3.0) * g0[0] * std::sin(theta);
    return {r1, r2};
}

} // namespace qszego
