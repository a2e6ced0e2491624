#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "qszego/errors.hpp"
#include "qszego/quaternion.hpp"
#include "qszego/siegel.hpp"

namespace qszego {

// Central finite-difference scheme. order 2 uses a 3-point first-derivative
// stencil, order 4 a 5-point one. step == 0 requests the automatic step
// eps_machine^(1/5) scaled by the local coordinate magnitude of the slot,
// which balances truncation against cancellation for the order-4 stencil.
struct FDScheme {
    int order = 4;
    double step = 0.0;

    FDScheme() = default;
    FDScheme(int ord, double h) : order(ord), step(h) {
        if (order != 2 && order != 4) throw RangeError("FD order must be 2 or 4");
        if (step < 0.0) throw RangeError("FD step must be positive (or 0 for automatic)");
    }

    static FDScheme order4_auto() { return FDScheme(4, 0.0); }
    static FDScheme order2_auto() { return FDScheme(2, 0.0); }

    double step_for(double local_scale) const {
        if (step > 0.0) return step;
        const double base = std::pow(std::numeric_limits<double>::epsilon(), 0.2);
        return base * std::max(1.0, local_scale);
    }
};

// Quaternion-valued function of a Siegel point together with its domain
// predicate; evaluation must be deterministic and re-entrant.
struct QFunction {
    std::function<Quaternion<double>(const SiegelPoint<double>&)> eval;
    std::function<bool(const SiegelPoint<double>&)> domain =
        [](const SiegelPoint<double>&) { return true; };
};

namespace detail {

inline SiegelPoint<double> perturbed(const SiegelPoint<double>& q, std::size_t l, int c,
                                     double delta) {
    SiegelPoint<double> out = q;
    if (l == 0) {
        out.q1.coord(c) += delta;
    } else {
        if (l > q.m()) throw RangeError("variable index exceeds the point's slot count");
        out.qprime[l - 1].coord(c) += delta;
    }
    return out;
}

inline const Quaternion<double>& slot_of(const SiegelPoint<double>& q, std::size_t l) {
    if (l == 0) return q.q1;
    if (l > q.m()) throw RangeError("variable index exceeds the point's slot count");
    return q.qprime[l - 1];
}

inline Quaternion<double> eval_checked(const QFunction& f, const SiegelPoint<double>& q) {
    if (!f.domain(q)) {
        throw DomainMargin("finite-difference stencil leaves the function's domain");
    }
    return f.eval(q);
}

// Central first derivative along coordinate c of slot l.
inline Quaternion<double> partial(const QFunction& f, const SiegelPoint<double>& q,
                                  std::size_t l, int c, const FDScheme& scheme, double h) {
    if (scheme.order == 2) {
        const auto fp = eval_checked(f, perturbed(q, l, c, h));
        const auto fm = eval_checked(f, perturbed(q, l, c, -h));
        return (1.0 / (2.0 * h)) * (fp - fm);
    }
    const auto fp2 = eval_checked(f, perturbed(q, l, c, 2.0 * h));
    const auto fp1 = eval_checked(f, perturbed(q, l, c, h));
    const auto fm1 = eval_checked(f, perturbed(q, l, c, -h));
    const auto fm2 = eval_checked(f, perturbed(q, l, c, -2.0 * h));
    return (1.0 / (12.0 * h)) * (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2);
}

// Central second derivative along coordinate c of slot l.
inline Quaternion<double> second_partial(const QFunction& f, const SiegelPoint<double>& q,
                                         std::size_t l, int c, const FDScheme& scheme,
                                         double h) {
    const auto f0 = eval_checked(f, q);
    if (scheme.order == 2) {
        const auto fp = eval_checked(f, perturbed(q, l, c, h));
        const auto fm = eval_checked(f, perturbed(q, l, c, -h));
        return (1.0 / (h * h)) * (fp - 2.0 * f0 + fm);
    }
    const auto fp2 = eval_checked(f, perturbed(q, l, c, 2.0 * h));
    const auto fp1 = eval_checked(f, perturbed(q, l, c, h));
    const auto fm1 = eval_checked(f, perturbed(q, l, c, -h));
    const auto fm2 = eval_checked(f, perturbed(q, l, c, -2.0 * h));
    return (1.0 / (12.0 * h * h)) * (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2);
}

} // namespace detail

// Cauchy-Fueter operator on slot l:
//   cf_bar f = d_{x1} f + i d_{x2} f + j d_{x3} f + k d_{x4} f,
// units multiplying from the LEFT. Regular functions are its kernel.
inline Quaternion<double> cf_bar(const QFunction& f, const SiegelPoint<double>& q,
                                 std::size_t l, const FDScheme& scheme = FDScheme()) {
    const double h = scheme.step_for(qabs(detail::slot_of(q, l)));
    Quaternion<double> acc = Quaternion<double>::zero();
    for (int c = 0; c < 4; ++c) {
        acc = acc + qmul(Quaternion<double>::unit(c), detail::partial(f, q, l, c, scheme, h));
    }
    return acc;
}

// Conjugate operator on slot l:
//   cf f = d_{x1} f - (d_{x2} f) i - (d_{x3} f) j - (d_{x4} f) k,
// units multiplying from the RIGHT with minus signs.
inline Quaternion<double> cf(const QFunction& f, const SiegelPoint<double>& q, std::size_t l,
                             const FDScheme& scheme = FDScheme()) {
    const double h = scheme.step_for(qabs(detail::slot_of(q, l)));
    Quaternion<double> acc = detail::partial(f, q, l, 0, scheme, h);
    for (int c = 1; c < 4; ++c) {
        acc = acc - qmul(detail::partial(f, q, l, c, scheme, h), Quaternion<double>::unit(c));
    }
    return acc;
}

// Slot Laplacian: sum of the four coordinate second derivatives on slot l.
inline Quaternion<double> laplacian_slot(const QFunction& f, const SiegelPoint<double>& q,
                                         std::size_t l, const FDScheme& scheme = FDScheme()) {
    const double h = scheme.step_for(qabs(detail::slot_of(q, l)));
    Quaternion<double> acc = Quaternion<double>::zero();
    for (int c = 0; c < 4; ++c) {
        acc = acc + detail::second_partial(f, q, l, c, scheme, h);
    }
    return acc;
}

// Max over the given points and all slots of |cf_bar(f, q, l)|. Points are
// visited in their given order; the reduction is a plain sequential max, so
// the result is deterministic.
inline double regularity_residual(const QFunction& f,
                                  const std::vector<SiegelPoint<double>>& points,
                                  const FDScheme& scheme = FDScheme()) {
    double worst = 0.0;
    for (const auto& q : points) {
        for (std::size_t l = 0; l <= q.m(); ++l) {
            worst = std::max(worst, qabs(cf_bar(f, q, l, scheme)));
        }
    }
    return worst;
}

} // namespace qszego
