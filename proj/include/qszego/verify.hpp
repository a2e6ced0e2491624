#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "qszego/constants.hpp"
#include "qszego/errors.hpp"
#include "qszego/fueter.hpp"
#include "qszego/kernel.hpp"
#include "qszego/quadrature.hpp"
#include "qszego/quaternion.hpp"
#include "qszego/rational.hpp"
#include "qszego/siegel.hpp"
#include "qszego/special_functions.hpp"

namespace qszego {

// ---------------------------------------------------------------------------
// Verification suites shared by the CLI and the acceptance harness. Every
// check records the worst measured deviation next to its declared threshold,
// so reports show the margins, not just pass/fail bits.
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;  // worst observed deviation (see detail for units)
    double threshold = 0.0; // declared bound; 0 marks an exact-equality check
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double wall_time_seconds = 0.0;

    bool passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

namespace testrand {

// Deterministic draw sequence keyed by (seed, stream); consumption order is
// the only state.
struct Draw {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::uint64_t counter = 0;

    Draw(std::uint64_t s, std::uint64_t str) : seed(s), stream(str) {}

    double next() { return counter_u01(seed, stream, counter++); }
    double range(double lo, double hi) { return lo + (hi - lo) * next(); }
    long long integer(long long lo, long long hi) {
        // inclusive bounds, uniform enough for test data
        return lo + static_cast<long long>(next() * static_cast<double>(hi - lo + 1));
    }

    Quaternion<double> quat(double amp) {
        return Quaternion<double>(range(-amp, amp), range(-amp, amp), range(-amp, amp),
                                  range(-amp, amp));
    }

    Quaternion<double> unit_quat() {
        for (;;) {
            const Quaternion<double> v = quat(1.0);
            const double a = qabs(v);
            if (a > 0.1) return (1.0 / a) * v;
        }
    }

    Quaternion<double> quat_with_radius(double r) {
        return r * unit_quat();
    }

    // Interior Siegel point: q' components in [-zp_amp, zp_amp], Im q1
    // components in [-im_amp, im_amp], Re q1 = |q'|^2 + margin with margin
    // uniform in [margin_lo, margin_hi].
    SiegelPoint<double> interior_point(int m, double margin_lo, double margin_hi, double im_amp,
                                       double zp_amp) {
        HVector<double> zp(static_cast<std::size_t>(m));
        for (auto& z : zp) z = quat(zp_amp);
        Quaternion<double> q1(0.0, range(-im_amp, im_amp), range(-im_amp, im_amp),
                              range(-im_amp, im_amp));
        q1.x1 = hnormsq(zp) + range(margin_lo, margin_hi);
        return SiegelPoint<double>(q1, std::move(zp));
    }

    HeisenbergElement<double> boundary_element(int m, double amp) {
        HVector<double> zp(static_cast<std::size_t>(m));
        for (auto& z : zp) z = quat(amp);
        Quaternion<double> w(0.0, range(-amp, amp), range(-amp, amp), range(-amp, amp));
        return HeisenbergElement<double>(w, std::move(zp));
    }

    // Random symplectic matrix by Gram-Schmidt over the right quaternionic
    // module: columns are orthonormalized with scalars acting on the right.
    QuatMatrix<double> sp_matrix(int m) {
        const std::size_t mm = static_cast<std::size_t>(m);
        std::vector<HVector<double>> cols;
        cols.reserve(mm);
        for (std::size_t k = 0; k < mm; ++k) {
            HVector<double> v(mm);
            for (std::size_t j = 0; j < mm; ++j) {
                v[j] = quat(1.0);
                if (j == k) v[j] = v[j] + Quaternion<double>(1.5); // diagonal bias for stability
            }
            for (std::size_t prev = 0; prev < k; ++prev) {
                const Quaternion<double> coef = inner(cols[prev], v);
                for (std::size_t j = 0; j < mm; ++j) {
                    v[j] = v[j] - qmul(cols[prev][j], coef);
                }
            }
            const double norm = std::sqrt(hnormsq(v));
            for (auto& q : v) q = (1.0 / norm) * q;
            cols.push_back(std::move(v));
        }
        QuatMatrix<double> a(mm);
        for (std::size_t j = 0; j < mm; ++j) {
            for (std::size_t k = 0; k < mm; ++k) a.rows[j][k] = cols[k][j];
        }
        return a;
    }
};

} // namespace testrand

// Finite-difference weights on arbitrary nodes (Fornberg's recurrence):
// returns the weight of each node for the m-th derivative at x0.
inline std::vector<double> fornberg_weights(double x0, const std::vector<double>& nodes, int m) {
    const int n = static_cast<int>(nodes.size());
    if (m < 0 || n < m + 1) throw RangeError("stencil too small for requested derivative order");
    std::vector<std::vector<double>> c(static_cast<std::size_t>(m) + 1,
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 =
                nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                        c1 *
                        (k * c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] -
                         c5 * c[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)]) /
                        c2;
                }
                c[0][static_cast<std::size_t>(i)] =
                    -c1 * c5 * c[0][static_cast<std::size_t>(i - 1)] / c2;
            }
            for (int k = mn; k >= 1; --k) {
                c[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                    (c4 * c[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -
                     k * c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)]) /
                    c3;
            }
            c[0][static_cast<std::size_t>(j)] = c4 * c[0][static_cast<std::size_t>(j)] / c3;
        }
        c1 = c2;
    }
    return c[static_cast<std::size_t>(m)];
}

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
}

inline CheckResult exact_check(const std::string& name, bool ok, const std::string& detail = {}) {
    CheckResult c;
    c.name = name;
    c.passed = ok;
    c.measured = ok ? 0.0 : 1.0;
    c.threshold = 0.0;
    c.detail = detail.empty() ? std::string("exact arithmetic equality") : detail;
    return c;
}

inline CheckResult bounded_check(const std::string& name, double measured, double threshold,
                                 const std::string& detail = {}) {
    CheckResult c;
    c.name = name;
    c.measured = measured;
    c.threshold = threshold;
    c.passed = std::isfinite(measured) && measured < threshold;
    c.detail = detail;
    return c;
}

template <class F>
SuiteResult timed_suite(const std::string& name, F&& body) {
    SuiteResult out;
    out.suite = name;
    const auto t0 = std::chrono::steady_clock::now();
    body(out);
    const auto t1 = std::chrono::steady_clock::now();
    out.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Exact-constants suite: closed-form constants, the combinatorial sum, and
// the diagonal-identity closure, all in exact rational arithmetic.
// ---------------------------------------------------------------------------
inline SuiteResult suite_constants() {
    return detail::timed_suite("constants", [](SuiteResult& out) {
        {
            const PiScaled expected1(BigRational(6237, 872), -6);
            const PiScaled got1 = c_exact(1);
            out.checks.push_back(detail::exact_check(
                "normalization constant, order 1: 6237/872 * pi^-3", got1 == expected1,
                "computed " + got1.str()));
            const PiScaled expected2(BigRational(11486475, 193472), -10);
            const PiScaled got2 = c_exact(2);
            out.checks.push_back(detail::exact_check(
                "normalization constant, order 2: 11486475/193472 * pi^-5", got2 == expected2,
                "computed " + got2.str()));
        }
        {
            const BigRational k1 = K_sum(1);
            out.checks.push_back(detail::exact_check("combinatorial sum K(1) = 109/1995840",
                                                     k1 == BigRational(109, 1995840),
                                                     "computed " + to_string(k1)));
            const BigRational k2 = K_sum(2);
            out.checks.push_back(
                detail::exact_check("combinatorial sum K(2) = 3023/211718707200",
                                    k2 == BigRational(BigInt(3023), BigInt(211718707200ll)),
                                    "computed " + to_string(k2)));
        }
        {
            bool ok = true;
            for (int n = 1; n <= 10 && ok; ++n) {
                for (int k = 0; k <= 2 * n && ok; ++k) {
                    if (alpha(n, k) != alpha_defining_sum(n, k)) ok = false;
                }
                if (alpha(n, 2 * n) != BigRational(2 * n + 1)) ok = false;
            }
            out.checks.push_back(detail::exact_check(
                "cosine coefficients: closed form equals defining sum (orders 1..10)", ok));
        }
        {
            bool ok = true;
            std::ostringstream os;
            for (int n = 1; n <= 6; ++n) {
                const PiScaled c = c_exact(n);
                const BigInt f2n = factorial(2 * n);
                const BigRational lhs = c.coeff * BigRational(f2n * f2n) *
                                        BigRational(factorial(2 * n + 4)) * K_sum(n) /
                                        BigRational(4 * n - 1);
                const BigRational rhs = F_e_closed(n);
                const bool exp_ok = c.pi_half_exponent == -2 * (2 * n + 1);
                if (lhs != rhs || !exp_ok) ok = false;
                if (n <= 2) os << "n=" << n << ": " << to_string(lhs) << "; ";
            }
            out.checks.push_back(detail::exact_check(
                "diagonal-identity closure: constant * pi^(2n+1) ((2n)!)^2 (2n+4)! K / (4n-1) = "
                "(2n+2)!/2^(2n+4), orders 1..6",
                ok, os.str()));
        }
        {
            const bool ok = F_e_closed(0) == BigRational(1, 8) &&
                            F_e_closed(1) == BigRational(3, 8) &&
                            F_e_closed(2) == BigRational(45, 16);
            out.checks.push_back(
                detail::exact_check("diagonal values 1/8, 3/8, 45/16 (orders 0..2)", ok));
        }
    });
}

namespace detail {

// Explicit finite-sum route to the Jacobi value at -3 (independent of the
// generalized-binomial form):
//   (4n+5+d)! sum_{s=0}^{d} (-1)^s/2^{d-s+1} (2(d-s+1))!/(s!(d-s)!(d-s+1)!(4n+5+d-s)!)
inline BigRational jacobi_explicit_sum(int n, int d) {
    BigRational sum = 0;
    for (int s = 0; s <= d; ++s) {
        const int u = d - s;
        BigRational term(factorial(2 * (u + 1)),
                         pow2(u + 1) * factorial(s) * factorial(u) * factorial(u + 1) *
                             factorial(4 * n + 5 + u)); // (4n+5+d-s)! with u = d-s
        if (s % 2 != 0) term = -term;
        sum += term;
    }
    return BigRational(factorial(4 * n + 5 + d)) * sum;
}

// Explicit finite-sum route to the terminating hypergeometric value:
//   (4n+5)! sum_{s=0}^{d} C(d,s)/2^{d-s+1} (-1)^s (2(d-s+1))!/((d-s+1)!(4n+5+d-s)!)
inline BigRational hyp_explicit_sum(int n, int d) {
    BigRational sum = 0;
    for (int s = 0; s <= d; ++s) {
        const int u = d - s;
        BigRational term(BigInt(binomial(d, s)) * factorial(2 * (u + 1)),
                         pow2(u + 1) * factorial(u + 1) * factorial(4 * n + 5 + u));
        if (s % 2 != 0) term = -term;
        sum += term;
    }
    return BigRational(factorial(4 * n + 5)) * sum;
}

// Cosine-power coefficients of sum_k alpha(n,k) cos(k theta).
inline std::vector<BigRational> beta_coeffs(int n) {
    std::vector<BigRational> beta(static_cast<std::size_t>(2 * n) + 1, BigRational(0));
    for (int k = 0; k <= 2 * n; ++k) {
        const BigRational ak = alpha(n, k);
        const std::vector<BigInt> ck = cos_k_expansion(k);
        for (std::size_t t = 0; t < ck.size(); ++t) {
            beta[t] += ak * BigRational(ck[t]);
        }
    }
    return beta;
}

// The bracketed sum of the low-order constant evaluations:
//   sum_{d=0}^{2n} beta_d (-1)^d 2F1(-d, 4n+9/2, 4n+6; 2).
inline BigRational bracket_assembled(int n) {
    const std::vector<BigRational> beta = beta_coeffs(n);
    BigRational total = 0;
    for (int d = 0; d <= 2 * n; ++d) {
        BigRational term = beta[static_cast<std::size_t>(d)] *
                           hyp2f1_term(d, BigRational(8 * n + 9, 2), BigRational(4 * n + 6),
                                       BigRational(2));
        if (d % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Special-function oracle suite: hypergeometric table, Jacobi routes, the
// radial moment integral against adaptive quadrature, cosine expansions, the
// squared-modulus sweep, Beta/Gamma spot values, the product identity, and
// the finite-difference oracle for the closed-form kernel profile.
// ---------------------------------------------------------------------------
inline SuiteResult suite_oracle(std::uint64_t seed = 0x0ddba11u) {
    return detail::timed_suite("oracle", [seed](SuiteResult& out) {
        { // terminating hypergeometric table, exact
            const BigRational b1(17, 2), c1(10), b2(25, 2), c2(14), x(2);
            const bool ok = hyp2f1_term(0, b1, c1, x) == BigRational(1) &&
                            hyp2f1_term(1, b1, c1, x) == BigRational(-7, 10) &&
                            hyp2f1_term(2, b1, c1, x) == BigRational(59, 110) &&
                            hyp2f1_term(1, b2, c2, x) == BigRational(-11, 14) &&
                            hyp2f1_term(2, b2, c2, x) == BigRational(9, 14) &&
                            hyp2f1_term(3, b2, c2, x) == BigRational(-121, 224) &&
                            hyp2f1_term(4, b2, c2, x) == BigRational(1763, 3808);
            out.checks.push_back(detail::exact_check(
                "terminating 2F1 table: -7/10, 59/110; -11/14, 9/14, -121/224, 1763/3808", ok));
        }
        { // assembled brackets, exact
            const BigRational br1 = detail::bracket_assembled(1);
            const BigRational br2 = detail::bracket_assembled(2);
            const std::vector<BigRational> beta1 = detail::beta_coeffs(1);
            const std::vector<BigRational> beta2 = detail::beta_coeffs(2);
            const bool beta_ok =
                beta1 == std::vector<BigRational>{BigRational(11), BigRational(8), BigRational(6)} &&
                beta2 == std::vector<BigRational>{BigRational(34), BigRational(-2), BigRational(12),
                                                  BigRational(56), BigRational(40)};
            const bool ok =
                beta_ok && br1 == BigRational(218, 11) && br2 == BigRational(3023, 34);
            out.checks.push_back(detail::exact_check(
                "assembled hypergeometric brackets equal 218/11 and 3023/34",
                ok, "bracket(1) = " + to_string(br1) + ", bracket(2) = " + to_string(br2)));
        }
        { // Jacobi polynomial routes, exact
            bool ok = true;
            for (int n = 1; n <= 4 && ok; ++n) {
                for (int d = 0; d <= 2 * n && ok; ++d) {
                    const BigRational a(4 * n + 5);
                    const BigRational b(-2 * d - 3, 2);
                    const BigRational pj = jacobi_p(d, a, b, BigRational(-3));
                    const BigRational hyp = hyp2f1_term(d, BigRational(8 * n + 9, 2),
                                                        BigRational(4 * n + 6), BigRational(2));
                    const BigRational poch = pochhammer(BigRational(4 * n + 6), d);
                    if (BigRational(factorial(d)) * pj / poch != hyp) ok = false;
                    if (pj != detail::jacobi_explicit_sum(n, d)) ok = false;
                    if (hyp != detail::hyp_explicit_sum(n, d)) ok = false;
                }
            }
            out.checks.push_back(detail::exact_check(
                "Jacobi-polynomial route: d!/(4n+6)_d P_d(-3) equals 2F1 and both explicit sums "
                "(orders 1..4, all degrees)",
                ok));
        }
        { // radial moment integral vs adaptive 1-D quadrature
            double worst = 0.0;
            boost::math::quadrature::exp_sinh<double> integrator;
            for (int n = 1; n <= 2; ++n) {
                for (int d = 0; d <= 2 * n; ++d) {
                    for (double w : {1.0, 2.0}) {
                        const auto f = [n, d, w](double r) {
                            const double w2 = w * w, r2 = r * r;
                            return r2 * std::pow(w2 + r2, -(4.0 * n + 6.0)) *
                                   std::pow((w2 - r2) / (w2 + r2), d);
                        };
                        const double numeric = integrator.integrate(f, 1e-12);
                        const double closed = I_closed(n, d, w);
                        worst = std::max(worst,
                                         std::abs(numeric - closed) / std::abs(closed));
                    }
                }
            }
            out.checks.push_back(detail::bounded_check(
                "radial moment integral: closed form vs adaptive quadrature (rel)", worst, 1e-8));
        }
        { // degree-0 moment equals a pure Beta value, exact
            bool ok = true;
            for (int n = 1; n <= 4 && ok; ++n) {
                const PiScaled beta = beta_half(HalfInt(3), HalfInt(8 * n + 9));
                if (I_closed_exact(n, 0) != beta * BigRational(1, 2)) ok = false;
            }
            out.checks.push_back(detail::exact_check(
                "degree-0 radial moment equals B(3/2, 4n+9/2)/2 (orders 1..4)", ok));
        }
        { // Gamma/Beta spot identities, exact
            bool ok = gamma_half(HalfInt(1)) == PiScaled(BigRational(1), 1) &&
                      gamma_half(HalfInt(5)) == PiScaled(BigRational(3, 4), 1) &&
                      gamma_half(HalfInt::whole(4)) == PiScaled(BigRational(6), 0) &&
                      beta_half(HalfInt::whole(1), HalfInt::whole(1)) ==
                          PiScaled(BigRational(1), 0) &&
                      beta_half(HalfInt(3), HalfInt(3)) == PiScaled(BigRational(1, 8), 2);
            for (int n = 1; n <= 3 && ok; ++n) {
                const PiScaled expected(
                    BigRational(factorial(8 * n + 8),
                                pow2(8 * n + 9) * factorial(4 * n + 4) * factorial(4 * n + 5)),
                    2);
                if (beta_half(HalfInt(8 * n + 9), HalfInt(3)) != expected) ok = false;
            }
            out.checks.push_back(detail::exact_check(
                "Gamma/Beta half-integer spot values and B(4n+9/2, 3/2) closed form", ok));
        }
        { // cosine expansion
            bool anchors = cos_k_expansion(0) == std::vector<BigInt>{BigInt(1)} &&
                           cos_k_expansion(2) ==
                               std::vector<BigInt>{BigInt(-1), BigInt(0), BigInt(2)} &&
                           cos_k_expansion(3) ==
                               std::vector<BigInt>{BigInt(0), BigInt(-3), BigInt(0), BigInt(4)};
            double worst = 0.0;
            testrand::Draw draw(seed, 11);
            for (int k = 0; k <= 8; ++k) {
                const std::vector<BigInt> coeffs = cos_k_expansion(k);
                for (int trial = 0; trial < 100; ++trial) {
                    const double theta = draw.range(-3.141592653589793, 3.141592653589793);
                    const double c = std::cos(theta);
                    double acc = 0.0;
                    double cp = 1.0;
                    for (std::size_t t = 0; t < coeffs.size(); ++t) {
                        acc += static_cast<double>(coeffs[t]) * cp;
                        cp *= c;
                    }
                    worst = std::max(worst, std::abs(acc - std::cos(k * theta)));
                }
            }
            out.checks.push_back(detail::bounded_check(
                "cosine multiple-angle expansion matches cos(k theta), k <= 8", worst, 1e-12,
                anchors ? "integer anchors 2c^2-1 and 4c^3-3c verified exactly"
                        : "integer anchor mismatch"));
            if (!anchors) out.checks.back().passed = false;
        }
        { // squared-modulus sweep: resolved coefficient convention
            double worst = 0.0;
            bool exact_ok = true;
            testrand::Draw draw(seed, 12);
            for (int n = 1; n <= 3; ++n) {
                // stored alpha_0 equals the sum of squared weights
                BigRational sq = 0;
                for (int j = 1; j <= 2 * n + 1; ++j) sq += BigRational(j * j);
                if (alpha(n, 0) != sq) exact_ok = false;
                const double a0 = to_double(alpha(n, 0));
                for (int trial = 0; trial < 64; ++trial) {
                    const double theta = draw.range(-3.141592653589793, 3.141592653589793);
                    const auto [lhs, rhs] = fejer_square(n, theta);
                    worst = std::max(worst,
                                     std::abs(lhs - (2.0 * rhs - a0)) / std::max(1.0, lhs));
                    if (trial == 0) {
                        const auto [l0, r0] = fejer_square(n, 0.0);
                        const double peak = std::pow((2 * n + 1) * (2 * n + 2) / 2.0, 2);
                        worst = std::max(worst, std::abs(l0 - peak) / peak);
                        worst = std::max(worst, std::abs((2.0 * r0 - a0) - peak) / peak);
                    }
                }
            }
            out.checks.push_back(detail::bounded_check(
                "squared-modulus sweep: |sum|^2 = 2 sum alpha_k cos - alpha_0 (rel)", worst, 1e-9,
                exact_ok ? "halved-coefficient convention confirmed; alpha_0 = sum of squares"
                         : "alpha_0 defining-sum mismatch"));
            if (!exact_ok) out.checks.back().passed = false;
        }
        { // product identity of the volume chain, exact
            bool ok = sphere_ball_factor(1) == PiScaled(BigRational(4, 3), 2) &&
                      boundary_norm_integral(1) ==
                          PiScaled(BigRational(pow2(16) * factorial(6) * factorial(8),
                                               BigInt(3) * factorial(16)),
                                   2);
            for (int n = 1; n <= 4 && ok; ++n) {
                if (sphere_ball_factor(n) * radial_integral(n) != boundary_norm_integral(n)) {
                    ok = false;
                }
            }
            out.checks.push_back(detail::exact_check(
                "volume-chain product identity: ball factor * radial factor = boundary norm "
                "(orders 1..4)",
                ok));
        }
        { // closed-form kernel profile vs high-order finite differencing
            double worst = 0.0;
            testrand::Draw draw(seed, 13);
            for (int n = 1; n <= 2; ++n) {
                for (int trial = 0; trial < 50; ++trial) {
                    const double radius = draw.range(0.5, 4.0);
                    const Quaternion<double> sigma = draw.quat_with_radius(radius);
                    const double h = 0.04 * qabs(sigma);
                    const int halfwidth = 6;
                    std::vector<double> nodes;
                    nodes.reserve(2 * halfwidth + 1);
                    for (int i = -halfwidth; i <= halfwidth; ++i) {
                        nodes.push_back(sigma.x1 + i * h);
                    }
                    const std::vector<double> wts = fornberg_weights(sigma.x1, nodes, 2 * n);
                    Quaternion<double> fd = Quaternion<double>::zero();
                    for (std::size_t i = 0; i < nodes.size(); ++i) {
                        Quaternion<double> at = sigma;
                        at.x1 = nodes[i];
                        const double inv_n4 = 1.0 / (qnormsq(at) * qnormsq(at));
                        fd = fd + (wts[i] * inv_n4) * qconj(at);
                    }
                    const Quaternion<double> closed = s_unnorm(sigma, n);
                    worst = std::max(worst, qabs(fd - closed) / qabs(closed));
                }
            }
            out.checks.push_back(detail::bounded_check(
                "closed-form kernel profile vs 2n-fold finite differencing, 50 arguments each "
                "for orders 1 and 2 (rel)",
                worst, 1e-5, "13-point stencil, step 0.04|arg|"));
        }
    });
}

// ---------------------------------------------------------------------------
// Regularity suite: the kernel solves the Cauchy-Fueter system in every
// q-slot; the conjugate operator annihilates the p-slots; pullbacks by the
// symmetry group preserve regularity; the operator is right-linear.
// ---------------------------------------------------------------------------
inline SuiteResult suite_regularity(int n, std::uint64_t seed = 0x9e61u) {
    return detail::timed_suite("regularity", [n, seed](SuiteResult& out) {
        if (n < 0) throw RangeError("regularity suite requires n >= 0");
        const KernelContext ctx(n);
        const FDScheme scheme = FDScheme::order4_auto();

        { // kernel regular in q at 20 random interior pairs
            double worst = 0.0;
            testrand::Draw draw(seed, 21);
            for (int trial = 0; trial < 20; ++trial) {
                const SiegelPoint<double> q =
                    draw.interior_point(ctx.m, 0.8, 1.6, 0.5, 0.5);
                const SiegelPoint<double> p =
                    draw.interior_point(ctx.m, 0.8, 1.6, 0.5, 0.5);
                QFunction f;
                f.eval = [p, &ctx](const SiegelPoint<double>& x) {
                    return kernel_S(x, p, ctx, Normalization::unnormalized);
                };
                worst = std::max(worst, regularity_residual(f, {q}, scheme));
            }
            out.checks.push_back(detail::bounded_check(
                "kernel satisfies the Cauchy-Fueter system in q (20 random interior pairs)",
                worst, 1e-6, "order-4 scheme, automatic step"));
        }
        { // conjugate operator annihilates the p-slots
            double worst = 0.0;
            testrand::Draw draw(seed, 22);
            for (int trial = 0; trial < 5; ++trial) {
                const SiegelPoint<double> q =
                    draw.interior_point(ctx.m, 0.8, 1.6, 0.5, 0.5);
                const SiegelPoint<double> p =
                    draw.interior_point(ctx.m, 0.8, 1.6, 0.5, 0.5);
                QFunction g;
                g.eval = [q, &ctx](const SiegelPoint<double>& pv) {
                    return kernel_S(q, pv, ctx, Normalization::unnormalized);
                };
                for (std::size_t l = 0; l <= p.m(); ++l) {
                    worst = std::max(worst, qabs(cf(g, p, l, scheme)));
                }
            }
            out.checks.push_back(detail::bounded_check(
                "conjugate operator annihilates the kernel's second argument", worst, 1e-6));
        }
        { // symmetry pullbacks preserve regularity
            double worst = 0.0;
            testrand::Draw draw(seed, 23);
            const SiegelPoint<double> p0 = draw.interior_point(ctx.m, 0.9, 1.4, 0.4, 0.4);
            const auto base = [p0, &ctx](const SiegelPoint<double>& x) {
                return kernel_S(x, p0, ctx, Normalization::unnormalized);
            };
            std::vector<SiegelPoint<double>> probes;
            for (int i = 0; i < 3; ++i) {
                probes.push_back(draw.interior_point(ctx.m, 0.9, 1.5, 0.3, 0.3));
            }
            const SiegelPoint<double> pb = lift(draw.boundary_element(ctx.m, 0.6));
            QFunction f_tau;
            f_tau.eval = [base, pb](const SiegelPoint<double>& x) {
                return base(translate(pb, x));
            };
            worst = std::max(worst, regularity_residual(f_tau, probes, scheme));
            if (ctx.m >= 1) {
                const QuatMatrix<double> a = draw.sp_matrix(ctx.m);
                QFunction f_rot;
                f_rot.eval = [base, a](const SiegelPoint<double>& x) {
                    return base(rotate_a(a, x));
                };
                worst = std::max(worst, regularity_residual(f_rot, probes, scheme));
            }
            const Quaternion<double> sigma = draw.unit_quat();
            QFunction f_sigma;
            f_sigma.eval = [base, sigma](const SiegelPoint<double>& x) {
                return qmul(sigma, base(rotate_sigma(sigma, x)));
            };
            worst = std::max(worst, regularity_residual(f_sigma, probes, scheme));
            const double r = draw.range(0.6, 1.8);
            QFunction f_dil;
            f_dil.eval = [base, r](const SiegelPoint<double>& x) { return base(dilate(r, x)); };
            worst = std::max(worst, regularity_residual(f_dil, probes, scheme));
            out.checks.push_back(detail::bounded_check(
                "translation/rotation/dilation pullbacks of a regular function stay regular",
                worst, 1e-6));
        }
        { // right quaternionic linearity of the operator
            double worst = 0.0;
            testrand::Draw draw(seed, 24);
            for (int trial = 0; trial < 10; ++trial) {
                const SiegelPoint<double> q =
                    draw.interior_point(ctx.m, 0.8, 1.6, 0.5, 0.5);
                const Quaternion<double> sigma = draw.quat(1.5);
                QFunction f;
                f.eval = [](const SiegelPoint<double>& x) { return qconj(x.q1); };
                QFunction fs;
                fs.eval = [sigma](const SiegelPoint<double>& x) {
                    return qmul(qconj(x.q1), sigma);
                };
                const Quaternion<double> lhs = cf_bar(fs, q, 0, scheme);
                const Quaternion<double> rhs = qmul(cf_bar(f, q, 0, scheme), sigma);
                worst = std::max(worst, qabs(lhs - rhs));
            }
            out.checks.push_back(detail::bounded_check(
                "operator is right quaternionic linear: D(f sigma) = (D f) sigma", worst, 1e-9));
        }
    });
}

// ---------------------------------------------------------------------------
// Invariance suite: the four two-point identities, kernel symmetry, and
// real-axis reality, all pointwise with the closed form.
// ---------------------------------------------------------------------------
inline SuiteResult suite_invariance(int n, std::uint64_t seed = 0x1a5u) {
    return detail::timed_suite("invariance", [n, seed](SuiteResult& out) {
        if (n < 0) throw RangeError("invariance suite requires n >= 0");
        const KernelContext ctx(n);
        const int weight = 4 * n + 6;
        double worst_tau = 0.0, worst_rot = 0.0, worst_sigma = 0.0, worst_dil = 0.0,
               worst_sym = 0.0;
        testrand::Draw draw(seed, 31);
        for (int trial = 0; trial < 20; ++trial) {
            const SiegelPoint<double> q = draw.interior_point(ctx.m, 0.8, 1.6, 0.5, 0.5);
            const SiegelPoint<double> Q = draw.interior_point(ctx.m, 0.8, 1.6, 0.5, 0.5);
            const Quaternion<double> base =
                kernel_S(q, Q, ctx, Normalization::unnormalized);
            const double scale = qabs(base);

            const SiegelPoint<double> pb = lift(draw.boundary_element(ctx.m, 0.7));
            const Quaternion<double> v_tau = kernel_S(translate(pb, q), translate(pb, Q), ctx,
                                                      Normalization::unnormalized);
            worst_tau = std::max(worst_tau, qabs(v_tau - base) / scale);

            if (ctx.m >= 1) {
                const QuatMatrix<double> a = draw.sp_matrix(ctx.m);
                const Quaternion<double> v_rot = kernel_S(rotate_a(a, q), rotate_a(a, Q), ctx,
                                                          Normalization::unnormalized);
                worst_rot = std::max(worst_rot, qabs(v_rot - base) / scale);
            }

            const Quaternion<double> sg = draw.unit_quat();
            const Quaternion<double> v_sig =
                kernel_S(rotate_sigma(sg, q), rotate_sigma(sg, Q), ctx,
                         Normalization::unnormalized);
            const Quaternion<double> wrapped = qmul(qmul(sg, v_sig), qconj(sg));
            worst_sigma = std::max(worst_sigma, qabs(wrapped - base) / scale);

            const double r = draw.range(0.5, 2.0);
            const Quaternion<double> v_dil =
                kernel_S(dilate(r, q), dilate(r, Q), ctx, Normalization::unnormalized);
            worst_dil =
                std::max(worst_dil, qabs(std::pow(r, weight) * v_dil - base) / scale);

            const Quaternion<double> swapped =
                kernel_S(Q, q, ctx, Normalization::unnormalized);
            worst_sym = std::max(worst_sym, qabs(qconj(swapped) - base) / scale);
        }
        out.checks.push_back(detail::bounded_check(
            "kernel invariant under boundary translation of both arguments (rel)", worst_tau,
            1e-10));
        if (ctx.m >= 1) {
            out.checks.push_back(detail::bounded_check(
                "kernel invariant under symplectic rotation of both arguments (rel)", worst_rot,
                1e-10));
        }
        out.checks.push_back(detail::bounded_check(
            "unit-quaternion rotation conjugates the kernel: sigma S sigma-bar = S (rel)",
            worst_sigma, 1e-10));
        out.checks.push_back(detail::bounded_check(
            "dilation weight r^(4n+6) restores the kernel (rel)", worst_dil, 1e-10));
        out.checks.push_back(detail::bounded_check(
            "kernel symmetry S(q,p) = conj(S(p,q)) (rel)", worst_sym, 1e-12));
        { // real-axis reality
            double worst = 0.0;
            testrand::Draw draw2(seed, 32);
            for (int trial = 0; trial < 20; ++trial) {
                const double x = draw2.range(0.2, 3.0);
                const Quaternion<double> s = s_unnorm(Quaternion<double>(x), n);
                worst = std::max(worst, std::abs(s.x2) + std::abs(s.x3) + std::abs(s.x4));
            }
            out.checks.push_back(detail::bounded_check(
                "kernel profile is real on the positive real axis", worst, 1e-15));
        }
    });
}

// ---------------------------------------------------------------------------
// Slice/ODE suite: the complex-slice components, the angular ODE pair,
// parity, homogeneity, and rotation covariance.
// ---------------------------------------------------------------------------
inline SuiteResult suite_ode(int n, std::uint64_t seed = 0x0d3u) {
    return detail::timed_suite("ode", [n, seed](SuiteResult& out) {
        if (n < 0) throw RangeError("ode suite requires n >= 0");
        { // slice components 3 and 4 vanish
            double worst = 0.0;
            testrand::Draw draw(seed, 41);
            for (int trial = 0; trial < 50; ++trial) {
                const double r = draw.range(0.3, 3.0);
                const double phi = draw.range(-3.1, 3.1);
                const auto f = slice_components(r * std::cos(phi), r * std::sin(phi), n);
                worst = std::max(worst, std::abs(f[2]) + std::abs(f[3]));
            }
            out.checks.push_back(detail::bounded_check(
                "complex-slice components f3, f4 vanish identically", worst, 1e-12));
        }
        { // angular ODE residuals on the grid
            double worst1 = 0.0, worst2 = 0.0;
            for (int i = 0; i <= 48; ++i) {
                const double theta = -1.2 + 2.4 * i / 48.0;
                const auto [r1, r2] = ode_residuals(theta, n);
                worst1 = std::max(worst1, std::abs(r1));
                worst2 = std::max(worst2, std::abs(r2));
            }
            out.checks.push_back(detail::bounded_check(
                "first angular ODE residual on 49-point grid in (-1.2, 1.2)", worst1, 1e-6,
                "g1' = (2n+1) g2, order-4 differences, step 1e-3"));
            out.checks.push_back(detail::bounded_check(
                "second angular ODE residual on the same grid", worst2, 1e-6,
                "sin(t) g2' + 2 g2 cos(t) + (2n+3) g1 sin(t) = 0"));
        }
        { // anchors: value at the real point, vanishing of g2 at 0
            const auto f0 = slice_components(1.0, 0.0, n);
            const double expect = to_double(BigRational(factorial(2 * n + 2), 2));
            double worst = std::abs(f0[0] - expect) / expect;
            worst = std::max(worst, std::abs(f0[1]) + std::abs(f0[2]) + std::abs(f0[3]));
            if (n == 1) {
                const auto fi = slice_components(0.0, 1.0, 1);
                worst = std::max(worst, std::abs(fi[0]) + std::abs(fi[1] - 4.0) +
                                            std::abs(fi[2]) + std::abs(fi[3]));
            }
            out.checks.push_back(detail::bounded_check(
                "slice anchors: f(1,0) = ((2n+2)!/2, 0, 0, 0); f(0,1) = (0,4,0,0) at order 1",
                worst, 1e-12));
        }
        { // parity across the grid
            double worst = 0.0;
            for (int i = 1; i <= 24; ++i) {
                const double theta = 1.2 * i / 24.0;
                const auto gp = slice_components(std::cos(theta), std::sin(theta), n);
                const auto gm = slice_components(std::cos(-theta), std::sin(-theta), n);
                const double scale = std::abs(gp[0]) + std::abs(gp[1]) + 1.0;
                worst = std::max(worst, (std::abs(gp[0] - gm[0]) + std::abs(gp[1] + gm[1])) /
                                            scale);
            }
            out.checks.push_back(detail::bounded_check(
                "slice parity: g1 even, g2 odd (rel)", worst, 1e-12));
        }
        { // homogeneity
            double worst = 0.0;
            testrand::Draw draw(seed, 42);
            for (int trial = 0; trial < 20; ++trial) {
                const double r = draw.range(0.3, 2.5);
                const Quaternion<double> sigma = draw.quat_with_radius(draw.range(0.4, 3.0));
                const Quaternion<double> lhs = s_unnorm(r * sigma, n);
                const Quaternion<double> rhs =
                    std::pow(r, -(2.0 * n + 3.0)) * s_unnorm(sigma, n);
                worst = std::max(worst, qabs(lhs - rhs) / qabs(rhs));
            }
            out.checks.push_back(detail::bounded_check(
                "profile homogeneity of degree -(2n+3) (rel)", worst, 1e-10));
        }
        { // rotation covariance
            double worst = 0.0;
            testrand::Draw draw(seed, 43);
            for (int trial = 0; trial < 20; ++trial) {
                const Quaternion<double> sg = draw.unit_quat();
                const Quaternion<double> q = draw.quat_with_radius(draw.range(0.4, 3.0));
                const Quaternion<double> lhs = s_unnorm(qmul(qmul(qconj(sg), q), sg), n);
                const Quaternion<double> rhs = qmul(qmul(qconj(sg), s_unnorm(q, n)), sg);
                worst = std::max(worst, qabs(lhs - rhs) / qabs(rhs));
            }
            out.checks.push_back(detail::bounded_check(
                "profile rotation covariance s(conj(u) q u) = conj(u) s(q) u (rel)", worst,
                1e-10));
        }
    });
}

// ---------------------------------------------------------------------------
// Reproducing-property suite (orders 0 and 1): measure the empirical
// normalization, then verify the projection reproduces kernel sections at
// random interior probe pairs.
// ---------------------------------------------------------------------------

namespace detail {

// Relative reproduction residual at one probe pair: compares c * integral of
// s(arg(q0, Q)) s(arg(Q, p0)) over the boundary against the section value at
// q0.
inline double probe_residual(int n, const SiegelPoint<double>& q0, const SiegelPoint<double>& p0,
                             double c_value, const QuadratureSpec& spec) {
    const int m = static_cast<int>(q0.m());
    const Quaternion<double> expected = s_unnorm(kernel_arg(q0, p0).sigma, n);
    const BoundaryFunction integrand = [&](const HeisenbergElement<double>& h) {
        const SiegelPoint<double> Q = lift(h);
        const Quaternion<double> left = s_unnorm(kernel_arg(q0, Q).sigma, n);
        const Quaternion<double> right = s_unnorm(kernel_arg(Q, p0).sigma, n);
        return qmul(left, right);
    };
    const IntegralResult res = integrate_boundary_report(integrand, m, spec);
    return qabs(c_value * res.value - expected) / qabs(expected);
}

} // namespace detail

inline SuiteResult suite_reproduce(int n, const QuadratureSpec& spec,
                                   std::uint64_t seed = 20240816u) {
    if (n != 0 && n != 1) {
        throw RangeError("reproduce suite supports orders 0 and 1 (higher orders exceed the "
                         "practical grid dimension)");
    }
    return detail::timed_suite("reproduce", [n, &spec, seed](SuiteResult& out) {
        spec.validate();
        const double pi = 3.14159265358979323846264338327950288;

        // Empirical constant on a symmetry-reduced grid (refined relative to
        // the probe grid: the reduced integral is 1- or 2-dimensional).
        QuadratureSpec cspec = spec;
        cspec.radial_nodes = std::max(spec.radial_nodes, n == 0 ? 160 : 140);
        cspec.angular_nodes = std::max(spec.angular_nodes, 140);
        const CEmpResult ce = c_emp_report(n, cspec);

        if (n == 0) {
            const double expected = 1.0 / (2.0 * pi * pi);
            out.checks.push_back(detail::bounded_check(
                "empirical constant at order 0 equals 1/(2 pi^2) (rel)",
                std::abs(ce.value - expected) / expected, 1e-6,
                "measured " + detail::fmt(ce.value) + ", expected " + detail::fmt(expected)));
        } else {
            const double cp = c_exact(1).to_float();
            const double ratio = ce.value / cp;
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "empirical %.9g vs closed-form %.9g; ratio %.6f (archived, no asserted "
                          "value)",
                          ce.value, cp, ratio);
            CheckResult info;
            info.name = "empirical/closed-form constant ratio at order 1 (reported, 6 digits)";
            info.passed = std::isfinite(ratio) && ratio > 0.0;
            info.measured = ratio;
            info.threshold = 0.0;
            info.detail = buf;
            out.checks.push_back(info);
        }

        // Probe pairs. The full-boundary tensor grid has 3 + 4n axes; at
        // order 1 the node count is capped to keep the 7-dimensional grid at
        // desk scale.
        QuadratureSpec pspec = spec;
        if (n == 1) pspec.radial_nodes = std::min(spec.radial_nodes, 13);
        // The probes assert 1e-3; keep the truncation-shell guard an order
        // below that instead of the global default, which is sized for the
        // refined constant grids above (a 13-node axis only reaches |x|~31,
        // where the kernel-product tail share sits near 1e-6 and would trip
        // on unlucky probe configurations).
        pspec.target_rel_tol = std::max(spec.target_rel_tol, 1e-4);
        double worst = 0.0;
        testrand::Draw draw(seed, 51);
        std::ostringstream residuals;
        for (int trial = 0; trial < 5; ++trial) {
            const SiegelPoint<double> q0 = draw.interior_point(n, 0.9, 1.3, 0.2, 0.15);
            const SiegelPoint<double> p0 = draw.interior_point(n, 0.9, 1.3, 0.2, 0.15);
            const double r = detail::probe_residual(n, q0, p0, ce.value, pspec);
            residuals << (trial ? ", " : "") << detail::fmt(r);
            worst = std::max(worst, r);
        }
        out.checks.push_back(detail::bounded_check(
            "projection reproduces kernel sections at 5 interior probe pairs (rel)", worst, 1e-3,
            "per-pair residuals: " + residuals.str()));

        { // zero boundary data projects to zero
            const BoundaryFunction zero = [](const HeisenbergElement<double>&) {
                return Quaternion<double>::zero();
            };
            QuadratureSpec zspec = pspec;
            zspec.radial_nodes = std::min(pspec.radial_nodes, 6);
            const Quaternion<double> v = integrate_boundary(zero, n, zspec);
            out.checks.push_back(detail::bounded_check(
                "zero boundary data projects to zero", qabs(v), 1e-300));
            out.checks.back().passed = qabs(v) == 0.0;
        }

        if (n == 1) {
            // Monte Carlo vs tensor grid on the normalization integral
            // A = int |s(1 + conj(Q1))|^2 dbeta over the 7-dimensional
            // boundary; agreement within combined error estimates.
            const BoundaryFunction norm_integrand = [](const HeisenbergElement<double>& h) {
                const Quaternion<double> sigma =
                    Quaternion<double>::one() + qconj(lift(h).q1);
                return Quaternion<double>(qnormsq(s_unnorm(sigma, 1)));
            };
            QuadratureSpec tspec = pspec;
            const IntegralResult tensor = integrate_boundary_report(norm_integrand, 1, tspec);
            QuadratureSpec mspec = spec;
            mspec.method = QuadratureMethod::monte_carlo;
            const IntegralResult mc = integrate_boundary_report(norm_integrand, 1, mspec);
            const double diff = std::abs(tensor.value.x1 - mc.value.x1);
            const double combined =
                4.0 * (tensor.abs_error_estimate + mc.abs_error_estimate) +
                1e-6 * std::abs(tensor.value.x1);
            char buf[200];
            std::snprintf(buf, sizeof(buf),
                          "tensor %.8g (est +/- %.2g), Monte Carlo %.8g (est +/- %.2g), %lld "
                          "samples",
                          tensor.value.x1, tensor.abs_error_estimate, mc.value.x1,
                          mc.abs_error_estimate, static_cast<long long>(mspec.mc_samples));
            out.checks.push_back(detail::bounded_check(
                "Monte Carlo and tensor paths agree on the normalization integral", diff,
                combined, buf));
        }
    });
}

// ---------------------------------------------------------------------------
// Negative control: running the order-2 kernel over the m = 1 boundary (the
// mismatched index convention) must fail scale consistency, while the matched
// order-1 kernel over the same boundary passes it.
// ---------------------------------------------------------------------------
inline SuiteResult suite_negative_control(std::uint64_t seed = 4242u) {
    return detail::timed_suite("negative-control", [seed](SuiteResult& out) {
        QuadratureSpec spec;
        spec.method = QuadratureMethod::tensor_gauss;
        // 14 nodes per axis: the dilation-1.6 configurations spread the
        // kernel peak by 2.56, and the vertical-axis tail share at the
        // 12-node reach (|x| ~ 27) sits at 2.3e-4, over the guard below;
        // 14 nodes reach |x| ~ 36, pushing it under 2e-5.
        spec.radial_nodes = 14;
        spec.truncation_radius = 1.0;
        spec.target_rel_tol = 1e-4;

        testrand::Draw draw(seed, 61);
        const SiegelPoint<double> q0 = draw.interior_point(1, 0.9, 1.3, 0.2, 0.15);
        const SiegelPoint<double> p0 = draw.interior_point(1, 0.9, 1.3, 0.2, 0.15);
        const std::vector<double> r_list = {1.0, 1.3, 1.6};

        // ratio(r): the constant that would make the projection reproduce the
        // kernel section after dilating the whole configuration by r. For a
        // self-consistent convention it is r-independent.
        const auto measure = [&](int order, double r) {
            const SiegelPoint<double> qr = dilate(r, q0);
            const SiegelPoint<double> pr = dilate(r, p0);
            const Quaternion<double> expected = s_unnorm(kernel_arg(qr, pr).sigma, order);
            const BoundaryFunction integrand = [&](const HeisenbergElement<double>& h) {
                const SiegelPoint<double> Q = lift(h);
                return qmul(s_unnorm(kernel_arg(qr, Q).sigma, order),
                            s_unnorm(kernel_arg(Q, pr).sigma, order));
            };
            const IntegralResult res = integrate_boundary_report(integrand, 1, spec);
            // projection along the real component of the quaternion ratio
            const Quaternion<double> inv = qinv(res.value);
            return re(qmul(expected, inv));
        };

        std::vector<double> mismatched, matched;
        for (const double r : r_list) mismatched.push_back(measure(2, r));
        for (const double r : r_list) matched.push_back(measure(1, r));

        const auto minmax_mis = std::minmax_element(mismatched.begin(), mismatched.end());
        const double variation = *minmax_mis.second / *minmax_mis.first;
        {
            char buf[240];
            std::snprintf(buf, sizeof(buf),
                          "constants needed at scales 1.0/1.3/1.6: %.6g / %.6g / %.6g; "
                          "fitted scale exponent %.3f",
                          mismatched[0], mismatched[1], mismatched[2],
                          std::log(mismatched[2] / mismatched[0]) / std::log(1.6));
            CheckResult c;
            c.name = "order-2 kernel over the 1-coordinate boundary FAILS scale consistency";
            c.measured = variation;
            c.threshold = 2.0;
            c.passed = std::isfinite(variation) && variation > 2.0;
            c.detail = buf;
            out.checks.push_back(c);
        }
        {
            double worst = 0.0;
            for (std::size_t i = 0; i < r_list.size(); ++i) {
                // the needed constant grows like r^4; dividing that out must
                // collapse the three scales onto one value
                const double compensated = mismatched[i] / std::pow(r_list[i], 4.0);
                worst = std::max(worst, std::abs(compensated / (mismatched[0]) - 1.0));
            }
            out.checks.push_back(detail::bounded_check(
                "the failure factor is systematic: r^4-compensated constants agree within 10%",
                worst, 0.10,
                "dimension deficit 4 = (4n+6) - (6+4m) for n=2, m=1"));
        }
        {
            const auto minmax_ok = std::minmax_element(matched.begin(), matched.end());
            const double spread = *minmax_ok.second / *minmax_ok.first - 1.0;
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "constants at scales 1.0/1.3/1.6: %.6g / %.6g / %.6g",
                          matched[0], matched[1], matched[2]);
            out.checks.push_back(detail::bounded_check(
                "matched order-1 kernel over the same boundary IS scale consistent (spread)",
                spread, 0.05, buf));
        }
    });
}

// ---------------------------------------------------------------------------
// Group/measure suite: exact group axioms in rational arithmetic, and
// translation invariance of the boundary measure on a compactly supported
// test function.
// ---------------------------------------------------------------------------
inline SuiteResult suite_group_measure(std::uint64_t seed = 0x6e0u) {
    return detail::timed_suite("group-measure", [seed](SuiteResult& out) {
        { // exact group axioms over the rationals
            testrand::Draw draw(seed, 71);
            const auto rand_rat = [&draw]() {
                const long long num = draw.integer(-24, 24);
                const long long den = draw.integer(1, 12);
                return BigRational(num, den);
            };
            const auto rand_quat = [&]() {
                return Quaternion<BigRational>(rand_rat(), rand_rat(), rand_rat(), rand_rat());
            };
            const auto rand_elem = [&](int m) {
                HVector<BigRational> zp(static_cast<std::size_t>(m));
                for (auto& z : zp) z = rand_quat();
                return HeisenbergElement<BigRational>(rand_quat(), std::move(zp));
            };
            bool ok = true;
            const int m = 2;
            const auto e = HeisenbergElement<BigRational>::identity(m);
            for (int trial = 0; trial < 200 && ok; ++trial) {
                const auto a = rand_elem(m);
                const auto b = rand_elem(m);
                const auto c = rand_elem(m);
                const auto ab_c = h_mul(h_mul(a, b), c);
                const auto a_bc = h_mul(a, h_mul(b, c));
                if (!(ab_c.w == a_bc.w) || ab_c.zprime != a_bc.zprime) ok = false;
                const auto ae = h_mul(a, e);
                const auto ea = h_mul(e, a);
                if (!(ae.w == a.w) || ae.zprime != a.zprime) ok = false;
                if (!(ea.w == a.w) || ea.zprime != a.zprime) ok = false;
                const auto ai = h_mul(a, h_inv(a));
                if (!(ai.w == Quaternion<BigRational>::zero()) || ai.zprime != e.zprime)
                    ok = false;
                if (!(ab_c.w.x1 == BigRational(0))) ok = false; // stays pure imaginary
            }
            out.checks.push_back(detail::exact_check(
                "group axioms (associativity, identity, inverse) exact over rationals, 200 "
                "triples",
                ok));
        }
        { // measure invariance under left translation
            const double support = 1.8;
            const auto bump = [support](const HeisenbergElement<double>& g) {
                double u = qnormsq(g.w);
                for (const auto& z : g.zprime) u += qnormsq(z);
                u /= support * support;
                if (u >= 1.0) return Quaternion<double>::zero();
                const double b = std::pow(1.0 - u, 12);
                return Quaternion<double>(b);
            };
            HeisenbergElement<double> shift;
            shift.w = Quaternion<double>(0.0, 0.3, -0.2, 0.25);
            shift.zprime = {Quaternion<double>(0.2, -0.1, 0.15, 0.1)};
            const BoundaryFunction translated = [&](const HeisenbergElement<double>& g) {
                return bump(h_mul(shift, g));
            };
            QuadratureSpec spec;
            spec.method = QuadratureMethod::tensor_gauss;
            spec.radial_nodes = 16;
            spec.truncation_radius = 1.0;
            spec.target_rel_tol = 1e-4;
            const BoundaryFunction plain = bump;
            const double i0 = integrate_boundary(plain, 1, spec).x1;
            const double ih = integrate_boundary(translated, 1, spec).x1;
            out.checks.push_back(detail::bounded_check(
                "boundary measure is invariant under left group translation (rel)",
                std::abs(ih - i0) / std::abs(i0), 5e-3,
                "compactly supported polynomial bump; plain " + detail::fmt(i0) +
                    ", translated " + detail::fmt(ih)));
        }
        { // rotation spot check helper on a rotation-invariant integrand
            const BoundaryFunction radial = [](const HeisenbergElement<double>& g) {
                return Quaternion<double>(1.0 /
                                          std::pow(1.0 + qnormsq(g.w) + hnormsq(g.zprime), 6));
            };
            const double disc = rotation_symmetry_check(radial, 1, seed);
            out.checks.push_back(detail::bounded_check(
                "rotation spot check reports no asymmetry for a radial integrand", disc, 1e-12));
        }
    });
}

// CLI dispatcher over the named suites.
inline SuiteResult run_suite(const std::string& name, int n, const QuadratureSpec& spec,
                             std::uint64_t seed) {
    if (name == "regularity") return suite_regularity(n, seed);
    if (name == "invariance") return suite_invariance(n, seed);
    if (name == "ode") return suite_ode(n, seed);
    if (name == "oracle") {
        SuiteResult merged = detail::timed_suite("oracle", [seed](SuiteResult& out) {
            SuiteResult consts = suite_constants();
            SuiteResult oracle = suite_oracle(seed);
            out.checks.insert(out.checks.end(), consts.checks.begin(), consts.checks.end());
            out.checks.insert(out.checks.end(), oracle.checks.begin(), oracle.checks.end());
        });
        return merged;
    }
    if (name == "reproduce") return suite_reproduce(n, spec, seed);
    throw RangeError("unknown suite: expected one of regularity, invariance, ode, oracle, "
                     "reproduce");
}

} // namespace qszego
