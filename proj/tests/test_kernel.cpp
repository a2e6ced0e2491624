#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qszego/kernel.hpp"
#include "qszego/rational.hpp"

using namespace qszego;

using QD = Quaternion<double>;

TEST_CASE("profile anchors on the real axis and the imaginary unit") {
    // s(1) = (2n+2)!/2 for every order
    for (int n = 0; n <= 4; ++n) {
        const QD v = s_unnorm(QD::one(), n);
        const double expected = to_double(BigRational(factorial(2 * n + 2), 2));
        CHECK(v.x1 == Catch::Approx(expected));
        CHECK(std::abs(v.x2) + std::abs(v.x3) + std::abs(v.x4) < 1e-12 * expected);
    }
    // homogeneity pins s(2) = 2^(-(2n+3)) s(1); order 1: 12/32 = 3/8
    const QD v2 = s_unnorm(QD(2.0), 1);
    CHECK(v2.x1 == Catch::Approx(3.0 / 8.0));
    // order 1 at the imaginary unit: s(i) = 4i
    const QD vi = s_unnorm(QD(0, 1, 0, 0), 1);
    CHECK(vi.x2 == Catch::Approx(4.0));
    CHECK(std::abs(vi.x1) + std::abs(vi.x3) + std::abs(vi.x4) < 1e-12);
}

TEST_CASE("profile homogeneity and rotation covariance") {
    const QD sigma(0.7, -0.4, 1.1, 0.3);
    for (int n : {0, 1, 2, 3}) {
        const double r = 1.37;
        const QD lhs = s_unnorm(r * sigma, n);
        const QD rhs = std::pow(r, -(2.0 * n + 3.0)) * s_unnorm(sigma, n);
        CHECK(qabs(lhs - rhs) <= 1e-12 * qabs(rhs));

        const QD u = (1.0 / std::sqrt(3.0)) * QD(1, 1, 0, 1);
        const QD cov_lhs = s_unnorm(qmul(qmul(qconj(u), sigma), u), n);
        const QD cov_rhs = qmul(qmul(qconj(u), s_unnorm(sigma, n)), u);
        CHECK(qabs(cov_lhs - cov_rhs) <= 1e-12 * qabs(cov_rhs));
    }
}

TEST_CASE("singular arguments are rejected") {
    CHECK_THROWS_AS(s_unnorm(QD::zero(), 1), Singular);
    CHECK_THROWS_AS(s_unnorm(QD(1e-200, 0, 0, 0), 1, 1e-150), Singular);
}

TEST_CASE("composite argument: standard pairing") {
    HVector<double> qp = {QD(0.2, 0.1, 0.0, -0.1)};
    HVector<double> pp = {QD(-0.1, 0.3, 0.2, 0.0)};
    const SiegelPoint<double> q(QD(1.5, 0.2, -0.1, 0.3), qp);
    const SiegelPoint<double> p(QD(1.2, -0.4, 0.2, 0.1), pp);

    const QD sigma = kernel_arg(q, p).sigma;
    const QD manual = q.q1 + qconj(p.q1) - 2.0 * qmul(qconj(pp[0]), qp[0]);
    CHECK(qabs(sigma - manual) < 1e-15);
    CHECK(sigma.x1 > 0.0); // interior pairs keep the argument in the right half space

    // the alternate difference pairing, kept for cross-checks only
    const QD sigma_diff = kernel_arg(q, p, ArgConvention::difference).sigma;
    const QD manual_diff = q.q1 - qconj(p.q1) - 2.0 * qmul(qconj(pp[0]), qp[0]);
    CHECK(qabs(sigma_diff - manual_diff) < 1e-15);

    CHECK_THROWS_AS(kernel_arg(q, SiegelPoint<double>(QD(1.0), HVector<double>{})),
                    SizeMismatch);
}

TEST_CASE("two-point kernel: normalization modes") {
    HVector<double> qp = {QD(0.2, 0.1, 0.0, -0.1)};
    HVector<double> pp = {QD(-0.1, 0.3, 0.2, 0.0)};
    const SiegelPoint<double> q(QD(1.5, 0.2, -0.1, 0.3), qp);
    const SiegelPoint<double> p(QD(1.2, -0.4, 0.2, 0.1), pp);

    KernelContext ctx(1);
    const QD raw = kernel_S(q, p, ctx, Normalization::unnormalized);
    const QD withc = kernel_S(q, p, ctx, Normalization::exact);
    CHECK(qabs(withc - ctx.c_norm_float * raw) <= 1e-15 * qabs(withc));

    CHECK_THROWS_AS(kernel_S(q, p, ctx, Normalization::empirical), RangeError);
    ctx.c_emp = 0.5;
    const QD withe = kernel_S(q, p, ctx, Normalization::empirical);
    CHECK(qabs(withe - 0.5 * raw) <= 1e-15 * qabs(withe));

    // symmetry in exchange of the arguments
    const QD swapped = kernel_S(p, q, ctx, Normalization::exact);
    CHECK(qabs(withc - qconj(swapped)) <= 1e-12 * qabs(withc));
}

TEST_CASE("closed-form constant is unavailable below order one") {
    const KernelContext ctx(0);
    CHECK_FALSE(ctx.c_norm_exact.has_value());
    const SiegelPoint<double> q(QD(1.5, 0.2, -0.1, 0.3), {});
    const SiegelPoint<double> p(QD(1.2, -0.4, 0.2, 0.1), {});
    CHECK_THROWS_AS(kernel_S(q, p, ctx, Normalization::exact), RangeError);
    CHECK_NOTHROW(kernel_S(q, p, ctx, Normalization::unnormalized));
}

TEST_CASE("kernel singularity guard uses the scale of the points") {
    // q on the boundary, p = q: the argument vanishes identically
    HVector<double> zp = {QD(0.5, 0.0, 0.0, 0.0)};
    const SiegelPoint<double> b(QD(hnormsq(zp), 1.0, 0.0, 0.0), zp);
    KernelContext ctx(1);
    CHECK_THROWS_AS(kernel_S(b, b, ctx, Normalization::unnormalized), Singular);
}

TEST_CASE("complex-slice components vanish outside the slice plane") {
    for (int n : {0, 1, 2}) {
        for (double x1 : {0.4, -0.8, 1.3}) {
            for (double x2 : {0.6, -1.1}) {
                const auto f = slice_components(x1, x2, n);
                CHECK(std::abs(f[2]) < 1e-12);
                CHECK(std::abs(f[3]) < 1e-12);
            }
        }
    }
    const auto fi = slice_components(0.0, 1.0, 1);
    CHECK(fi[0] == Catch::Approx(0.0).margin(1e-12));
    CHECK(fi[1] == Catch::Approx(4.0));
}

TEST_CASE("angular residual evaluation respects the stencil margin") {
    CHECK_THROWS_AS(ode_residuals(1.5707, 1), DomainMargin);
    const auto [r1, r2] = ode_residuals(0.3, 1);
    CHECK(std::abs(r1) < 1e-6);
    CHECK(std::abs(r2) < 1e-6);
}
