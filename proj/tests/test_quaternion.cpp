#include <catch2/catch_amalgamated.hpp>

#include "qszego/quaternion.hpp"
#include "qszego/rational.hpp"

using namespace qszego;

using QD = Quaternion<double>;
using QR = Quaternion<BigRational>;

TEST_CASE("multiplication table of the imaginary units") {
    const QD i = QD::unit_i(), j = QD::unit_j(), k = QD::unit_k();
    CHECK(qmul(i, i) == -QD::one());
    CHECK(qmul(j, j) == -QD::one());
    CHECK(qmul(k, k) == -QD::one());
    CHECK(qmul(i, j) == k);
    CHECK(qmul(j, i) == -k);
    CHECK(qmul(j, k) == i);
    CHECK(qmul(k, j) == -i);
    CHECK(qmul(k, i) == j);
    CHECK(qmul(i, k) == -j);
    CHECK(qmul(qmul(i, j), k) == -QD::one());
}

TEST_CASE("product is associative and conjugation reverses it (exact rationals)") {
    const QR a(BigRational(1, 2), BigRational(-3), BigRational(5, 7), BigRational(2));
    const QR b(BigRational(-2), BigRational(1, 3), BigRational(0), BigRational(4, 5));
    const QR c(BigRational(7), BigRational(-1, 2), BigRational(3), BigRational(-1, 9));
    CHECK(qmul(qmul(a, b), c) == qmul(a, qmul(b, c)));
    CHECK(qconj(qmul(a, b)) == qmul(qconj(b), qconj(a)));
    CHECK(qnormsq(qmul(a, b)) == qnormsq(a) * qnormsq(b));
}

TEST_CASE("real part, imaginary part, norm, inverse") {
    const QD a(1.0, 2.0, -3.0, 0.5);
    CHECK(re(a) == 1.0);
    CHECK(im(a) == QD(0.0, 2.0, -3.0, 0.5));
    CHECK(qnormsq(a) == Catch::Approx(1 + 4 + 9 + 0.25));
    const QD prod = qmul(a, qinv(a));
    CHECK(qabs(prod - QD::one()) < 1e-15);
    CHECK_THROWS_AS(qinv(QD::zero()), ZeroDivision);
}

TEST_CASE("integer powers, including negative exponents") {
    const QD a(0.3, -1.2, 0.7, 2.0);
    CHECK(qabs(qpow(a, 0) - QD::one()) == 0.0);
    CHECK(qabs(qpow(a, 3) - qmul(a, qmul(a, a))) < 1e-14);
    const QD m3 = qpow(a, -3);
    CHECK(qabs(qmul(m3, qpow(a, 3)) - QD::one()) < 1e-14);
}

TEST_CASE("coordinate access agrees with unit decomposition") {
    const QD a(1.0, 2.0, 3.0, 4.0);
    QD rebuilt = QD::zero();
    for (int c = 0; c < 4; ++c) rebuilt = rebuilt + a.coord(c) * QD::unit(c);
    CHECK(rebuilt == a);
}

TEST_CASE("inner product is conjugate-linear in the first slot, linear in the second") {
    const HVector<double> v = {QD(1, 2, 0, -1), QD(0.5, 0, 1, 0)};
    const HVector<double> w = {QD(-1, 0, 2, 0.5), QD(2, 1, 0, 1)};
    const QD lambda(0.3, -0.7, 0.2, 1.1);

    HVector<double> v_scaled = v, w_scaled = w;
    for (auto& q : v_scaled) q = qmul(q, lambda);
    for (auto& q : w_scaled) q = qmul(q, lambda);

    CHECK(qabs(inner(v_scaled, w) - qmul(qconj(lambda), inner(v, w))) < 1e-14);
    CHECK(qabs(inner(v, w_scaled) - qmul(inner(v, w), lambda)) < 1e-14);
    CHECK(qabs(inner(v, w) - qconj(inner(w, v))) < 1e-15);
    CHECK(inner(v, v).x1 == Catch::Approx(hnormsq(v)));
    CHECK_THROWS_AS(inner(v, HVector<double>{QD::one()}), LengthMismatch);
}

TEST_CASE("matrix application, adjoint, and the unitarity test") {
    QuatMatrix<double> a(2);
    a.rows[0][0] = QD(0, 1, 0, 0); // i
    a.rows[0][1] = QD::zero();
    a.rows[1][0] = QD::zero();
    a.rows[1][1] = QD(0, 0, 1, 0); // j
    CHECK(is_sp(a, 1e-14));

    const HVector<double> v = {QD(1, 0, 0, 0), QD(0, 0, 0, 1)};
    const HVector<double> av = mat_apply(a, v);
    CHECK(qabs(av[0] - QD(0, 1, 0, 0)) < 1e-15);
    CHECK(qabs(av[1] - qmul(QD(0, 0, 1, 0), QD(0, 0, 0, 1))) < 1e-15);

    // the inner product is preserved
    const HVector<double> w = {QD(0.2, -1, 0.5, 0), QD(1, 1, -1, 0.3)};
    const HVector<double> aw = mat_apply(a, w);
    CHECK(qabs(inner(av, aw) - inner(v, w)) < 1e-14);

    const QuatMatrix<double> aa = mat_mul(adjoint(a), a);
    CHECK(qabs(aa.rows[0][0] - QD::one()) < 1e-15);
    CHECK(qabs(aa.rows[0][1]) < 1e-15);

    QuatMatrix<double> bad(2); // zero matrix is not symplectic
    CHECK_FALSE(is_sp(bad, 1e-14));
    CHECK(is_hyperhermitian(QuatMatrix<double>::identity(2), 1e-15));
}

TEST_CASE("quaternion arithmetic over exact rationals stays exact") {
    const QR a(BigRational(1, 3), BigRational(2, 7), BigRational(-5, 11), BigRational(0));
    const QR inv = qinv(a);
    CHECK(qmul(a, inv) == QR(BigRational(1), BigRational(0), BigRational(0), BigRational(0)));
}
