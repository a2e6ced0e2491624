#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qszego/rational.hpp"
#include "qszego/siegel.hpp"

using namespace qszego;

using QD = Quaternion<double>;
using QR = Quaternion<BigRational>;

static SiegelPoint<double> sample_interior() {
    HVector<double> zp = {QD(0.3, -0.2, 0.1, 0.4)};
    QD q1(hnormsq(zp) + 1.2, 0.5, -0.3, 0.2);
    return SiegelPoint<double>(q1, zp);
}

TEST_CASE("defining function, interiority, boundary membership") {
    const SiegelPoint<double> q = sample_interior();
    CHECK(defining_r(q) == Catch::Approx(1.2));
    CHECK(is_interior(q));
    CHECK_FALSE(is_boundary(q));

    const SiegelPoint<double> b = lift(HeisenbergElement<double>(
        QD(0.0, 0.7, -0.1, 0.2), {QD(0.5, 0.1, 0.0, -0.3)}));
    CHECK(is_boundary(b));
    CHECK_FALSE(is_interior(b));
    CHECK(b.q1.x1 == Catch::Approx(hnormsq(b.qprime)));
}

TEST_CASE("projection and lift are mutually inverse on the boundary") {
    const HeisenbergElement<double> h(QD(0.0, 0.4, 0.9, -0.2), {QD(1.0, 0.2, -0.5, 0.1)});
    const SiegelPoint<double> b = lift(h);
    const HeisenbergElement<double> back = project(b);
    CHECK(qabs(back.w - h.w) < 1e-15);
    CHECK(qabs(back.zprime[0] - h.zprime[0]) < 1e-15);
    CHECK_THROWS_AS(project(sample_interior()), NotOnBoundary);
}

TEST_CASE("group law over exact rationals: associativity, identity, inverse") {
    const auto q = [](int a, int b, int c, int d) {
        return QR(BigRational(a), BigRational(b, 2), BigRational(c, 3), BigRational(d));
    };
    const HeisenbergElement<BigRational> g1(q(0, 1, 2, -1), {q(1, 0, 1, 1), q(-2, 3, 0, 1)});
    const HeisenbergElement<BigRational> g2(q(0, -2, 1, 3), {q(0, 1, -1, 2), q(1, 1, 1, 0)});
    const HeisenbergElement<BigRational> g3(q(0, 5, -1, 0), {q(2, -1, 0, 0), q(0, 0, 2, -3)});

    const auto left = h_mul(h_mul(g1, g2), g3);
    const auto right = h_mul(g1, h_mul(g2, g3));
    CHECK(left.w == right.w);
    CHECK(left.zprime == right.zprime);
    CHECK(left.w.x1 == BigRational(0)); // the vertical part stays pure imaginary

    const auto e = HeisenbergElement<BigRational>::identity(2);
    const auto ge = h_mul(g1, e);
    CHECK(ge.w == g1.w);
    CHECK(ge.zprime == g1.zprime);

    const auto gi = h_mul(g1, h_inv(g1));
    CHECK(gi.w == QR(BigRational(0), BigRational(0), BigRational(0), BigRational(0)));
    CHECK(gi.zprime == e.zprime);

    CHECK_THROWS_AS(
        h_mul(g1, HeisenbergElement<BigRational>(q(0, 1, 1, 1), {q(1, 0, 0, 0)})),
        SizeMismatch);
}

TEST_CASE("the group is noncommutative with a central vertical direction") {
    const HeisenbergElement<double> a(QD(0, 0.1, 0, 0), {QD(1, 0, 0, 0)});
    const HeisenbergElement<double> b(QD(0, 0, 0.2, 0), {QD(0, 1, 0, 0)});
    const auto ab = h_mul(a, b);
    const auto ba = h_mul(b, a);
    CHECK(qabs(ab.w - ba.w) > 1e-3);       // commutator is vertical and nonzero
    CHECK(qabs(ab.zprime[0] - ba.zprime[0]) < 1e-15);
}

TEST_CASE("boundary translation preserves the defining function") {
    const SiegelPoint<double> q = sample_interior();
    const SiegelPoint<double> pb = lift(HeisenbergElement<double>(
        QD(0.0, -0.3, 0.8, 0.1), {QD(0.2, 0.4, -0.1, 0.0)}));
    const SiegelPoint<double> tq = translate(pb, q);
    CHECK(defining_r(tq) == Catch::Approx(defining_r(q)));
    CHECK_THROWS_AS(translate(sample_interior(), q), NotOnBoundary);
}

TEST_CASE("symplectic rotation preserves the defining function and rejects non-matrices") {
    const SiegelPoint<double> q = sample_interior();
    QuatMatrix<double> u(1);
    u.rows[0][0] = QD(0, 0, 1, 0); // multiplication by a unit quaternion is symplectic
    const SiegelPoint<double> rq = rotate_a(u, q);
    CHECK(defining_r(rq) == Catch::Approx(defining_r(q)));
    CHECK(qabs(rq.q1 - q.q1) < 1e-15); // the first coordinate is untouched

    QuatMatrix<double> bad(1);
    bad.rows[0][0] = QD(0.5, 0, 0, 0);
    CHECK_THROWS_AS(rotate_a(bad, q), NotSymplectic);
}

TEST_CASE("unit-quaternion rotation acts on both coordinates and keeps the domain") {
    const SiegelPoint<double> q = sample_interior();
    const QD sigma = (1.0 / std::sqrt(2.0)) * QD(1, 0, 1, 0);
    const SiegelPoint<double> rq = rotate_sigma(sigma, q);
    CHECK(defining_r(rq) == Catch::Approx(defining_r(q)));
    CHECK(qabs(rq.q1 - qmul(qmul(qconj(sigma), q.q1), sigma)) < 1e-15);
    CHECK(qabs(rq.qprime[0] - qmul(q.qprime[0], sigma)) < 1e-15);
    CHECK_THROWS_AS(rotate_sigma(QD(2, 0, 0, 0), q), NotUnit);
}

TEST_CASE("dilation scales the defining function quadratically") {
    const SiegelPoint<double> q = sample_interior();
    const double r = 1.7;
    const SiegelPoint<double> dq = dilate(r, q);
    CHECK(defining_r(dq) == Catch::Approx(r * r * defining_r(q)));
    CHECK(qabs(dq.q1 - (r * r) * q.q1) < 1e-15);
    CHECK(qabs(dq.qprime[0] - r * q.qprime[0]) < 1e-15);
    CHECK_THROWS_AS(dilate(0.0, q), NonpositiveScale);
    CHECK_THROWS_AS(dilate(-1.0, q), NonpositiveScale);
}

TEST_CASE("vertical translation moves the point off the boundary by the step") {
    const SiegelPoint<double> b = lift(HeisenbergElement<double>(
        QD(0.0, 0.2, -0.6, 0.1), {QD(0.4, 0.0, 0.2, -0.1)}));
    const SiegelPoint<double> inq = vertical_translate(b, 0.25);
    CHECK(defining_r(inq) == Catch::Approx(0.25));
    CHECK(is_interior(inq));
}

TEST_CASE("Heisenberg element constructor discards any real part of the vertical slot") {
    const HeisenbergElement<double> h(QD(5.0, 1.0, 2.0, 3.0), {});
    CHECK(h.w.x1 == 0.0);
    CHECK(h.w.x2 == 1.0);
}
