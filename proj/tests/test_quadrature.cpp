#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qszego/kernel.hpp"
#include "qszego/quadrature.hpp"

using namespace qszego;

using QD = Quaternion<double>;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

double heis_normsq(const HeisenbergElement<double>& h) {
    return qnormsq(h.w) + hnormsq(h.zprime);
}
} // namespace

TEST_CASE("deterministic counter RNG") {
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFull); // reference first output from seed 0
    CHECK(counter_mix(1, 2, 3) == counter_mix(1, 2, 3));
    CHECK(counter_mix(1, 2, 3) != counter_mix(1, 2, 4));
    CHECK(counter_mix(1, 2, 3) != counter_mix(1, 3, 3));
    for (std::uint64_t i = 0; i < 100; ++i) {
        const double u = counter_u01(42, 7, i);
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("Gauss-Legendre rule: exactness and node ordering") {
    CHECK_THROWS_AS(gauss_legendre(0), RangeError);
    const GaussLegendre g4 = gauss_legendre(4);
    REQUIRE(g4.nodes.size() == 4);
    for (std::size_t i = 1; i < g4.nodes.size(); ++i) CHECK(g4.nodes[i] > g4.nodes[i - 1]);
    double weight_sum = 0.0, x6 = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        weight_sum += g4.weights[i];
        x6 += g4.weights[i] * std::pow(g4.nodes[i], 6);
    }
    CHECK(weight_sum == Catch::Approx(2.0).epsilon(1e-14));
    CHECK(x6 == Catch::Approx(2.0 / 7.0).epsilon(1e-13)); // degree 6 < 2*4 is integrated exactly
}

TEST_CASE("compactified line rules reproduce reference integrals") {
    const GaussLegendre full = full_line_rule(72, 1.0);
    double gauss = 0.0;
    for (std::size_t i = 0; i < full.nodes.size(); ++i) {
        gauss += full.weights[i] * std::exp(-full.nodes[i] * full.nodes[i]);
    }
    CHECK(gauss == Catch::Approx(std::sqrt(kPi)).epsilon(1e-10));

    const GaussLegendre half = half_line_rule(64, 1.0);
    double expo = 0.0;
    for (std::size_t i = 0; i < half.nodes.size(); ++i) {
        CHECK(half.nodes[i] > 0.0);
        expo += half.weights[i] * std::exp(-half.nodes[i]);
    }
    CHECK(expo == Catch::Approx(1.0).epsilon(1e-8));

    CHECK_THROWS_AS(full_line_rule(16, 0.0), NonpositiveScale);
    CHECK_THROWS_AS(half_line_rule(16, -1.0), NonpositiveScale);
}

TEST_CASE("quadrature spec: validation and stable hashing") {
    QuadratureSpec spec;
    CHECK_NOTHROW(spec.validate());
    const std::string h1 = spec.hash();
    CHECK(h1 == QuadratureSpec{}.hash());
    CHECK(h1.size() == 16);
    QuadratureSpec other = spec;
    other.radial_nodes = 32;
    CHECK(other.hash() != h1);
    other = spec;
    other.method = QuadratureMethod::monte_carlo;
    CHECK(other.hash() != h1);

    QuadratureSpec bad = spec;
    bad.radial_nodes = 0;
    CHECK_THROWS_AS(bad.validate(), RangeError);
    bad = spec;
    bad.truncation_radius = -2.0;
    CHECK_THROWS_AS(bad.validate(), NonpositiveScale);
    bad = spec;
    bad.target_rel_tol = 2.0;
    CHECK_THROWS_AS(bad.validate(), RangeError);
}

TEST_CASE("boundary integral of a Gaussian (horizontal dimension zero)") {
    QuadratureSpec spec;
    spec.radial_nodes = 96; // geometric convergence: rel error ~3e-14 here
    const BoundaryFunction f = [](const HeisenbergElement<double>& h) {
        return QD(std::exp(-qnormsq(h.w)));
    };
    const IntegralResult res = integrate_boundary_report(f, 0, spec);
    const double expected = std::pow(kPi, 1.5);
    CHECK(std::abs(res.value.x1 - expected) <= 1e-8 * expected);
    CHECK(std::abs(res.value.x2) < 1e-14);
    CHECK(res.spec_hash == spec.hash());
}

TEST_CASE("boundary integral of an inverse-power profile (horizontal dimension zero)") {
    QuadratureSpec spec;
    spec.radial_nodes = 96; // algebraic-decay profile converges slower than the Gaussian
    const BoundaryFunction f = [](const HeisenbergElement<double>& h) {
        const double s = 1.0 + qnormsq(h.w);
        return QD(1.0 / (s * s * s));
    };
    const double got = integrate_boundary(f, 0, spec).x1;
    const double expected = kPi * kPi / 4.0;
    CHECK(std::abs(got - expected) <= 1e-8 * expected);
}

TEST_CASE("adaptive refinement reaches the Gaussian reference value") {
    QuadratureSpec spec;
    spec.method = QuadratureMethod::adaptive;
    spec.radial_nodes = 12;
    spec.target_rel_tol = 1e-9;
    const BoundaryFunction f = [](const HeisenbergElement<double>& h) {
        return QD(std::exp(-qnormsq(h.w)));
    };
    const IntegralResult res = integrate_boundary_report(f, 0, spec);
    const double expected = std::pow(kPi, 1.5);
    CHECK(std::abs(res.value.x1 - expected) <= 1e-8 * expected);
}

TEST_CASE("Monte Carlo path: bit-exact determinism and statistical accuracy") {
    QuadratureSpec spec;
    spec.method = QuadratureMethod::monte_carlo;
    spec.mc_samples = 200000;
    spec.seed = 918273u;
    const BoundaryFunction f = [](const HeisenbergElement<double>& h) {
        return QD(std::exp(-qnormsq(h.w)));
    };
    const IntegralResult a = integrate_boundary_report(f, 0, spec);
    const IntegralResult b = integrate_boundary_report(f, 0, spec);
    CHECK(a.value.x1 == b.value.x1); // same seed, bit-identical
    CHECK(a.abs_error_estimate == b.abs_error_estimate);

    const double expected = std::pow(kPi, 1.5);
    CHECK(std::abs(a.value.x1 - expected) <= 6.0 * a.abs_error_estimate);
    CHECK(a.abs_error_estimate < 0.05 * expected);

    QuadratureSpec other = spec;
    other.seed = 5u;
    CHECK(integrate_boundary_report(f, 0, other).value.x1 != a.value.x1);
}

TEST_CASE("fat-tailed integrands are rejected rather than silently truncated") {
    QuadratureSpec spec;
    spec.radial_nodes = 16;
    const BoundaryFunction fat = [](const HeisenbergElement<double>& h) {
        return QD(std::pow(1.0 + qnormsq(h.w), -1.6));
    };
    CHECK_THROWS_AS(integrate_boundary(fat, 0, spec), TailTooFat);
}

TEST_CASE("non-finite integrand values are reported as such") {
    QuadratureSpec spec;
    spec.radial_nodes = 4;
    const BoundaryFunction bad = [](const HeisenbergElement<double>&) {
        return QD(std::numeric_limits<double>::quiet_NaN());
    };
    CHECK_THROWS_AS(integrate_boundary(bad, 0, spec), NonFinite);
}

TEST_CASE("symmetry-reduced quadrature agrees with the full tensor grid") {
    // radial integrand on the 7-dimensional boundary (m = 1)
    const auto profile = [](double r, double rho) {
        const double s = 1.0 + r * r + rho * rho;
        return std::pow(s, -8.0);
    };
    QuadratureSpec reduced_spec;
    reduced_spec.radial_nodes = 96;
    reduced_spec.angular_nodes = 96;
    const double reduced = symmetry_reduce(1).integrate(profile, reduced_spec);

    QuadratureSpec full_spec;
    full_spec.radial_nodes = 10;
    full_spec.target_rel_tol = 1e-3; // coarse grid: tolerate a fatter resolved tail
    const BoundaryFunction f = [](const HeisenbergElement<double>& h) {
        return QD(std::pow(1.0 + heis_normsq(h), -8.0));
    };
    const double full = integrate_boundary(f, 1, full_spec).x1;
    // the coarse 10-node grid carries ~3e-3 of its own error; 1% agreement
    // still pins the measure factor (a wrong constant would miss by >10%)
    CHECK(std::abs(full - reduced) <= 1e-2 * std::abs(reduced));
}

TEST_CASE("reduced rule at horizontal dimension zero matches the Gaussian") {
    QuadratureSpec spec;
    spec.radial_nodes = 80;
    const double got =
        symmetry_reduce(0).integrate([](double r) { return std::exp(-r * r); }, spec);
    CHECK(got == Catch::Approx(std::pow(kPi, 1.5)).epsilon(1e-9));
}

TEST_CASE("rotation spot check notices asymmetric integrands") {
    const BoundaryFunction radial = [](const HeisenbergElement<double>& h) {
        return QD(1.0 / std::pow(1.0 + heis_normsq(h), 6.0));
    };
    CHECK(rotation_symmetry_check(radial, 1, 99u) < 1e-12);

    const BoundaryFunction skew = [](const HeisenbergElement<double>& h) {
        return QD(h.zprime[0].x2); // depends on the rotation frame
    };
    CHECK(rotation_symmetry_check(skew, 1, 99u) > 1e-3);
}

TEST_CASE("empirical normalization: frozen regression values") {
    // order 0: 1-D reduced profile; reference 1/(2 pi^2)
    QuadratureSpec s0;
    s0.radial_nodes = 160;
    const CEmpResult c0 = c_emp_report(0, s0);
    CHECK(std::abs(c0.value - 1.0 / (2.0 * kPi * kPi)) <= 1e-8 / (2.0 * kPi * kPi));
    CHECK(c0.norm_integral > 0.0);
    CHECK(c0.spec_hash == s0.hash());

    // order 1: 2-D reduced grid; regression target 2 / pi^4
    QuadratureSpec s1;
    s1.radial_nodes = 140;
    s1.angular_nodes = 140;
    const double c1 = c_emp(1, s1);
    CHECK(std::abs(c1 - 2.0 / std::pow(kPi, 4)) <= 1e-7 * (2.0 / std::pow(kPi, 4)));

    // order 2: regression target 8 / pi^6
    const double c2 = c_emp(2, s1);
    CHECK(std::abs(c2 - 8.0 / std::pow(kPi, 6)) <= 1e-7 * (8.0 / std::pow(kPi, 6)));
}

TEST_CASE("projection of boundary data reproduces an interior section (order 0)") {
    QuadratureSpec cspec;
    cspec.radial_nodes = 160;
    KernelContext ctx(0, c_emp(0, cspec));

    const SiegelPoint<double> p0(QD(1.1, 0.15, -0.1, 0.2), {});
    const auto section = [p0](const SiegelPoint<double>& q) {
        return s_unnorm(kernel_arg(q, p0).sigma, 0);
    };
    const BoundaryFunction fb = [&section](const HeisenbergElement<double>& h) {
        return section(lift(h));
    };
    const SiegelPoint<double> q0(QD(1.0, -0.1, 0.2, 0.1), {});

    QuadratureSpec spec; // 48-node tensor grid on the 3-dimensional boundary
    const QD projected = szego_project(fb, q0, ctx, spec);
    const QD expected = section(q0);
    CHECK(qabs(projected - expected) <= 1e-3 * qabs(expected));

    // dimension guard
    HVector<double> zp = {QD(0.1, 0, 0, 0)};
    const SiegelPoint<double> wrong(QD(1.0), zp);
    CHECK_THROWS_AS(szego_project(fb, wrong, ctx, spec), SizeMismatch);
}

TEST_CASE("Hardy-space norm: monotone approach to the boundary and the decay bound") {
    // default 48-node axes: coarser grids stop short of the far tail and the
    // truncation guard (correctly) rejects the run
    QuadratureSpec spec;
    const KernelContext ctx(0);
    const SiegelPoint<double> p0(QD(1.2, 0.1, -0.2, 0.15), {});
    const auto section = [p0](const SiegelPoint<double>& q) {
        return s_unnorm(kernel_arg(q, p0).sigma, 0);
    };
    const HardyNormResult h = hardy_norm_sq(section, ctx, spec, {0.8, 0.4, 0.2, 0.1});
    CHECK(h.per_epsilon.size() == 4);
    CHECK(h.nondecreasing_toward_boundary);
    CHECK(h.value == h.per_epsilon.back().second); // largest at the smallest epsilon
    CHECK(h.value > 0.0);

    CHECK_THROWS_AS(hardy_norm_sq(section, ctx, spec, {}), RangeError);
    CHECK_THROWS_AS(hardy_norm_sq(section, ctx, spec, {0.1, 0.4}), RangeError);
    CHECK_THROWS_AS(hardy_norm_sq(section, ctx, spec, {0.4, -0.1}), RangeError);

    // pointwise decay bound |s(sigma)|^2 |sigma|^(4n+6) <= ((2n)! (n+1) (2n+1))^2
    for (int n = 0; n <= 2; ++n) {
        const double bound = std::pow(to_double(BigRational(factorial(2 * n))) * (n + 1) *
                                          (2 * n + 1),
                                      2);
        for (double re_part : {0.3, 1.0, 2.5}) {
            for (double im_part : {0.0, 0.7, 3.0}) {
                const QD sigma(re_part, im_part, -0.5 * im_part, 0.25);
                const double lhs =
                    qnormsq(s_unnorm(sigma, n)) * std::pow(qnormsq(sigma), 2.0 * n + 3.0);
                CHECK(lhs <= bound * (1.0 + 1e-12));
            }
        }
    }
}
