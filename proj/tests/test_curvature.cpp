#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "syl/curvature.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr double pi = std::numbers::pi;

// Random consistent curvature data: R is computed from (g, ric).
syl::curvature_point random_point(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    MatrixXd m(n, n), s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m(i, j) = d(rng);
            s(i, j) = d(rng);
        }
    const MatrixXd g = m.transpose() * m + n * MatrixXd::Identity(n, n);
    const MatrixXd ric = 0.5 * (s + s.transpose());
    const double R = g.ldlt().solve(ric).trace();
    return {g, ric, R};
}

} // namespace

TEST_CASE("curvature point construction validates its data") {
    const MatrixXd id3 = MatrixXd::Identity(3, 3);
    CHECK_NOTHROW(syl::curvature_point(id3, 2.0 * id3, 6.0));
    // Scalar curvature inconsistent with trace(g^{-1} ric).
    CHECK_THROWS_AS(syl::curvature_point(id3, 2.0 * id3, 5.0), syl::domain_error);
    // Metric not positive definite.
    CHECK_THROWS_AS(syl::curvature_point(-id3, id3, -3.0), syl::domain_error);
    // Asymmetric Ricci.
    MatrixXd bad = MatrixXd::Zero(3, 3);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(syl::curvature_point(id3, bad, 0.0), syl::domain_error);
    // Shape mismatch.
    CHECK_THROWS_AS(syl::curvature_point(id3, MatrixXd::Identity(4, 4), 4.0),
                    syl::domain_error);
}

TEST_CASE("schouten of the unit round sphere is half the metric") {
    for (int n = 3; n <= 8; ++n) {
        const auto p = syl::unit_sphere_point(n);
        const MatrixXd A = syl::schouten(p);
        CHECK((A - 0.5 * p.g).cwiseAbs().maxCoeff() < 1e-12);
        const auto spec = syl::relative_spectrum(A, p.g);
        for (double ev : spec.values) CHECK_THAT(ev, WithinAbs(0.5, 1e-12));
    }
}

TEST_CASE("schouten of a Ricci-flat point vanishes") {
    const MatrixXd id = MatrixXd::Identity(4, 4);
    const syl::curvature_point p(id, MatrixXd::Zero(4, 4), 0.0);
    CHECK(syl::schouten(p).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("trace identity sigma_1(g^-1 A) = R / (2(n-1))") {
    std::mt19937_64 rng(31337);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 3 + rep % 5;
        const auto p = random_point(rng, n);
        const auto spec = syl::relative_spectrum(syl::schouten(p), p.g);
        double tr = 0.0;
        for (double ev : spec.values) tr += ev;
        const double expected = p.R / (2.0 * (n - 1));
        CHECK_THAT(tr, WithinAbs(expected, 1e-12 * std::max(1.0, std::abs(expected))));
    }
}

TEST_CASE("conformal transformation of the curvature tensor") {
    const int n = 3;
    const MatrixXd id = MatrixXd::Identity(n, n);

    SECTION("constant conformal factor leaves A unchanged") {
        const auto p = syl::unit_sphere_point(n);
        const MatrixXd A = syl::schouten(p);
        const syl::conformal_jet jet(1.7, VectorXd::Zero(n), MatrixXd::Zero(n, n));
        CHECK((syl::conformal_schouten(A, jet, p.g) - A).cwiseAbs().maxCoeff() == 0.0);
    }

    SECTION("unit gradient against zero background") {
        VectorXd e1 = VectorXd::Zero(n);
        e1(0) = 1.0;
        const syl::conformal_jet jet(0.0, e1, MatrixXd::Zero(n, n));
        const MatrixXd Au = syl::conformal_schouten(MatrixXd::Zero(n, n), jet, id);
        MatrixXd expected = MatrixXd::Zero(n, n);
        expected.diagonal() << 0.5, -0.5, -0.5;
        CHECK((Au - expected).cwiseAbs().maxCoeff() < 1e-15);
    }

    SECTION("output is symmetric for random jets") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        for (int rep = 0; rep < 50; ++rep) {
            const auto p = random_point(rng, 4);
            VectorXd du(4);
            MatrixXd h(4, 4);
            for (int i = 0; i < 4; ++i) {
                du(i) = d(rng);
                for (int j = 0; j < 4; ++j) h(i, j) = d(rng);
            }
            const syl::conformal_jet jet(d(rng), du, 0.5 * (h + h.transpose()));
            const MatrixXd Au = syl::conformal_schouten(syl::schouten(p), jet, p.g);
            CHECK((Au - Au.transpose()).cwiseAbs().maxCoeff() < 1e-13);
        }
    }

    SECTION("shape mismatch throws") {
        const syl::conformal_jet jet(0.0, VectorXd::Zero(4), MatrixXd::Zero(4, 4));
        CHECK_THROWS_AS(syl::conformal_schouten(MatrixXd::Zero(3, 3), jet, id),
                        syl::domain_error);
    }
}

TEST_CASE("normalization residual on the round sphere") {
    for (int n = 3; n <= 8; ++n) {
        const auto p = syl::unit_sphere_point(n);
        for (int k = 1; k <= n; ++k)
            CHECK_THAT(syl::yamabe_residual(p, syl::conformal_jet::zero(n), k),
                       WithinAbs(0.0, 1e-12));
    }
    // Constant conformal shift c > 0 leaves a residual sigma_k^{1/k}(S^n)(1 - e^{-2c}).
    const int n = 4;
    const auto p = syl::unit_sphere_point(n);
    for (int k = 1; k <= n; ++k) {
        const double c = 0.3;
        const syl::conformal_jet jet(c, VectorXd::Zero(n), MatrixXd::Zero(n, n));
        const double expected =
            std::pow(syl::sigma_k_sphere(n, k), 1.0 / k) * (1.0 - std::exp(-2.0 * c));
        CHECK_THAT(syl::yamabe_residual(p, jet, k), WithinRel(expected, 1e-12));
        CHECK(syl::yamabe_residual(p, jet, k) > 0.0);
    }
}

TEST_CASE("k = 1 residual reduces to the scalar-curvature expression") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 3 + rep % 4;
        auto p = random_point(rng, n);
        // Shift Ricci to guarantee positive sigma_1.
        const MatrixXd ric = p.ric + 2.0 * n * p.g;
        const double R = p.g.ldlt().solve(ric).trace();
        const syl::curvature_point q(p.g, ric, R);
        const double res = syl::yamabe_residual(q, syl::conformal_jet::zero(n), 1);
        CHECK_THAT(res, WithinAbs(R / (2.0 * (n - 1)) - 0.5 * n, 1e-10));
    }
}

TEST_CASE("residual outside the admissible cone reports a cone error") {
    const int n = 4;
    const MatrixXd id = MatrixXd::Identity(n, n);
    const syl::curvature_point p(id, -(n - 1.0) * id, -static_cast<double>(n) * (n - 1));
    CHECK_THROWS_AS(syl::yamabe_residual(p, syl::conformal_jet::zero(n), 2),
                    syl::cone_error);
}

TEST_CASE("supercritical Ricci coefficient") {
    CHECK_THAT(syl::gvw_ricci_coefficient(3, 2), WithinRel(1.0 / 6.0, 1e-15));
    CHECK_THAT(syl::gvw_ricci_coefficient(4, 3), WithinRel(1.0 / 8.0, 1e-15));
    for (int n = 3; n <= 8; ++n)
        CHECK_THAT(syl::gvw_ricci_coefficient(n, n), WithinRel(0.5 / (n - 1), 1e-15));
    CHECK_THROWS_AS(syl::gvw_ricci_coefficient(4, 2), syl::domain_error); // k = n/2
    CHECK_THROWS_AS(syl::gvw_ricci_coefficient(3, 1), syl::domain_error); // k < 2
    CHECK_THROWS_AS(syl::gvw_ricci_coefficient(3, 4), syl::domain_error); // k > n
}

TEST_CASE("sphere volumes") {
    CHECK_THAT(syl::sphere_volume(1), WithinRel(2.0 * pi, 1e-15));
    CHECK_THAT(syl::sphere_volume(2), WithinRel(4.0 * pi, 1e-15));
    CHECK_THAT(syl::sphere_volume(3), WithinRel(2.0 * pi * pi, 1e-15));
    CHECK_THAT(syl::sphere_volume(4), WithinRel(0x1.a51a6625307d3p+4, 1e-15)); // 8 pi^2 / 3
    for (int n = 3; n <= 10; ++n)
        CHECK_THAT(syl::sphere_volume(n),
                   WithinRel(syl::sphere_volume(n - 2) * 2.0 * pi / (n - 1), 1e-14));
    CHECK_THROWS_AS(syl::sphere_volume(0), syl::domain_error);
}

TEST_CASE("diameter and volume comparison bounds") {
    const auto s3 = syl::myers_bishop_bound(3, 2.0);
    CHECK_THAT(s3.diameter, WithinRel(pi, 1e-15));
    CHECK_THAT(s3.volume, WithinRel(2.0 * pi * pi, 1e-14));
    const auto s4 = syl::myers_bishop_bound(4, 3.0);
    CHECK_THAT(s4.diameter, WithinRel(pi, 1e-15));
    CHECK_THAT(s4.volume, WithinRel(8.0 * pi * pi / 3.0, 1e-14));

    // Scaling law: halving the Ricci bound scales diameter by sqrt(2) and
    // volume by 2^{n/2}.
    for (int n = 3; n <= 6; ++n) {
        const auto a = syl::myers_bishop_bound(n, 1.0);
        const auto b = syl::myers_bishop_bound(n, 0.5);
        CHECK_THAT(b.diameter, WithinRel(a.diameter * std::sqrt(2.0), 1e-13));
        CHECK_THAT(b.volume, WithinRel(a.volume * std::pow(2.0, 0.5 * n), 1e-13));
    }

    // Monotonicity: a larger lower bound never increases either bound.
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> d(0.1, 10.0);
    for (int rep = 0; rep < 500; ++rep) {
        double r1 = d(rng), r2 = d(rng);
        if (r1 > r2) std::swap(r1, r2);
        const auto lo = syl::myers_bishop_bound(4, r1);
        const auto hi = syl::myers_bishop_bound(4, r2);
        CHECK(hi.diameter <= lo.diameter);
        CHECK(hi.volume <= lo.volume);
    }

    CHECK_THROWS_AS(syl::myers_bishop_bound(3, 0.0), syl::domain_error);
    CHECK_THROWS_AS(syl::myers_bishop_bound(3, -1.0), syl::domain_error);
    CHECK_THROWS_AS(syl::myers_bishop_bound(1, 1.0), syl::domain_error);
}

TEST_CASE("four-dimensional topological volume bound") {
    const auto cp2 = syl::lambda_bound_4d(3, 1);
    CHECK_THAT(cp2.bound, WithinRel(2.0 * pi * pi, 1e-14));
    CHECK(cp2.subcritical); // 2*3 + 3*1 = 9 < 12

    const auto s2s2 = syl::lambda_bound_4d(4, 0);
    CHECK_THAT(s2s2.bound, WithinRel(16.0 * pi * pi / 9.0, 1e-14));
    CHECK(s2s2.subcritical); // 8 < 12

    CHECK(syl::lambda_bound_4d(0, 0).bound == 0.0);
    // 2 chi + 3 tau = 12 meets the round-sphere volume exactly: not subcritical.
    const auto critical = syl::lambda_bound_4d(6, 0);
    CHECK_FALSE(critical.subcritical);
    CHECK_THAT(critical.bound, WithinRel(syl::sphere_volume(4), 1e-14));
    CHECK_FALSE(syl::lambda_bound_4d(10, 5).subcritical);
}

TEST_CASE("relative spectrum against a non-trivial metric") {
    MatrixXd g = MatrixXd::Zero(3, 3);
    g.diagonal() << 1.0, 4.0, 9.0;
    const auto spec = syl::relative_spectrum(g, g);
    for (double ev : spec.values) CHECK_THAT(ev, WithinAbs(1.0, 1e-13));
    MatrixXd A = MatrixXd::Zero(3, 3);
    A.diagonal() << 1.0, 8.0, 27.0;
    const auto spec2 = syl::relative_spectrum(A, g);
    CHECK_THAT(spec2.values[0], WithinRel(1.0, 1e-12));
    CHECK_THAT(spec2.values[1], WithinRel(2.0, 1e-12));
    CHECK_THAT(spec2.values[2], WithinRel(3.0, 1e-12));
}
