#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "syl/interval.hpp"

using syl::interval;
using syl::detail::ulp_distance;

namespace {

// Random interval with endpoints in [-span, span].
interval random_interval(std::mt19937_64& rng, double span) {
    std::uniform_real_distribution<double> dist(-span, span);
    double a = dist(rng), b = dist(rng);
    if (a > b) std::swap(a, b);
    return {a, b};
}

double random_point_in(std::mt19937_64& rng, const interval& iv) {
    std::uniform_real_distribution<double> t01(0.0, 1.0);
    const double x = iv.lo + t01(rng) * (iv.hi - iv.lo);
    return std::clamp(x, iv.lo, iv.hi);
}

// Random subinterval of iv.
interval random_sub(std::mt19937_64& rng, const interval& iv) {
    double a = random_point_in(rng, iv), b = random_point_in(rng, iv);
    if (a > b) std::swap(a, b);
    return {a, b};
}

} // namespace

TEST_CASE("construction validates endpoints") {
    CHECK_THROWS_AS(interval(2.0, 1.0), syl::domain_error);
    CHECK_THROWS_AS(interval(std::numeric_limits<double>::quiet_NaN()), syl::domain_error);
    CHECK_THROWS_AS(interval(0.0, std::numeric_limits<double>::infinity()), syl::domain_error);
    const interval p(3.5);
    CHECK(p.lo == 3.5);
    CHECK(p.hi == 3.5);
}

TEST_CASE("containment fuzz over arithmetic ops") {
    std::mt19937_64 rng(0x5eed5eed5eed5eedULL);
    for (int iter = 0; iter < 100000; ++iter) {
        const interval A = random_interval(rng, 50.0);
        const interval B = random_interval(rng, 50.0);
        const double a = random_point_in(rng, A);
        const double b = random_point_in(rng, B);
        switch (iter % 4) {
        case 0: CHECK((A + B).contains(a + b)); break;
        case 1: CHECK((A - B).contains(a - b)); break;
        case 2: CHECK((A * B).contains(a * b)); break;
        default: {
            // Keep the denominator away from zero.
            const interval D(B.lo + 60.0, B.hi + 60.0);
            const double d = std::clamp(b + 60.0, D.lo, D.hi);
            CHECK((A / D).contains(a / d));
            break;
        }
        }
    }
}

TEST_CASE("containment fuzz over sqrt, arcsin, pow") {
    std::mt19937_64 rng(0xfeedfacefeedfaceULL);
    std::uniform_real_distribution<double> pos(0.0, 100.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int iter = 0; iter < 30000; ++iter) {
        double a = pos(rng), b = pos(rng);
        if (a > b) std::swap(a, b);
        const interval S{a, b};
        CHECK(syl::sqrt_i(S).contains(std::sqrt(random_point_in(rng, S))));

        double u = unit(rng), v = unit(rng);
        if (u > v) std::swap(u, v);
        const interval U{u, v};
        CHECK(syl::arcsin_i(U).contains(std::asin(random_point_in(rng, U))));

        const interval W = random_interval(rng, 6.0);
        const double w = random_point_in(rng, W);
        CHECK(syl::pow_i(W, 2).contains(w * w));
        CHECK(syl::pow_i(W, 3).contains(w * w * w));
    }
}

TEST_CASE("inclusion monotonicity") {
    std::mt19937_64 rng(0xabcdef0123456789ULL);
    for (int iter = 0; iter < 20000; ++iter) {
        const interval A = random_interval(rng, 20.0);
        const interval B = random_interval(rng, 20.0);
        const interval As = random_sub(rng, A);
        const interval Bs = random_sub(rng, B);
        CHECK((A + B).contains(As + Bs));
        CHECK((A - B).contains(As - Bs));
        CHECK((A * B).contains(As * Bs));
        CHECK(syl::pow_i(A, 3).contains(syl::pow_i(As, 3)));
    }
}

TEST_CASE("division by zero-straddling interval throws") {
    CHECK_THROWS_AS(interval(1.0) / interval(-1.0, 1.0), syl::domain_error);
    CHECK_THROWS_AS(interval(1.0) / interval(0.0, 1.0), syl::domain_error);
    CHECK_THROWS_AS(interval(1.0) / interval(-1.0, 0.0), syl::domain_error);
    CHECK_NOTHROW(interval(1.0) / interval(0.25, 1.0));
}

TEST_CASE("sqrt of 2 is tightly enclosed") {
    const interval r = syl::sqrt_i(interval(2.0));
    const double sqrt2 = 0x1.6a09e667f3bcdp+0;
    CHECK(r.contains(sqrt2));
    CHECK(ulp_distance(r.lo, r.hi) <= 4);
    CHECK_THROWS_AS(syl::sqrt_i(interval(-1.0, 1.0)), syl::domain_error);
    CHECK(syl::sqrt_i(interval(0.0)).lo == 0.0);
}

TEST_CASE("pi enclosure is one ulp wide and correct") {
    const interval p = syl::pi_i();
    CHECK(p.contains(M_PI));
    CHECK(ulp_distance(p.lo, p.hi) == 1);
    CHECK(p.width() < 1e-15);
    // pi^2 enclosure stays tight.
    const interval p2 = p * p;
    CHECK(p2.contains(9.869604401089358));
    CHECK(p2.width() < 1e-14);
}

TEST_CASE("arcsin enclosure matches frozen references") {
    const interval r = syl::arcsin_i(interval(0.8));
    CHECK(r.contains(0x1.dac670561bb4fp-1)); // asin(4/5), correctly rounded
    CHECK(ulp_distance(r.lo, r.hi) <= 9);
    CHECK(syl::arcsin_i(interval(1.0)).contains(syl::pi_i().lo / 2));
    CHECK(syl::arcsin_i(interval(0.0)).contains(0.0));
    CHECK_THROWS_AS(syl::arcsin_i(interval(0.0, 1.5)), syl::domain_error);
    CHECK_THROWS_AS(syl::arcsin_i(interval(-2.0, 0.0)), syl::domain_error);
}

TEST_CASE("even powers of straddling intervals stay nonnegative") {
    const interval x(-2.0, 3.0);
    const interval x2 = syl::pow_i(x, 2);
    CHECK(x2.lo == 0.0);
    CHECK(x2.contains(9.0));
    CHECK(x2.contains(4.0));
    CHECK(x2.contains(0.0));
    CHECK(x2.hi < 9.0 * (1 + 1e-14));
    const interval x3 = syl::pow_i(x, 3);
    CHECK(x3.contains(27.0));
    CHECK(x3.contains(-8.0));
    CHECK(syl::pow_i(x, 0) == interval(1.0));
    // Negative powers of a sign-definite interval.
    const interval inv = syl::pow_i(interval(2.0), -2);
    CHECK(inv.contains(0.25));
}

TEST_CASE("rational enclosures are tight") {
    const interval third = syl::rat(1, 3);
    CHECK(third.contains(1.0 / 3.0));
    CHECK(ulp_distance(third.lo, third.hi) <= 2);
    CHECK(syl::rat(1, 2) == interval(0.5));
    CHECK(syl::rat(-29, 30).contains(-29.0 / 30.0));
    CHECK_THROWS_AS(syl::rat(1, 0), syl::domain_error);
}

TEST_CASE("hull and abs") {
    const interval h = syl::hull(interval(-1.0, 0.5), interval(0.25, 2.0));
    CHECK(h == interval(-1.0, 2.0));
    CHECK(syl::abs_i(interval(-3.0, -1.0)) == interval(1.0, 3.0));
    CHECK(syl::abs_i(interval(-2.0, 5.0)) == interval(0.0, 5.0));
    CHECK(syl::abs_i(interval(1.0, 2.0)) == interval(1.0, 2.0));
}

TEST_CASE("mixed scalar arithmetic converts exactly") {
    const interval x(0.5, 0.75);
    const interval y = 1.0 + x * 2.0;
    CHECK(y.contains(2.0));
    CHECK(y.contains(2.5));
    CHECK(y.lo >= 1.9999999999999995);
    CHECK(y.hi <= 2.5000000000000009);
}

TEST_CASE("exact results stay points") {
    CHECK(interval(1.0) + interval(2.0) == interval(3.0));
    CHECK(interval(1.0) - interval(1.0) == interval(0.0));
    CHECK(interval(0.5) * interval(0.25) == interval(0.125));
    CHECK(interval(3.0) / interval(4.0) == interval(0.75));
    CHECK(syl::sqrt_i(interval(4.0)) == interval(2.0));
    CHECK(syl::sqrt_i(interval(0.0)) == interval(0.0));
    CHECK(syl::pow_i(interval(0.5), 3) == interval(0.125));
    CHECK(syl::arcsin_i(interval(0.0)) == interval(0.0));
    CHECK(syl::rat(1, 2) == interval(0.5));

    // Sign proofs with equality at an endpoint need these to close exactly.
    CHECK((interval(1.0) - interval(1.0)).hi == 0.0);
    const interval prod = interval(-2.0) * interval(0.0, 1.0);
    CHECK(prod.lo == -2.0);
    CHECK(prod.hi == 0.0);
}

TEST_CASE("square roots of perfect squares are exact") {
    for (int k = 1; k <= 1000; ++k) {
        const double sq = double(k) * double(k);
        CHECK(syl::sqrt_i(interval(sq)) == interval(double(k)));
    }
}

TEST_CASE("inexact results widen only the deficient side") {
    const interval s = interval(0.1) + interval(0.2);
    CHECK(ulp_distance(s.lo, s.hi) <= 1);
    CHECK(s.contains(0.1 + 0.2));
    const interval t = syl::rat(1, 3);
    CHECK(ulp_distance(t.lo, t.hi) <= 1);
}

TEST_CASE("directed endpoints verified against quad precision") {
    std::mt19937_64 rng(0x0ddba11c0ffee123ULL);
    std::uniform_real_distribution<double> dist(-1.0e3, 1.0e3);
    for (int iter = 0; iter < 40000; ++iter) {
        const double a = dist(rng);
        const double b = dist(rng);
        const interval A(a), B(b);
        const __float128 qa = a, qb = b;

        const interval s = A + B;
        CHECK(static_cast<__float128>(s.lo) <= qa + qb);
        CHECK(qa + qb <= static_cast<__float128>(s.hi));

        const interval d = A - B;
        CHECK(static_cast<__float128>(d.lo) <= qa - qb);
        CHECK(qa - qb <= static_cast<__float128>(d.hi));

        const interval p = A * B;
        CHECK(static_cast<__float128>(p.lo) <= qa * qb);
        CHECK(qa * qb <= static_cast<__float128>(p.hi));

        if (std::fabs(b) > 1e-6) {
            const interval q = A / B;
            CHECK(static_cast<__float128>(q.lo) <= qa / qb);
            CHECK(qa / qb <= static_cast<__float128>(q.hi));
        }
    }
}
