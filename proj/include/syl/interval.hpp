#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <string>

#include "syl/arcsin_refs.hpp"
#include "syl/errors.hpp"

namespace syl {

namespace detail {

[[nodiscard]] inline double down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

[[nodiscard]] inline double up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Residual-based directed rounding.  Native arithmetic rounds to nearest;
// exact error terms (two-sum for +, fma residuals for *, /) reveal the
// direction of the rounding, so an endpoint is widened only when the
// native value lies strictly on the wrong side of the real result.  Exact
// results (dyadic sums, small rationals, values hitting representable
// points) therefore stay points -- essential for enclosures that must
// reach an equality endpoint, e.g. proving f <= c when f attains c.
//
// The fma residual of a product/quotient is itself exact only while the
// residual grid 2^(ea+eb-104) stays above the subnormal floor; below
// kResidualGuard the sign of the residual cannot be trusted and the
// endpoint is widened unconditionally.  Addition error terms are exact for
// all finite inputs (subnormal sums are themselves exact), so sums need
// only an overflow check.
inline constexpr double kResidualGuard = 1e-250;

[[nodiscard]] inline double sum_lo(double a, double b) {
    const double s = a + b;
    const double t = s - a;
    if (std::isfinite(s) && std::isfinite(t)) {
        const double err = (a - (s - t)) + (b - t); // exact: a + b == s + err
        return err >= 0.0 ? s : down(s);
    }
    return down(s);
}

[[nodiscard]] inline double sum_hi(double a, double b) {
    const double s = a + b;
    const double t = s - a;
    if (std::isfinite(s) && std::isfinite(t)) {
        const double err = (a - (s - t)) + (b - t);
        return err <= 0.0 ? s : up(s);
    }
    return up(s);
}

[[nodiscard]] inline double prod_lo(double a, double b) {
    const double p = a * b;
    if (a == 0.0 || b == 0.0) return p;
    if (std::isnormal(p) && std::fabs(p) >= kResidualGuard) {
        const double err = std::fma(a, b, -p); // exact: a * b == p + err
        return err >= 0.0 ? p : down(p);
    }
    return down(p);
}

[[nodiscard]] inline double prod_hi(double a, double b) {
    const double p = a * b;
    if (a == 0.0 || b == 0.0) return p;
    if (std::isnormal(p) && std::fabs(p) >= kResidualGuard) {
        const double err = std::fma(a, b, -p);
        return err <= 0.0 ? p : up(p);
    }
    return up(p);
}

[[nodiscard]] inline double quot_lo(double a, double b) {
    const double q = a / b;
    if (a == 0.0) return q;
    if (std::isnormal(q) && std::isnormal(a) && std::fabs(a) >= kResidualGuard) {
        const double r = std::fma(q, b, -a); // exact: q * b - a; true q - q = -r/b
        const bool q_not_above = (b > 0.0) ? (r <= 0.0) : (r >= 0.0);
        return q_not_above ? q : down(q);
    }
    return down(q);
}

[[nodiscard]] inline double quot_hi(double a, double b) {
    const double q = a / b;
    if (a == 0.0) return q;
    if (std::isnormal(q) && std::isnormal(a) && std::fabs(a) >= kResidualGuard) {
        const double r = std::fma(q, b, -a);
        const bool q_not_below = (b > 0.0) ? (r >= 0.0) : (r <= 0.0);
        return q_not_below ? q : up(q);
    }
    return up(q);
}

// Monotone integer key: k(a) < k(b) iff a < b over all finite doubles.
[[nodiscard]] inline std::int64_t order_key(double x) {
    auto i = std::bit_cast<std::int64_t>(x);
    return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
}

// Number of representable doubles strictly between a and b, plus one if
// they differ (i.e. steps of nextafter from a to b).
[[nodiscard]] inline std::int64_t ulp_distance(double a, double b) {
    const std::int64_t d = order_key(b) - order_key(a);
    return d < 0 ? -d : d;
}

} // namespace detail

// Closed interval [lo, hi] of finite doubles.  Every operation returns an
// interval containing the exact real-arithmetic image of its operands
// (containment contract): endpoint arithmetic is directed via exact
// residual tests (widening only when the native result is inexact in the
// unfavourable direction), with a one-step outward fallback outside the
// trusted residual range and a larger audited slack where the native
// routine is not correctly rounded (asin).
struct interval {
    double lo;
    double hi;

    interval(double point) : interval(point, point) {} // NOLINT: implicit by design
    interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi))
            throw domain_error("interval: endpoints must be finite with lo <= hi");
    }

    [[nodiscard]] bool contains(double x) const { return lo <= x && x <= hi; }
    [[nodiscard]] bool contains(const interval& inner) const {
        return lo <= inner.lo && inner.hi <= hi;
    }
    [[nodiscard]] double width() const { return hi - lo; }
    [[nodiscard]] double mid() const { return 0.5 * (lo + hi); }
    [[nodiscard]] double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }

    friend bool operator==(const interval& a, const interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

[[nodiscard]] inline interval operator-(const interval& a) { return {-a.hi, -a.lo}; }

[[nodiscard]] inline interval operator+(const interval& a, const interval& b) {
    return {detail::sum_lo(a.lo, b.lo), detail::sum_hi(a.hi, b.hi)};
}

[[nodiscard]] inline interval operator-(const interval& a, const interval& b) {
    return {detail::sum_lo(a.lo, -b.hi), detail::sum_hi(a.hi, -b.lo)};
}

[[nodiscard]] inline interval operator*(const interval& a, const interval& b) {
    const double lo = std::min({detail::prod_lo(a.lo, b.lo), detail::prod_lo(a.lo, b.hi),
                                detail::prod_lo(a.hi, b.lo), detail::prod_lo(a.hi, b.hi)});
    const double hi = std::max({detail::prod_hi(a.lo, b.lo), detail::prod_hi(a.lo, b.hi),
                                detail::prod_hi(a.hi, b.lo), detail::prod_hi(a.hi, b.hi)});
    return {lo, hi};
}

[[nodiscard]] inline interval operator/(const interval& a, const interval& b) {
    if (b.lo <= 0.0 && 0.0 <= b.hi)
        throw domain_error("interval division: denominator contains zero");
    const double lo = std::min({detail::quot_lo(a.lo, b.lo), detail::quot_lo(a.lo, b.hi),
                                detail::quot_lo(a.hi, b.lo), detail::quot_lo(a.hi, b.hi)});
    const double hi = std::max({detail::quot_hi(a.lo, b.lo), detail::quot_hi(a.lo, b.hi),
                                detail::quot_hi(a.hi, b.lo), detail::quot_hi(a.hi, b.hi)});
    return {lo, hi};
}

inline interval& operator+=(interval& a, const interval& b) { return a = a + b; }
inline interval& operator-=(interval& a, const interval& b) { return a = a - b; }
inline interval& operator*=(interval& a, const interval& b) { return a = a * b; }
inline interval& operator/=(interval& a, const interval& b) { return a = a / b; }

// Tightest representable enclosure of the rational num/den: a point when
// the quotient is exact, widened on the deficient side only otherwise.
// |num|, |den| must stay below 2^53 so their double conversions are exact.
[[nodiscard]] inline interval rat(long long num, long long den) {
    if (den == 0) throw domain_error("rat: zero denominator");
    const double n = static_cast<double>(num), d = static_cast<double>(den);
    return {detail::quot_lo(n, d), detail::quot_hi(n, d)};
}

[[nodiscard]] inline interval hull(const interval& a, const interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

[[nodiscard]] inline interval abs_i(const interval& a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return -a;
    return {0.0, a.mag()};
}

// Enclosure of pi, one ulp wide: M_PI < pi < nextafter(M_PI, +inf).
[[nodiscard]] inline interval pi_i() {
    return {0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1};
}

namespace detail {

// sqrt is correctly rounded (IEEE 754); the fma residual of r*r - x gives
// the rounding direction, so exact square roots stay points.
[[nodiscard]] inline double sqrt_lo(double x) {
    if (x == 0.0) return 0.0;
    const double r = std::sqrt(x);
    if (std::isnormal(r) && std::isnormal(x) && x >= kResidualGuard) {
        const double res = std::fma(r, r, -x); // sign of r^2 - x
        return res <= 0.0 ? r : std::max(0.0, down(r));
    }
    return std::max(0.0, down(r));
}

[[nodiscard]] inline double sqrt_hi(double x) {
    if (x == 0.0) return 0.0;
    const double r = std::sqrt(x);
    if (std::isnormal(r) && std::isnormal(x) && x >= kResidualGuard) {
        const double res = std::fma(r, r, -x);
        return res >= 0.0 ? r : up(r);
    }
    return up(r);
}

} // namespace detail

[[nodiscard]] inline interval sqrt_i(const interval& a) {
    if (a.lo < 0.0) throw domain_error("sqrt_i: negative lower endpoint");
    return {detail::sqrt_lo(a.lo), detail::sqrt_hi(a.hi)};
}

// Integer power.  Even powers of a zero-straddling interval are evaluated
// as a range of |x|^n to avoid the spurious negative lobe of repeated
// self-multiplication.
[[nodiscard]] inline interval pow_i(const interval& a, int n) {
    if (n < 0) return interval(1.0) / pow_i(a, -n);
    if (n == 0) return interval(1.0);
    if (n % 2 == 0 && a.lo < 0.0 && 0.0 < a.hi) {
        interval m{0.0, a.mag()};
        interval r(1.0);
        for (int i = 0; i < n; ++i) r *= m;
        return {0.0, r.hi};
    }
    interval r(1.0);
    for (int i = 0; i < n; ++i) r *= a;
    return r;
}

namespace detail {

// One-time audit of the native asin against correctly rounded references.
// Native within 2 ulps of a <=0.5 ulp reference means native error < 2.5
// ulps on the probes; arcsin_i applies a 4-ulp outward slack.
inline void arcsin_self_test() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        for (const auto& [x, ref] : arcsin_references) {
            if (ulp_distance(std::asin(x), ref) > 2)
                throw numerical_error(
                    "arcsin self-test: native asin(" + std::to_string(x) +
                    ") deviates from reference by more than 2 ulps");
        }
    });
}

[[nodiscard]] inline double step_down(double x, int n) {
    for (int i = 0; i < n; ++i) x = down(x);
    return x;
}

[[nodiscard]] inline double step_up(double x, int n) {
    for (int i = 0; i < n; ++i) x = up(x);
    return x;
}

} // namespace detail

// Enclosure of arcsin over [a.lo, a.hi] subset of [-1, 1].  asin is
// monotone, so endpoint evaluation with the audited 4-ulp slack encloses;
// arcsin(0) = 0 is kept exact.
[[nodiscard]] inline interval arcsin_i(const interval& a) {
    if (a.lo < -1.0 || a.hi > 1.0)
        throw domain_error("arcsin_i: argument outside [-1, 1]");
    detail::arcsin_self_test();
    const double lo = a.lo == 0.0 ? 0.0 : detail::step_down(std::asin(a.lo), 4);
    const double hi = a.hi == 0.0 ? 0.0 : detail::step_up(std::asin(a.hi), 4);
    return {lo, hi};
}

} // namespace syl
