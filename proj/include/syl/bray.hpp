#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "syl/errors.hpp"
#include "syl/ode.hpp"
#include "syl/quadrature.hpp"

namespace syl {

// Unit round 3-sphere normalization: scalar curvature, Ricci eigenvalue,
// and volume of the comparison model.
inline constexpr double kScalarS3 = 6.0;
inline constexpr double kRicciS3 = 2.0;
inline const double kVolumeS3 = 2.0 * std::numbers::pi * std::numbers::pi;

struct alpha_evaluation {
    double epsilon;
    double alpha;
    double z_star;     // maximizing z
    double quad_error; // estimated quadrature error at the maximizer
    long n_evals;
};

struct path_sample {
    double x;
    double y;
    double volume; // accumulated integral of dx/y up to this point
};

struct phase_path_result {
    double epsilon;
    std::vector<path_sample> samples;
    double half_volume;
    double alpha_candidate; // 2 * half_volume / (volume of the unit 3-sphere)
};

struct epsilon_zero_bracket {
    double lo;
    double hi;
};

namespace detail {

inline double four_pi() { return 4.0 * std::numbers::pi; }

inline double z_min(double epsilon) { return four_pi() / (3.0 - 2.0 * epsilon); }

inline void check_epsilon_open(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("epsilon must lie in (0, 1); the epsilon = 1 limit is "
                           "handled as a convention by alpha() only");
}

// Validate z against [4pi/(3-2eps), 4pi] with a small relative slack and
// clamp it into the exact range, so callers sitting on an endpoint up to
// rounding are accepted.
inline double check_z(double z, double epsilon) {
    check_epsilon_open(epsilon);
    const double lo = z_min(epsilon), hi = four_pi();
    const double slack = 1e-12 * hi;
    if (!(z >= lo - slack && z <= hi + slack))
        throw domain_error("z outside [4pi/(3-2eps), 4pi]");
    return std::clamp(z, lo, hi);
}

} // namespace detail

// Height of the phase-plane crossing point: y(z) = z^(1/2)(4pi - z)/(2(1-eps)).
inline double y_of_z(double z, double epsilon) {
    z = detail::check_z(z, epsilon);
    return std::sqrt(z) * (detail::four_pi() - z) / (2.0 * (1.0 - epsilon));
}

// phi^3 = (4pi - z)/z and its inverse z = 4pi/(1 + phi^3): the compact
// parametrization of the z-range used by the closed forms.
inline double phi_of_z(double z) {
    const double hi = detail::four_pi();
    const double slack = 1e-12 * hi;
    if (!(z >= 0.5 * hi - slack && z <= hi + slack))
        throw domain_error("phi_of_z: z outside [2pi, 4pi]");
    z = std::clamp(z, 0.5 * hi, hi);
    return std::cbrt(std::max(0.0, (hi - z) / z));
}

inline double z_of_phi(double phi) {
    if (!(phi >= 0.0 && phi <= 1.0)) throw domain_error("z_of_phi: phi outside [0, 1]");
    return detail::four_pi() / (1.0 + phi * phi * phi);
}

namespace detail {

// First volume integral, after the substitution x = t^3.  The radicand
// 36pi - 27(1-eps)Y^(2/3) - 9 eps t^2 is rewritten around its value delta
// at the upper endpoint T = Y^(1/3):
//     radicand = delta + 9 eps (T - t)(T + t),
// with T - t supplied by the quadrature rule as the distance to the
// endpoint, so the inverse-square-root singularity that appears when
// delta = 0 (z at the lower end of its range) is evaluated stably.
inline quad_result i1_quad(double z, double epsilon, double tol) {
    const double y = y_of_z(z, epsilon);
    const double t_max = std::cbrt(y);
    double delta = 36.0 * std::numbers::pi - (27.0 - 18.0 * epsilon) * t_max * t_max;
    if (delta < -1e-10) throw domain_error("i1_quad: nonpositive radicand");
    delta = std::max(delta, 0.0);
    const double pi_sq = std::numbers::pi * std::numbers::pi;
    auto integrand = [=](double t, double, double dist_b) {
        return 3.0 * t * t / std::sqrt(delta + 9.0 * epsilon * dist_b * (t + t_max));
    };
    quad_result q = integrate(integrand, 0.0, t_max, tol);
    q.value /= pi_sq;
    q.error /= pi_sq;
    return q;
}

// Second volume integral, after x = t^3 and s = t z^(-1/2).  For every
// epsilon the radicand factors as (1 - s)(s^2 + s - w) with
// w = (4pi - z)/z; epsilon enters only through the lower limit
// s0 = (w/(2(1-eps)))^(1/3).  Both factors are evaluated from endpoint
// distances: 1 - s = dist_b exactly, and
//     s^2 + s - w = c0 + dist_a (s + s0 + 1),   c0 = s0^2 + s0 - w >= 0,
// which is cancellation-free when z approaches the lower end of its
// range (s0 -> 1, c0 -> 0).
inline quad_result i2_quad(double z, double epsilon, double tol) {
    z = check_z(z, epsilon);
    const double w = std::max(0.0, (four_pi() - z) / z);
    const double s0 = std::min(1.0, std::cbrt(w / (2.0 * (1.0 - epsilon))));
    double c0 = s0 * s0 + s0 - w;
    if (c0 < -1e-10) throw domain_error("i2_quad: nonpositive radicand");
    c0 = std::max(c0, 0.0);
    const double scale = z / (std::numbers::pi * std::numbers::pi);
    auto integrand = [=](double s, double dist_a, double dist_b) {
        return s * s * std::sqrt(s) /
               std::sqrt(dist_b * (c0 + dist_a * (s + s0 + 1.0)));
    };
    quad_result q = integrate(integrand, s0, 1.0, tol);
    q.value *= scale;
    q.error *= scale;
    return q;
}

} // namespace detail

inline double I1(double z, double epsilon) { return detail::i1_quad(z, epsilon, 1e-11).value; }

inline double I2(double z, double epsilon) { return detail::i2_quad(z, epsilon, 1e-11).value; }

// Closed form of the first integral in the phi parametrization (the
// epsilon = 1/2 normalization):
//   (4/pi)(1/(1+phi^3))(sqrt2/2)[P arcsin(phi/sqrt(P)) - sqrt(Q) phi],
// with P = 2 + 2phi^3 - 3phi^2 and Q = P - phi^2.
inline double I1_closed_form(double phi) {
    if (!(phi >= 0.0 && phi <= 1.0)) throw domain_error("I1_closed_form: phi outside [0, 1]");
    const double p3 = phi * phi * phi;
    const double p = 2.0 + 2.0 * p3 - 3.0 * phi * phi;
    const double q = p - phi * phi;
    const double arg = std::min(1.0, phi / std::sqrt(p));
    return (4.0 / std::numbers::pi) / (1.0 + p3) * (std::numbers::sqrt2 / 2.0) *
           (p * std::asin(arg) - std::sqrt(std::max(0.0, q)) * phi);
}

// Closed-form upper envelope for I1 + I2 on the phi range [4/5, 1]:
// replace arcsin(phi/sqrt(P)) by arcsin(phi) in the first integral and
// bound the second by its elementary majorant.
inline double i_sum_upper_bound(double phi) {
    if (!(phi >= 0.0 && phi <= 1.0)) throw domain_error("i_sum_upper_bound: phi outside [0, 1]");
    const double p3 = phi * phi * phi;
    const double poly = 2.0 - 3.0 * phi * phi + 2.0 * p3;
    return (4.0 / std::numbers::pi) / (1.0 + p3) *
           ((std::numbers::sqrt2 / 2.0) * poly * std::asin(phi) +
            std::sqrt(1.0 - phi) *
                (-phi * std::sqrt(1.0 + phi - phi * phi) + 4.0 / 3.0 + 2.0 * phi / 3.0));
}

// Derivative of i_sum_upper_bound, written out term by term; used as a
// floating-point cross-check of the certified sign analysis.
inline double i_sum_upper_bound_prime(double phi) {
    if (!(phi >= 0.0 && phi < 1.0))
        throw domain_error("i_sum_upper_bound_prime: phi outside [0, 1)");
    const double s2 = std::numbers::sqrt2;
    const double p2 = phi * phi, p3 = p2 * phi;
    const double den = 1.0 + p3;
    const double poly = 2.0 - 3.0 * p2 + 2.0 * p3;
    const double asin_phi = std::asin(phi);
    const double root_1mp = std::sqrt(1.0 - phi);
    const double root_mix = std::sqrt(1.0 + phi - p2);
    const double t1 = 2.0 * s2 * (-6.0 * phi + 6.0 * p2) * asin_phi / den;
    const double t2 = -6.0 * s2 * p2 * poly * asin_phi / (den * den);
    const double t3 = -2.0 * (4.0 / 3.0 + 2.0 * phi / 3.0) / (root_1mp * den);
    const double t4 = -2.0 * phi * (-4.0 * phi + 3.0 * p2) / (den * root_1mp * root_mix);
    const double t5 = 2.0 * s2 * poly / (std::sqrt(1.0 - p2) * den);
    const double t6 = -12.0 * root_1mp * (4.0 / 3.0 + 2.0 * phi / 3.0) * p2 / (den * den);
    const double t7 = 12.0 * p3 * root_1mp * root_mix / (den * den);
    const double t8 = 8.0 * root_1mp / (3.0 * den);
    const double t9 = -4.0 * root_1mp * root_mix / den;
    return (t1 + t2 + t3 + t4 + t5 + t6 + t7 + t8 + t9) / std::numbers::pi;
}

namespace detail {

struct sum_eval {
    double value;
    double error;
    long n_evals;
};

inline sum_eval i_sum(double z, double epsilon, double tol) {
    const quad_result q1 = i1_quad(z, epsilon, tol);
    const quad_result q2 = i2_quad(z, epsilon, tol);
    return {q1.value + q2.value, q1.error + q2.error, q1.n_evals + q2.n_evals};
}

struct best_point {
    double z = 0.0;
    double value = -1.0;
    double error = 0.0;
};

// Golden-section maximization of I1 + I2 over [lo, hi]; returns the best
// evaluated point.  Deterministic fixed iteration count.
inline best_point golden_max(double lo, double hi, double epsilon, double tol, long& n_evals) {
    constexpr double inv_golden = 0.6180339887498949;
    best_point best;
    auto eval = [&](double z) {
        const sum_eval s = i_sum(z, epsilon, tol);
        n_evals += s.n_evals;
        if (s.value > best.value) best = {z, s.value, s.error};
        return s.value;
    };
    double x1 = hi - inv_golden * (hi - lo);
    double x2 = lo + inv_golden * (hi - lo);
    double f1 = eval(x1), f2 = eval(x2);
    for (int iter = 0; iter < 48 && hi - lo > 1e-12; ++iter) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_golden * (hi - lo);
            f2 = eval(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_golden * (hi - lo);
            f1 = eval(x1);
        }
    }
    return best;
}

// Shared grid sweep: 256 uniform z samples.  alpha() refines around the
// global best; the football indicator refines around the best interior
// sample only (the endpoint contributes exactly 1 for every epsilon).
inline constexpr int kGridSize = 256;

} // namespace detail

// Maximal-volume ratio alpha(eps): supremum of I1 + I2 over the z range,
// located by a uniform grid plus golden-section refinement.  At eps = 1
// the z range degenerates to the single point 4pi and alpha = 1 exactly
// (the comparison reduces to the classical volume bound), returned as a
// convention without evaluating the 1/(1-eps) formula.
inline alpha_evaluation alpha(double epsilon, double tol = 1e-11) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw domain_error("alpha: epsilon outside (0, 1]");
    if (epsilon == 1.0) return {1.0, 1.0, detail::four_pi(), 0.0, 0};

    const double lo = detail::z_min(epsilon), hi = detail::four_pi();
    long n_evals = 0;
    std::array<detail::sum_eval, detail::kGridSize> grid{};
    int best = 0;
    for (int j = 0; j < detail::kGridSize; ++j) {
        const double z = lo + (hi - lo) * j / (detail::kGridSize - 1);
        grid[j] = detail::i_sum(z, epsilon, tol);
        n_evals += grid[j].n_evals;
        if (grid[j].value > grid[best].value) best = j;
    }
    const double step = (hi - lo) / (detail::kGridSize - 1);
    const double wlo = std::max(lo, lo + (best - 1) * step);
    const double whi = std::min(hi, lo + (best + 1) * step);
    detail::best_point refined = detail::golden_max(wlo, whi, epsilon, tol, n_evals);
    if (grid[best].value > refined.value) {
        const double zb = lo + best * step;
        refined = {best == detail::kGridSize - 1 ? hi : zb, grid[best].value, grid[best].error};
    }
    return {epsilon, refined.value, refined.z, refined.error, n_evals};
}

// Football indicator: does I1 + I2 exceed 1 strictly away from the z = 4pi
// endpoint?  The grid maximum excludes the two endpoint cells and the
// refinement window is clipped to the interior samples.
namespace detail {

inline bool interior_max_exceeds_one(double epsilon, double tol) {
    const double lo = z_min(epsilon), hi = four_pi();
    const double step = (hi - lo) / (kGridSize - 1);
    long n_evals = 0;
    int best = 1;
    std::array<double, kGridSize> value{};
    for (int j = 1; j <= kGridSize - 2; ++j) {
        const sum_eval s = i_sum(lo + j * step, epsilon, tol);
        value[j] = s.value;
        if (s.value > value[best]) best = j;
    }
    const double wlo = lo + std::max(1, best - 1) * step;
    const double whi = lo + std::min(kGridSize - 2, best + 1) * step;
    const best_point refined = golden_max(wlo, whi, epsilon, tol, n_evals);
    const double peak = std::max(refined.value, value[best]);
    return peak > 1.0 + 1e-9;
}

} // namespace detail

// Bisection bracket for the football threshold: the infimum of epsilon at
// which the interior supremum stops exceeding 1.
inline epsilon_zero_bracket epsilon0_bracket(double tol_eps = 1e-4) {
    double lo = 0.05, hi = 0.5;
    constexpr double quad_tol = 1e-10;
    while (hi - lo > tol_eps) {
        const double mid = 0.5 * (lo + hi);
        if (detail::interior_max_exceeds_one(mid, quad_tol))
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

inline double epsilon0(double tol_eps = 1e-4) {
    const epsilon_zero_bracket b = epsilon0_bracket(tol_eps);
    return 0.5 * (b.lo + b.hi);
}

// Equality-case phase-plane slope dy/dx: the larger of the scalar branch
// -(36pi - y^2)/(3 x^(2/3)) + (3/2) R0 and the Ricci branch 3 eps Ric0
// drives the descent.
inline double ode_rhs(double x, double y, double epsilon, double R0 = kScalarS3) {
    if (!(x > 0.0 && y > 0.0)) throw domain_error("ode_rhs: requires x > 0 and y > 0");
    const double x23 = std::cbrt(x) * std::cbrt(x);
    const double m = std::max(-(36.0 * std::numbers::pi - y * y) / (3.0 * x23) + 1.5 * R0,
                              3.0 * epsilon * kRicciS3);
    return -0.5 * m / (std::cbrt(x) * y);
}

// Integrate the equality-case path in the substituted variable t (x = t^3)
// from the positive y-axis down to the x-axis, accumulating the volume
// integral of dx/y.  The max in the slope selects the Ricci regime for
// x < y(z) and the scalar regime beyond it automatically.  Near the
// terminal point dy/dx blows up, so once y drops below a small threshold
// the roles swap and y becomes the independent variable, which reaches
// y = 0 exactly.
inline phase_path_result phase_path(double epsilon, double z) {
    z = detail::check_z(z, epsilon);
    const double y_cross = y_of_z(z, epsilon);
    const double t_cross = std::cbrt(y_cross);
    const double y0 =
        std::sqrt(std::max(0.0, 36.0 * std::numbers::pi - 27.0 * (1.0 - epsilon) * t_cross * t_cross));
    const double t_end = std::sqrt(z);
    constexpr double y_switch = 1e-3;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    phase_path_result path{epsilon, {}, 0.0, 0.0};
    path.samples.push_back({0.0, y0, 0.0});

    const auto slope_max = [epsilon](double t, double y) {
        return std::max(9.0 - (36.0 * std::numbers::pi - y * y) / (3.0 * t * t), 6.0 * epsilon);
    };

    // Descent phase: state (y, V) against t.  The slope has a derivative
    // jump where the path crosses x = y(z); a step straddling it fools the
    // embedded error estimate (both orders sample one branch), so the leg
    // boundary is pinned to the crossing abscissa.
    std::array<double, 2> state_t{y0, 0.0};
    double t_at_switch = 0.0;
    auto rhs_t = [&](double t, const std::array<double, 2>& s) -> std::array<double, 2> {
        if (!(s[0] > 0.0) || t < 0.0) return {nan, nan};
        if (t == 0.0) return {0.0, 0.0};
        return {-1.5 * t * slope_max(t, s[0]) / s[0], 3.0 * t * t / s[0]};
    };
    auto record = [&](double t, const std::array<double, 2>& s) {
        t_at_switch = t;
        path.samples.push_back({t * t * t, s[0], s[1]});
    };
    auto below_switch = [&](double, const std::array<double, 2>& s) {
        return s[0] < y_switch;
    };
    const double t_mid = std::clamp(t_cross, 0.0, t_end);
    if (t_mid > 0.0)
        integrate_adaptive<2>(rhs_t, state_t, 0.0, t_mid, 1e-9, 1e-12, record, below_switch);
    if (state_t[0] >= y_switch && t_mid < t_end)
        integrate_adaptive<2>(rhs_t, state_t, t_mid, t_end, 1e-9, 1e-12, record, below_switch);

    // Terminal phase: state (t, V) against y, integrated down to zero.
    std::array<double, 2> state_y{t_at_switch, state_t[1]};
    auto rhs_y = [&](double y, const std::array<double, 2>& s) -> std::array<double, 2> {
        if (!(s[0] > 0.0) || y < 0.0) return {nan, nan};
        const double m = slope_max(s[0], y);
        return {-2.0 * y / (3.0 * s[0] * m), -2.0 * s[0] / m};
    };
    if (state_t[0] < y_switch && state_t[0] > 0.0) {
        integrate_adaptive<2>(
            rhs_y, state_y, state_t[0], 0.0, 1e-9, 1e-12,
            [&](double y, const std::array<double, 2>& s) {
                path.samples.push_back({s[0] * s[0] * s[0], y, s[1]});
            },
            [](double, const std::array<double, 2>&) { return false; });
    }

    path.half_volume = state_y[1];
    path.alpha_candidate = 2.0 * path.half_volume / kVolumeS3;
    return path;
}

} // namespace syl
