#pragma once

#include <cmath>
#include <numbers>

#include "syl/errors.hpp"

namespace syl {

struct quad_result {
    double value;
    double error; // difference of the last two refinement levels
    long n_evals;
    int levels;
};

// Double-exponential (tanh-sinh) quadrature over [a, b].
//
// The integrand is invoked as f(x, dist_a, dist_b) with dist_a = x - a and
// dist_b = b - x computed without cancellation (directly from the
// transform's exponentials), so inverse-square-root endpoint
// singularities evaluate at full accuracy even where x itself rounds to
// an endpoint.  The transform is x = c + h*tanh((pi/2) sinh v) on a
// trapezoid ladder in v; each level halves the v-spacing and reuses all
// previous nodes.
template <class F>
quad_result integrate(F&& f, double a, double b, double tol = 1e-12) {
    if (!(std::isfinite(a) && std::isfinite(b)) || a > b)
        throw domain_error("integrate: invalid interval");
    if (a == b) return {0.0, 0.0, 0, 0};

    const double half = 0.5 * (b - a);
    const double half_pi = 0.5 * std::numbers::pi;
    // tanh((pi/2) sinh 4) differs from 1 by ~1e-37: distances down to
    // ~1e-37*(b-a) are resolved, ample for integrable singularities.
    constexpr double v_max = 4.0;
    constexpr int max_level = 12;

    long n_evals = 0;
    auto node = [&](double v) {
        const double q = half_pi * std::sinh(v);
        const double e2q = std::exp(2.0 * q);
        const double dist_b = 2.0 * half / (1.0 + e2q);
        const double dist_a = 2.0 * half * e2q / (1.0 + e2q);
        const double x = q >= 0.0 ? b - dist_b : a + dist_a;
        const double cosh_q = std::cosh(q);
        const double w = half * half_pi * std::cosh(v) / (cosh_q * cosh_q);
        ++n_evals;
        return w * f(x, dist_a, dist_b);
    };

    double h = 1.0;
    double sum = node(0.0);
    for (int k = 1; k * h <= v_max; ++k) sum += node(k * h) + node(-k * h);
    double previous = h * sum;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (int k = 1; k * h <= v_max; k += 2) sum += node(k * h) + node(-k * h);
        const double current = h * sum;
        const double error = std::fabs(current - previous);
        if (level >= 3 && error <= tol * std::max(1.0, std::fabs(current)))
            return {current, error, n_evals, level};
        previous = current;
    }
    throw numerical_error("integrate: tolerance not reached at maximum refinement");
}

} // namespace syl
