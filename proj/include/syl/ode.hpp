#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "syl/errors.hpp"

namespace syl {

// Embedded Dormand-Prince 5(4) integrator with adaptive step control.
//
// rhs(t, y) returns the derivative of the state array y; a non-finite
// component (NaN from a guard in rhs, overflow, ...) rejects the step and
// retries with a smaller one, so rhs may mark invalid regions with NaN
// instead of throwing.  observer(t, y) runs after every accepted step;
// stop(t, y) returning true ends the integration early.  t1 may lie on
// either side of t0.  Persistent step-size collapse raises
// numerical_error.
template <std::size_t N, class Rhs, class Observer, class Stop>
void integrate_adaptive(Rhs&& rhs, std::array<double, N>& y, double t0, double t1,
                        double rtol, double atol, Observer&& observer, Stop&& stop) {
    using state = std::array<double, N>;
    if (t0 == t1) return;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    const double span = std::fabs(t1 - t0);

    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                     e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                     e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    double t = t0;
    double h = dir * 0.01 * span;

    const auto finite = [](const state& v) {
        for (double c : v)
            if (!std::isfinite(c)) return false;
        return true;
    };

    while (true) {
        bool final_step = false;
        if (dir * (t + h - t1) >= 0.0) {
            h = t1 - t;
            final_step = true;
        }

        const state k1 = rhs(t, y);
        state yt;
        auto blend = [&](auto&&... terms) {
            for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (... + terms(i));
        };
        blend([&](std::size_t i) { return a21 * k1[i]; });
        const state k2 = rhs(t + c2 * h, yt);
        blend([&](std::size_t i) { return a31 * k1[i]; }, [&](std::size_t i) { return a32 * k2[i]; });
        const state k3 = rhs(t + c3 * h, yt);
        blend([&](std::size_t i) { return a41 * k1[i]; }, [&](std::size_t i) { return a42 * k2[i]; },
              [&](std::size_t i) { return a43 * k3[i]; });
        const state k4 = rhs(t + c4 * h, yt);
        blend([&](std::size_t i) { return a51 * k1[i]; }, [&](std::size_t i) { return a52 * k2[i]; },
              [&](std::size_t i) { return a53 * k3[i]; }, [&](std::size_t i) { return a54 * k4[i]; });
        const state k5 = rhs(t + c5 * h, yt);
        blend([&](std::size_t i) { return a61 * k1[i]; }, [&](std::size_t i) { return a62 * k2[i]; },
              [&](std::size_t i) { return a63 * k3[i]; }, [&](std::size_t i) { return a64 * k4[i]; },
              [&](std::size_t i) { return a65 * k5[i]; });
        const state k6 = rhs(t + h, yt);

        state y5;
        for (std::size_t i = 0; i < N; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        const state k7 = rhs(t + h, y5);

        double err = 0.0;
        if (finite(k1) && finite(k2) && finite(k3) && finite(k4) && finite(k5) && finite(k6) &&
            finite(k7) && finite(y5)) {
            for (std::size_t i = 0; i < N; ++i) {
                const double scale =
                    atol + rtol * std::max(std::fabs(y[i]), std::fabs(y5[i]));
                const double e = h *
                                 (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]) /
                                 scale;
                err += e * e;
            }
            err = std::sqrt(err / static_cast<double>(N));
        } else {
            err = std::numeric_limits<double>::infinity();
        }

        if (err <= 1.0) {
            t = final_step ? t1 : t + h;
            y = y5;
            observer(t, y);
            if (stop(t, y) || final_step) return;
        }

        const double factor = std::isfinite(err) && err > 0.0
                                  ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0)
                                  : (err == 0.0 ? 5.0 : 0.2);
        h *= factor;
        if (dir * h > span) h = dir * span;
        if (std::fabs(h) < 1e-14 * std::max(1.0, std::fabs(t)))
            throw numerical_error("integrate_adaptive: step size underflow");
    }
}

} // namespace syl
