#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "syl/errors.hpp"
#include "syl/symmetric.hpp"

namespace syl {

// Real scalar field sampled on a uniform periodic grid (flat torus),
// dimension 1 or 2, row-major storage.
struct periodic_field {
    int dim;
    std::vector<int> shape;
    std::vector<double> values;
    double spacing;

    periodic_field(std::vector<int> shape_, std::vector<double> values_, double spacing_)
        : dim(static_cast<int>(shape_.size())), shape(std::move(shape_)),
          values(std::move(values_)), spacing(spacing_) {
        if (dim < 1 || dim > 2)
            throw domain_error("periodic_field: dimension must be 1 or 2");
        std::size_t total = 1;
        for (int s : shape) {
            if (s < 1) throw domain_error("periodic_field: axis sizes must be positive");
            total *= static_cast<std::size_t>(s);
        }
        if (total != values.size())
            throw domain_error("periodic_field: value count does not match shape");
        if (!(spacing > 0.0))
            throw domain_error("periodic_field: spacing must be positive");
    }

    [[nodiscard]] double volume() const {
        double v = 1.0;
        for (int s : shape) v *= s * spacing;
        return v;
    }

    [[nodiscard]] double mean() const {
        return std::accumulate(values.begin(), values.end(), 0.0) /
               static_cast<double>(values.size());
    }
};

// Which discrete symbol inverts the Laplacian: the continuum symbol
// -(2 pi q / L)^2 (spectrally exact on trigonometric data) or the
// second-difference symbol -(2 - 2 cos(2 pi q / N)) / spacing^2 (the exact
// inverse of the stencil used by apply_linearized).
enum class laplace_symbol { spectral, finite_difference };

namespace detail {

inline void dft_all_axes(std::vector<std::complex<double>>& data,
                         const std::vector<int>& shape, bool inverse) {
    Eigen::FFT<double> fft;
    const int rows = shape.size() == 2 ? shape[0] : 1;
    const int cols = shape.size() == 2 ? shape[1] : shape[0];
    std::vector<std::complex<double>> line, out;

    // Transform along the last (contiguous) axis.
    for (int r = 0; r < rows; ++r) {
        line.assign(data.begin() + static_cast<std::ptrdiff_t>(r) * cols,
                    data.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols);
        out.resize(line.size());
        if (inverse) fft.inv(out, line); else fft.fwd(out, line);
        std::copy(out.begin(), out.end(),
                  data.begin() + static_cast<std::ptrdiff_t>(r) * cols);
    }
    if (shape.size() == 1) return;

    // Transform along the first axis (strided gather/scatter).
    for (int c = 0; c < cols; ++c) {
        line.resize(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r)
            line[static_cast<std::size_t>(r)] = data[static_cast<std::size_t>(r) * cols + c];
        out.resize(line.size());
        if (inverse) fft.inv(out, line); else fft.fwd(out, line);
        for (int r = 0; r < rows; ++r)
            data[static_cast<std::size_t>(r) * cols + c] = out[static_cast<std::size_t>(r)];
    }
}

// Negated Laplacian symbol for frequency index q on an axis of N points.
[[nodiscard]] inline double axis_symbol(int q, int N, double spacing, laplace_symbol sym) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (sym == laplace_symbol::spectral) {
        const int signed_q = q > N / 2 ? q - N : q;
        const double omega = two_pi * signed_q / (N * spacing);
        return omega * omega;
    }
    return (2.0 - 2.0 * std::cos(two_pi * q / N)) / (spacing * spacing);
}

} // namespace detail

// Solve gamma_{k,n} Lap(h) + 2 mean(h) = f on the unit-volume torus by the
// split h = h1 + mean(f)/2 with gamma Lap(h1) = f - mean(f), mean(h1) = 0.
// The zero Fourier mode carries the mean term; every other mode is divided
// by the (strictly negative) Laplacian symbol, so the problem is always
// solvable and the solution unique.
[[nodiscard]] inline periodic_field
solve_linearized_periodic(const periodic_field& f, int n, int k,
                          laplace_symbol sym = laplace_symbol::spectral) {
    const double gamma = gamma_kn(n, k);
    for (int s : f.shape)
        if (s < 4) throw domain_error("solve_linearized_periodic: need >= 4 points per axis");
    if (std::abs(f.volume() - 1.0) > 1e-12)
        throw domain_error("solve_linearized_periodic: grid must have unit volume");

    const double fbar = f.mean();
    std::vector<std::complex<double>> coef(f.values.begin(), f.values.end());
    detail::dft_all_axes(coef, f.shape, /*inverse=*/false);

    const int rows = f.dim == 2 ? f.shape[0] : 1;
    const int cols = f.dim == 2 ? f.shape[1] : f.shape[0];
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const std::size_t idx = static_cast<std::size_t>(r) * cols + c;
            if (r == 0 && c == 0) {
                coef[idx] = 0.0; // zero mode: mean(h1) = 0
                continue;
            }
            double s = detail::axis_symbol(c, cols, f.spacing, sym);
            if (f.dim == 2) s += detail::axis_symbol(r, rows, f.spacing, sym);
            coef[idx] /= -gamma * s;
        }
    }

    detail::dft_all_axes(coef, f.shape, /*inverse=*/true);
    std::vector<double> h(f.values.size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = coef[i].real() + 0.5 * fbar;
    return {f.shape, std::move(h), f.spacing};
}

// Evaluate gamma_{k,n} Lap(h) + 2 mean(h) with the 3-point (1-D) or 5-point
// (2-D) second-difference Laplacian; the residual check for the solver.
[[nodiscard]] inline periodic_field apply_linearized(const periodic_field& h, int n, int k) {
    const double gamma = gamma_kn(n, k);
    const double inv_h2 = 1.0 / (h.spacing * h.spacing);
    const double mean_term = 2.0 * h.mean();
    std::vector<double> out(h.values.size());
    if (h.dim == 1) {
        const int N = h.shape[0];
        for (int j = 0; j < N; ++j) {
            const double lap = (h.values[static_cast<std::size_t>((j + N - 1) % N)] -
                                2.0 * h.values[static_cast<std::size_t>(j)] +
                                h.values[static_cast<std::size_t>((j + 1) % N)]) * inv_h2;
            out[static_cast<std::size_t>(j)] = gamma * lap + mean_term;
        }
    } else {
        const int R = h.shape[0], C = h.shape[1];
        auto at = [&](int r, int c) {
            return h.values[static_cast<std::size_t>((r + R) % R) * C +
                            static_cast<std::size_t>((c + C) % C)];
        };
        for (int r = 0; r < R; ++r) {
            for (int c = 0; c < C; ++c) {
                const double lap = (at(r - 1, c) + at(r + 1, c) + at(r, c - 1) +
                                    at(r, c + 1) - 4.0 * at(r, c)) * inv_h2;
                out[static_cast<std::size_t>(r) * C + c] = gamma * lap + mean_term;
            }
        }
    }
    return {h.shape, std::move(out), h.spacing};
}

} // namespace syl
