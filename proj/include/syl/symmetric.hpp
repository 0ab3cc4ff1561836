#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "syl/errors.hpp"

namespace syl {

// Eigenvalue list of a (1,1)-tensor at a point; dimension n >= 3.
struct spectrum {
    std::vector<double> values;

    explicit spectrum(std::vector<double> v) : values(std::move(v)) {
        if (values.size() < 3)
            throw domain_error("spectrum: dimension must be >= 3");
        for (double x : values)
            if (!std::isfinite(x))
                throw domain_error("spectrum: entries must be finite");
    }

    [[nodiscard]] int n() const { return static_cast<int>(values.size()); }
};

// Exact binomial coefficient (values used here are far below 2^53).
[[nodiscard]] inline double binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw domain_error("binomial: need 0 <= k <= n");
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    return static_cast<double>(r);
}

namespace detail {

// e_0..e_kmax of the values, by the degree-truncated product recurrence:
// appending a root x updates e_j += x e_{j-1} for j descending.  O(n kmax),
// exact on integer inputs up to the double significand.
[[nodiscard]] inline std::vector<double> elementary_all(const std::vector<double>& vals, int kmax) {
    std::vector<double> e(static_cast<std::size_t>(kmax) + 1, 0.0);
    e[0] = 1.0;
    int seen = 0;
    for (double x : vals) {
        ++seen;
        for (int j = std::min(kmax, seen); j >= 1; --j)
            e[static_cast<std::size_t>(j)] += x * e[static_cast<std::size_t>(j) - 1];
    }
    return e;
}

inline void check_k_range(const spectrum& s, int k) {
    if (k < 1 || k > s.n())
        throw domain_error("sigma: k must satisfy 1 <= k <= n");
}

inline void check_nk_range(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw domain_error("constant: need 1 <= k <= n");
}

} // namespace detail

// Elementary symmetric polynomial sigma_k of the spectrum.
[[nodiscard]] inline double sigma_k(const spectrum& s, int k) {
    detail::check_k_range(s, k);
    return detail::elementary_all(s.values, k)[static_cast<std::size_t>(k)];
}

// Membership in the open cone Gamma_k^+: sigma_j > 0 strictly for all
// j = 1..k (the computable description of the component of {sigma_k > 0}
// containing the positive cone).  Boundary points report false.
[[nodiscard]] inline bool in_gamma_k_plus(const spectrum& s, int k) {
    detail::check_k_range(s, k);
    const auto e = detail::elementary_all(s.values, k);
    for (int j = 1; j <= k; ++j)
        if (!(e[static_cast<std::size_t>(j)] > 0.0)) return false;
    return true;
}

// All sigma_1..sigma_n plus the largest k whose cone contains the spectrum.
struct cone_report {
    int max_k = 0;
    std::vector<double> sigmas; // sigma_1..sigma_n
};

[[nodiscard]] inline cone_report classify_cone(const spectrum& s) {
    const auto e = detail::elementary_all(s.values, s.n());
    cone_report r;
    r.sigmas.assign(e.begin() + 1, e.end());
    while (r.max_k < s.n() && r.sigmas[static_cast<std::size_t>(r.max_k)] > 0.0)
        ++r.max_k;
    return r;
}

// C(n,k)^{-1/k} sigma_k^{1/k}; defined on Gamma_k^+ and non-increasing in k
// there (Maclaurin chain).
[[nodiscard]] inline double normalized_sigma(const spectrum& s, int k) {
    detail::check_k_range(s, k);
    if (!in_gamma_k_plus(s, k))
        throw cone_error("normalized_sigma: spectrum not in Gamma_k^+");
    return std::pow(sigma_k(s, k) / binomial(s.n(), k), 1.0 / k);
}

// The constant multiple of the identity with sigma_k = 1: C(n,k)^{-1/k}.
[[nodiscard]] inline double lambda_k(int n, int k) {
    detail::check_nk_range(n, k);
    return std::pow(binomial(n, k), -1.0 / k);
}

// sigma_k of the unit round sphere's conformal curvature tensor (eigenvalues
// all 1/2): C(n,k) 2^{-k}, exact in binary.
[[nodiscard]] inline double sigma_k_sphere(int n, int k) {
    detail::check_nk_range(n, k);
    return std::ldexp(binomial(n, k), -k);
}

// Normalization constant (n lambda_k)^{-1} = C(n,k)^{1/k} / n.
[[nodiscard]] inline double gamma_kn(int n, int k) {
    detail::check_nk_range(n, k);
    return std::pow(binomial(n, k), 1.0 / k) / n;
}

} // namespace syl
