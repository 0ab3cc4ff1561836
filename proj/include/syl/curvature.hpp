#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <utility>

#include "syl/errors.hpp"
#include "syl/symmetric.hpp"

namespace syl {

namespace detail {

inline void check_symmetric(const Eigen::MatrixXd& m, const char* what) {
    const double scale = 1.0 + m.cwiseAbs().maxCoeff();
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw domain_error(std::string(what) + ": matrix must be symmetric");
}

} // namespace detail

// Pointwise curvature data: metric, Ricci tensor, scalar curvature.  The
// scalar curvature must equal trace(g^{-1} ric) (1e-10 relative), so
// inconsistent fixtures fail at construction.
struct curvature_point {
    int n;
    Eigen::MatrixXd g;
    Eigen::MatrixXd ric;
    double R;

    curvature_point(Eigen::MatrixXd g_, Eigen::MatrixXd ric_, double R_)
        : n(static_cast<int>(g_.rows())), g(std::move(g_)), ric(std::move(ric_)), R(R_) {
        if (g.rows() != g.cols() || ric.rows() != n || ric.cols() != n)
            throw domain_error("curvature_point: g and ric must be square of equal size");
        detail::check_symmetric(g, "curvature_point metric");
        detail::check_symmetric(ric, "curvature_point ricci");
        Eigen::LLT<Eigen::MatrixXd> llt(g);
        if (llt.info() != Eigen::Success)
            throw domain_error("curvature_point: metric must be positive definite");
        const double tr = (llt.solve(ric)).trace();
        if (std::abs(R - tr) > 1e-10 * std::max(1.0, std::abs(R)))
            throw domain_error("curvature_point: scalar curvature inconsistent with trace(g^{-1} ric)");
    }
};

// The unit round sphere S^n: g = I, ric = (n-1) g, R = n(n-1).
[[nodiscard]] inline curvature_point unit_sphere_point(int n) {
    if (n < 3) throw domain_error("unit_sphere_point: need n >= 3");
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    return {id, (n - 1.0) * id, n * (n - 1.0)};
}

// Conformal-factor 2-jet at a point: value, gradient, covariant Hessian.
struct conformal_jet {
    double u;
    Eigen::VectorXd du;
    Eigen::MatrixXd hess_u;

    conformal_jet(double u_, Eigen::VectorXd du_, Eigen::MatrixXd hess_)
        : u(u_), du(std::move(du_)), hess_u(std::move(hess_)) {
        if (hess_u.rows() != hess_u.cols() || hess_u.rows() != du.size())
            throw domain_error("conformal_jet: gradient/Hessian sizes disagree");
        detail::check_symmetric(hess_u, "conformal_jet hessian");
    }

    [[nodiscard]] static conformal_jet zero(int n) {
        return {0.0, Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Zero(n, n)};
    }
};

// Trace-adjusted Ricci tensor A = (ric - R g / (2(n-1))) / (n-2); its
// g-trace is R / (2(n-1)).
[[nodiscard]] inline Eigen::MatrixXd schouten(const curvature_point& p) {
    if (p.n < 3) throw domain_error("schouten: need n >= 3");
    return (p.ric - (p.R / (2.0 * (p.n - 1))) * p.g) / (p.n - 2.0);
}

// Transformation of A under a conformal change with 2-jet (u, du, hess):
// A_u = A + hess + du (x) du - |du|_g^2 g / 2.
[[nodiscard]] inline Eigen::MatrixXd conformal_schouten(const Eigen::MatrixXd& A,
                                                        const conformal_jet& jet,
                                                        const Eigen::MatrixXd& g) {
    const auto n = A.rows();
    if (A.cols() != n || g.rows() != n || g.cols() != n || jet.du.size() != n)
        throw domain_error("conformal_schouten: shape mismatch");
    const Eigen::VectorXd gdu = g.ldlt().solve(jet.du); // g^{-1} du
    const double grad_sq = jet.du.dot(gdu);             // |du|_g^2
    return A + jet.hess_u + jet.du * jet.du.transpose() - 0.5 * grad_sq * g;
}

// Eigenvalues of g^{-1} M for symmetric M and SPD g.
[[nodiscard]] inline spectrum relative_spectrum(const Eigen::MatrixXd& M,
                                                const Eigen::MatrixXd& g) {
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(M, g, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw numerical_error("relative_spectrum: eigensolver failed");
    const auto& ev = es.eigenvalues();
    return spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

// Pointwise defect of the conformally-transformed curvature against the
// round-sphere normalization: sigma_k^{1/k}(g^{-1}A_u) - sigma_k^{1/k}(S^n) e^{-2u}.
[[nodiscard]] inline double yamabe_residual(const curvature_point& p,
                                            const conformal_jet& jet, int k) {
    const Eigen::MatrixXd Au = conformal_schouten(schouten(p), jet, p.g);
    const spectrum spec = relative_spectrum(Au, p.g);
    if (!in_gamma_k_plus(spec, k))
        throw cone_error("yamabe_residual: transformed curvature not in Gamma_k^+");
    const double lhs = std::pow(sigma_k(spec, k), 1.0 / k);
    const double rhs = std::pow(sigma_k_sphere(p.n, k), 1.0 / k) * std::exp(-2.0 * jet.u);
    return lhs - rhs;
}

// Coefficient c with Ric >= c R g for admissible metrics in the
// supercritical range k > n/2 (k >= 2): c = (2k-n) / (2n(k-1)).
[[nodiscard]] inline double gvw_ricci_coefficient(int n, int k) {
    if (k < 2 || k > n || 2 * k <= n)
        throw domain_error("gvw_ricci_coefficient: need n/2 < k <= n and k >= 2");
    return (2.0 * k - n) / (2.0 * n * (k - 1.0));
}

// Volume of the unit n-sphere, by the two-step recurrence
// vol(S^n) = vol(S^{n-2}) * 2 pi / (n-1).
[[nodiscard]] inline double sphere_volume(int n) {
    if (n < 1) throw domain_error("sphere_volume: need n >= 1");
    constexpr double pi = std::numbers::pi;
    double vol = n % 2 == 1 ? 2.0 * pi : 4.0 * pi; // S^1 resp. S^2
    for (int m = n % 2 == 1 ? 3 : 4; m <= n; m += 2)
        vol *= 2.0 * pi / (m - 1.0);
    return n == 1 ? 2.0 * pi : vol;
}

// Diameter and volume bounds for a complete metric with Ric >= rho g,
// rho > 0: diameter <= pi sqrt((n-1)/rho) and volume <= that of the
// comparison sphere of constant curvature rho/(n-1).
struct comparison_bounds {
    double diameter;
    double volume;
};

[[nodiscard]] inline comparison_bounds myers_bishop_bound(int n, double ricci_lower) {
    if (n < 2) throw domain_error("myers_bishop_bound: need n >= 2");
    if (!(ricci_lower > 0.0))
        throw domain_error("myers_bishop_bound: Ricci lower bound must be positive");
    const double r2 = (n - 1.0) / ricci_lower; // squared comparison radius
    return {std::numbers::pi * std::sqrt(r2),
            std::pow(r2, 0.5 * n) * sphere_volume(n)};
}

// Four-dimensional topological bound (2/9) pi^2 (2 chi + 3 tau) on the
// conformal volume invariant, with the strict-subcriticality flag
// 2 chi + 3 tau < 12 (below the round-sphere volume 8 pi^2 / 3).
struct four_d_bound {
    double bound;
    bool subcritical;
};

[[nodiscard]] inline four_d_bound lambda_bound_4d(int chi, int tau) {
    const double combo = 2.0 * chi + 3.0 * tau;
    constexpr double pi = std::numbers::pi;
    return {(2.0 / 9.0) * pi * pi * combo, combo < 12.0};
}

} // namespace syl
